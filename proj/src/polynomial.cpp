#include "dspectra/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dspectra {

namespace {

void strip_leading_zeros(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int kZero = 0;

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> ascending)
    : coeffs_(std::move(ascending)) {
  strip_leading_zeros(coeffs_);
}

IntPolynomial IntPolynomial::constant(Int c) {
  return IntPolynomial(std::vector<Int>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(Int c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<Int> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

const Int& IntPolynomial::leading() const {
  if (is_zero())
    throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
  std::vector<Int> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

Int eval(const IntPolynomial& p, const Int& x) {
  Int acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
  return acc;
}

Rat eval(const IntPolynomial& p, const Rat& x) {
  Rat acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Rat(p.coeff(i));
  return acc;
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return IntPolynomial();
  std::vector<Int> out(static_cast<size_t>(p.degree()), 0);
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeff(i) * i;
  return IntPolynomial(std::move(out));
}

IntPolynomial pow(const IntPolynomial& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  IntPolynomial acc = IntPolynomial::constant(1);
  for (int i = 0; i < exponent; ++i) acc = acc * p;
  return acc;
}

SyntheticDivision synthetic_divide(const IntPolynomial& p, const Int& root) {
  if (p.is_zero())
    throw std::invalid_argument("synthetic division of the zero polynomial");
  const int n = p.degree();
  std::vector<Int> q(static_cast<size_t>(std::max(n, 0)), 0);
  Int carry = p.coeff(n);
  for (int i = n - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p.coeff(i) + root * carry;
  }
  return SyntheticDivision{IntPolynomial(std::move(q)), std::move(carry)};
}

int root_multiplicity(const IntPolynomial& p, const Int& root) {
  if (p.is_zero())
    throw std::invalid_argument("root multiplicity of the zero polynomial");
  int m = 0;
  IntPolynomial cur = p;
  while (cur.degree() >= 1) {
    auto [q, rem] = synthetic_divide(cur, root);
    if (rem != 0) break;
    ++m;
    cur = std::move(q);
  }
  return m;
}

Int content(const IntPolynomial& p) {
  Int g = 0;
  for (const Int& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const Int g = content(p);
  std::vector<Int> out = p.coeffs();
  for (auto& c : out) c /= g;
  return IntPolynomial(std::move(out));
}

namespace {

// Pseudo-remainder: lc(b)^j * a mod b for some j <= deg a - deg b + 1
// (one factor of lc(b) per reduction step). Requires deg a >= deg b >= 0.
// When multiplier_sign is given it receives the sign of lc(b)^j.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b,
                               int* multiplier_sign = nullptr) {
  const int db = b.degree();
  const Int& lb = b.leading();
  int msign = 1;
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const Int lead = a.leading();
    std::vector<Int> next(a.coeffs().size(), 0);
    for (int i = 0; i <= a.degree(); ++i) next[i] = a.coeff(i) * lb;
    for (int i = 0; i <= db; ++i) next[i + shift] -= lead * b.coeff(i);
    a = IntPolynomial(std::move(next));
    if (lb < 0) msign = -msign;
  }
  if (multiplier_sign) *multiplier_sign = msign;
  return a;
}

IntPolynomial with_positive_leading(IntPolynomial p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial f = primitive_part(a);
  IntPolynomial g = primitive_part(b);
  if (f.is_zero()) return with_positive_leading(std::move(g));
  if (g.is_zero()) return with_positive_leading(std::move(f));
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    if (g.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial r = pseudo_remainder(f, g);
    f = std::move(g);
    g = primitive_part(r);
  }
  return with_positive_leading(std::move(f));
}

namespace {

// Exact quotient of a by b; both must be primitive with b | a over Z.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact division by zero");
  if (a.is_zero()) return IntPolynomial();
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> q(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Int qi = rem[i + b.degree()] / b.leading();
    if (qi * b.leading() != rem[i + b.degree()])
      throw std::logic_error("inexact polynomial division");
    q[i] = qi;
    for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= qi * b.coeff(j);
  }
  for (const Int& c : rem)
    if (c != 0) throw std::logic_error("nonzero remainder in exact division");
  return IntPolynomial(std::move(q));
}

}  // namespace

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.degree() == 0) return IntPolynomial::constant(1);
  const IntPolynomial pp = primitive_part(p);
  const IntPolynomial g = gcd(pp, derivative(pp));
  return with_positive_leading(divide_exact(pp, g));
}

namespace {

// Sturm chain of a squarefree primitive polynomial. Pseudo-remainders are
// used with content stripping; the sign of the pseudo-remainder multiplier
// lc(g)^(delta+1) is compensated so each entry equals the classical Sturm
// remainder up to a positive factor.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& sf) {
  std::vector<IntPolynomial> chain;
  chain.push_back(sf);
  if (sf.degree() == 0) return chain;
  chain.push_back(primitive_part(derivative(sf)));
  while (chain.back().degree() > 0) {
    const IntPolynomial& f = chain[chain.size() - 2];
    const IntPolynomial& g = chain.back();
    int msign = 1;
    IntPolynomial r = pseudo_remainder(f, g, &msign);
    if (r.is_zero()) break;  // cannot happen for squarefree input
    // next = -(f mod g) up to a positive factor = -(r / lc^j)
    IntPolynomial next = (msign < 0) ? std::move(r) : -r;
    chain.push_back(primitive_part(std::move(next)));
  }
  return chain;
}

int sign_at_minus_infinity(const IntPolynomial& p) {
  const int s = sign_of(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int count_roots_below(const IntPolynomial& p, const Rat& bound) {
  if (p.is_zero())
    throw std::invalid_argument("root counting on the zero polynomial");
  if (p.degree() == 0) return 0;
  const IntPolynomial sf = squarefree_part(p);
  if (sf.degree() == 0) return 0;
  const auto chain = sturm_chain(sf);

  std::vector<int> at_neg_inf, at_bound;
  at_neg_inf.reserve(chain.size());
  at_bound.reserve(chain.size());
  for (const auto& s : chain) {
    at_neg_inf.push_back(sign_at_minus_infinity(s));
    at_bound.push_back(sign_of(eval(s, bound)));
  }
  // V(-inf) - V(b) counts roots in (-inf, b]; drop b itself if it is one.
  int count = count_variations(at_neg_inf) - count_variations(at_bound);
  if (at_bound.front() == 0) --count;
  return count;
}

int count_distinct_real_roots(const IntPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("root counting on the zero polynomial");
  if (p.degree() == 0) return 0;
  const IntPolynomial sf = squarefree_part(p);
  if (sf.degree() == 0) return 0;
  const auto chain = sturm_chain(sf);
  std::vector<int> at_neg_inf, at_pos_inf;
  for (const auto& s : chain) {
    at_neg_inf.push_back(sign_at_minus_infinity(s));
    at_pos_inf.push_back(sign_of(s.leading()));
  }
  return count_variations(at_neg_inf) - count_variations(at_pos_inf);
}

std::vector<std::pair<Int, int>> integer_roots(const IntPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("integer roots of the zero polynomial");
  if (!p.is_monic())
    throw std::invalid_argument("integer_roots requires a monic polynomial");

  std::vector<std::pair<Int, int>> roots;
  IntPolynomial cur = p;

  // roots at 0: leading zero coefficients in ascending order
  int zero_mult = 0;
  while (cur.degree() > 0 && cur.coeff(0) == 0) {
    cur = synthetic_divide(cur, 0).quotient;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(0, zero_mult);
  if (cur.degree() == 0) return roots;

  // Divisors of the constant term. Trial division is ample at desk scale;
  // the constants this library meets are products of shifted part sizes.
  const Int c = boost::multiprecision::abs(cur.coeff(0));
  std::vector<Int> divisors;
  for (Int d = 1; d * d <= c; ++d) {
    if (c % d == 0) {
      divisors.push_back(d);
      if (d * d != c) divisors.push_back(c / d);
    }
  }
  std::vector<Int> candidates;
  candidates.reserve(divisors.size() * 2);
  for (const Int& d : divisors) {
    candidates.push_back(d);
    candidates.push_back(-d);
  }
  std::sort(candidates.begin(), candidates.end());

  for (const Int& r : candidates) {
    int mult = 0;
    while (cur.degree() > 0) {
      auto [q, rem] = synthetic_divide(cur, r);
      if (rem != 0) break;
      cur = std::move(q);
      ++mult;
    }
    if (mult > 0) roots.emplace_back(r, mult);
    if (cur.degree() == 0) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

std::string to_string(const IntPolynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeff(i);
    if (c == 0) continue;
    const Int mag = boost::multiprecision::abs(c);
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) {
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace dspectra
