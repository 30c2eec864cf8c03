#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dspectra/bigint.hpp"

namespace dspectra {

// Univariate polynomial with exact integer coefficients, stored in
// ascending degree order. The zero polynomial is the empty vector; any
// other value has a nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> ascending);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  // Coefficient of x^i, zero beyond the degree.
  const Int& coeff(int i) const;
  const Int& leading() const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const Int& scalar) const;
  IntPolynomial operator-() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<Int> coeffs_;
};

Int eval(const IntPolynomial& p, const Int& x);
Rat eval(const IntPolynomial& p, const Rat& x);

IntPolynomial derivative(const IntPolynomial& p);
IntPolynomial pow(const IntPolynomial& p, int exponent);

struct SyntheticDivision {
  IntPolynomial quotient;
  Int remainder;
};

// p = (x - root) * quotient + remainder, exactly.
SyntheticDivision synthetic_divide(const IntPolynomial& p, const Int& root);

// Largest m with (x - root)^m dividing p. p must be nonzero.
int root_multiplicity(const IntPolynomial& p, const Int& root);

// gcd of the coefficients, non-negative; 0 for the zero polynomial.
Int content(const IntPolynomial& p);

// p with its content divided out; the leading coefficient keeps its sign.
IntPolynomial primitive_part(const IntPolynomial& p);

// Primitive gcd with positive leading coefficient, via a primitive
// pseudo-remainder sequence. Inputs need not be primitive.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'), primitive with positive leading coefficient: same real
// roots as p, all simple.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Number of distinct real roots of p strictly less than `bound`, by a
// Sturm sequence of the squarefree part evaluated exactly at -infinity
// and at the bound. p must be nonzero.
int count_roots_below(const IntPolynomial& p, const Rat& bound);

int count_distinct_real_roots(const IntPolynomial& p);

// All integer roots of a monic nonzero p with multiplicities, sorted
// ascending. Candidates are the divisors of the lowest nonzero
// coefficient (plus 0 when the constant term vanishes); each discovered
// root is deflated out by synthetic division.
std::vector<std::pair<Int, int>> integer_roots(const IntPolynomial& p);

std::string to_string(const IntPolynomial& p, std::string_view var = "x");

}  // namespace dspectra
