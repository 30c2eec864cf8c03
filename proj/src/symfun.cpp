#include "dspectra/symfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dspectra/polynomial.hpp"

namespace dspectra {

ElementarySymmetric elementary_symmetric(const std::vector<Int>& values,
                                         int upto) {
  if (upto < 0 || upto > static_cast<int>(values.size()))
    throw std::invalid_argument(
        "elementary_symmetric: upto must be in [0, multiset size]");
  std::vector<Int> e(static_cast<size_t>(upto) + 1, 0);
  e[0] = 1;
  // one value at a time: e_i += x * e_{i-1}, descending i
  for (const Int& x : values)
    for (int i = upto; i >= 1; --i) e[i] += x * e[i - 1];
  return ElementarySymmetric{std::move(e)};
}

PowerSums power_sums(const std::vector<Int>& values, int upto) {
  if (upto < 1) throw std::invalid_argument("power_sums: upto must be >= 1");
  std::vector<Int> psi(static_cast<size_t>(upto), 0);
  for (const Int& x : values) {
    Int p = 1;
    for (int t = 1; t <= upto; ++t) {
      p *= x;
      psi[t - 1] += p;
    }
  }
  return PowerSums{std::move(psi)};
}

PowerSums newton_p_from_e(const ElementarySymmetric& e, int count) {
  std::vector<Int> psi(static_cast<size_t>(std::max(count, 0)), 0);
  for (int t = 1; t <= count; ++t) {
    Int acc = (t % 2 == 1 ? Int(t) : Int(-t)) * e.e(t);
    for (int i = 1; i <= t - 1; ++i) {
      const Int term = e.e(i) * psi[static_cast<size_t>(t - i) - 1];
      acc += (i % 2 == 1) ? term : -term;
    }
    psi[static_cast<size_t>(t) - 1] = std::move(acc);
  }
  return PowerSums{std::move(psi)};
}

ElementarySymmetric newton_e_from_p(const PowerSums& p, int count) {
  if (count < 0 || count > p.count())
    throw std::invalid_argument("newton_e_from_p: need psi_1..psi_count");
  std::vector<Int> e(static_cast<size_t>(count) + 1, 0);
  e[0] = 1;
  for (int t = 1; t <= count; ++t) {
    Int acc = 0;
    for (int i = 1; i <= t; ++i) {
      const Int term = e[static_cast<size_t>(t - i)] * p.psi(i);
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % t != 0)
      throw std::domain_error(
          "not integral power sums of an integer multiset (division by " +
          std::to_string(t) + " is inexact)");
    e[static_cast<size_t>(t)] = acc / t;
  }
  return ElementarySymmetric{std::move(e)};
}

XiCoefficients xi_from_partition(const Partition& p) {
  const int k = p.part_count();
  std::vector<Int> shifted;
  shifted.reserve(p.parts().size());
  for (int n : p.parts()) shifted.emplace_back(n - 2);
  const ElementarySymmetric e = elementary_symmetric(shifted, k);
  std::vector<Int> xi(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) {
    Int val = Int(i + 1) * e.e(i) + Int(2 * (k + 1 - i)) * e.e(i - 1);
    xi[static_cast<size_t>(i) - 1] = (i % 2 == 0) ? val : -val;
  }
  return XiCoefficients{k, std::move(xi)};
}

ElementarySymmetric e_from_xi(const XiCoefficients& xi) {
  const int k = xi.k;
  if (k < 1 || static_cast<int>(xi.xi.size()) != k)
    throw std::invalid_argument("e_from_xi: xi must hold exactly k entries");
  std::vector<Int> e(static_cast<size_t>(k) + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= k; ++i) {
    const Int& x = xi.xi[static_cast<size_t>(i) - 1];
    Int num = ((i % 2 == 0) ? x : -x) - Int(2 * (k + 1 - i)) * e[static_cast<size_t>(i) - 1];
    if (num % (i + 1) != 0)
      throw std::domain_error(
          "not xi-coefficients of any partition (division by " +
          std::to_string(i + 1) + " is inexact)");
    e[static_cast<size_t>(i)] = num / (i + 1);
  }
  return ElementarySymmetric{std::move(e)};
}

std::vector<Int> multiset_from_powersums(const PowerSums& p, int k) {
  if (k < 1) throw std::invalid_argument("multiset size k must be >= 1");
  if (p.count() < k)
    throw std::invalid_argument("need at least k power sums");
  PowerSums head{std::vector<Int>(p.values.begin(), p.values.begin() + k)};
  const ElementarySymmetric e = newton_e_from_p(head, k);

  // monic polynomial with the multiset as its root set:
  // q(x) = sum_j (-1)^j E_j x^(k-j)
  std::vector<Int> ascending(static_cast<size_t>(k) + 1, 0);
  for (int j = 0; j <= k; ++j)
    ascending[static_cast<size_t>(k - j)] = (j % 2 == 0) ? e.e(j) : -e.e(j);
  const IntPolynomial q(std::move(ascending));

  std::vector<Int> multiset;
  int total = 0;
  for (const auto& [root, mult] : integer_roots(q)) {
    total += mult;
    for (int i = 0; i < mult; ++i) multiset.push_back(root);
  }
  if (total != k)
    throw std::domain_error(
        "no integer multiset has these power sums (only " +
        std::to_string(total) + " of " + std::to_string(k) +
        " roots are integers)");
  return multiset;
}

}  // namespace dspectra
