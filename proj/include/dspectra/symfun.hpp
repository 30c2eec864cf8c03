#pragma once

#include <vector>

#include "dspectra/bigint.hpp"
#include "dspectra/graph.hpp"

namespace dspectra {

// psi_1..psi_t of a ground multiset: psi_t = sum_j x_j^t.
struct PowerSums {
  std::vector<Int> values;

  int count() const { return static_cast<int>(values.size()); }
  const Int& psi(int t) const { return values.at(static_cast<size_t>(t) - 1); }
};

// E_0=1, E_1, ..., E_t of a ground multiset: E_i = e_i, the sum of all
// i-fold products of distinct values. Entries beyond the ground-set size
// are implicitly zero.
struct ElementarySymmetric {
  std::vector<Int> values;  // values[i] = E_i, values[0] == 1

  int upto() const { return static_cast<int>(values.size()) - 1; }
  Int e(int i) const {
    if (i < 0 || i > upto()) return 0;
    return values[static_cast<size_t>(i)];
  }
};

// Coefficients of g(lambda) = lambda^k + xi_1 lambda^(k-1) + ... + xi_k,
// the bracket factor of the complete-multipartite distance charpoly
// (xi_0 = 1 implicit).
struct XiCoefficients {
  int k = 0;
  std::vector<Int> xi;  // xi[i-1] = xi_i, length exactly k
};

ElementarySymmetric elementary_symmetric(const std::vector<Int>& values,
                                         int upto);

PowerSums power_sums(const std::vector<Int>& values, int upto);

// Newton's identities, e -> psi direction:
// psi_t = (-1)^(t-1) t E_t + sum_{i=1}^{t-1} (-1)^(i-1) E_i psi_{t-i}.
PowerSums newton_p_from_e(const ElementarySymmetric& e, int count);

// Inverse direction: E_t = (1/t) sum_{i=1}^{t} (-1)^(i-1) E_{t-i} psi_i.
// Every division is checked exact; failure means the input is not the
// power-sum vector of any integer multiset.
ElementarySymmetric newton_e_from_p(const PowerSums& p, int count);

// xi_i = (-1)^i [ (i+1) E_i + 2(k+1-i) E_{i-1} ] over the shifted ground
// set {n_1-2, ..., n_k-2}. The second term carries (-1)^i, not the
// (-1)^(i-1) sometimes quoted: (-1)^i is what direct expansion of the
// bracket forces, and what reproduces xi_1 = -2 psi_1 + 2k.
XiCoefficients xi_from_partition(const Partition& p);

// Constructive inverse of xi_from_partition:
// E_0 = 1, E_i = [ (-1)^i xi_i - 2(k+1-i) E_{i-1} ] / (i+1), checked exact.
ElementarySymmetric e_from_xi(const XiCoefficients& xi);

// The unique integer multiset of size k with the given first k power
// sums, sorted ascending. Throws std::domain_error when no integer
// multiset realizes them.
std::vector<Int> multiset_from_powersums(const PowerSums& p, int k);

}  // namespace dspectra
