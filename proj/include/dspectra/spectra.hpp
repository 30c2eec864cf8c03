#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dspectra/graph.hpp"
#include "dspectra/intmatrix.hpp"
#include "dspectra/polynomial.hpp"
#include "dspectra/symfun.hpp"

namespace dspectra {

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix to_int_matrix(const DistanceMatrix& d);

// Distance charpoly of K_{n_1,...,n_k} in closed form:
// (x+2)^(n-k) * g(x), with g built from the xi coefficients. Requires
// k >= 2 (K_n is covered by the all-ones partition).
IntPolynomial charpoly_closed_form(const Partition& p);

// charpoly(distance_matrix(g)); the exact surrogate for the D-spectrum.
IntPolynomial distance_charpoly(const Graph& g);

// (x - n + 1)(x + 1)^(n-1), the distance charpoly of K_n.
IntPolynomial complete_graph_charpoly(int n);

enum class GraphClass { complete_multipartite, complete_graph, other };

struct Classification {
  GraphClass kind = GraphClass::other;
  int part_count = 0;  // k when kind == complete_multipartite, n for K_n
  int minus_two_multiplicity = 0;
  int roots_below_minus_two = 0;
};

// Judge a degree-n distance charpoly alone: smallest root equal to -2
// with multiplicity n-k (and nothing below) pins the complete k-partite
// class for 2 <= k <= n-1; the K_n polynomial is recognized separately so
// the classifier is total on connected graphs.
Classification classify_spectrum(const IntPolynomial& p, int n);

struct ReconstructionReport {
  IntPolynomial input;
  int minus_two_multiplicity = 0;
  int part_count = 0;                    // k = n - multiplicity
  std::vector<Int> xi;                   // xi_1..xi_k, once deflated
  std::vector<Int> elementary;           // E_0..E_k, once recovered
  std::optional<Partition> partition;
  bool verified = false;                 // closed form of partition == input
  std::string failure;                   // empty iff fully successful

  bool ok() const { return partition.has_value() && verified; }
};

// Full pipeline of the reconstruction proof: deflate (x+2)^m, read xi,
// recover the shifted elementary symmetric values, extract integer roots,
// shift back to part sizes, then re-synthesize the closed form and demand
// coefficient-for-coefficient equality. Any failing step yields a report
// naming it rather than an exception.
ReconstructionReport reconstruct_partition(const IntPolynomial& p);

struct TreeDeterminantReport {
  int order = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string generator;  // recorded for reproducibility
  Int expected;
  int passes = 0;
  std::vector<std::pair<int, Int>> mismatches;  // (trial, actual)

  bool all_passed() const { return passes == trials; }
};

// Checks det D(T) = (-1)^(n-1) (n-1) 2^(n-2) on seeded random trees.
TreeDeterminantReport verify_tree_determinant(int order, int trials,
                                              std::uint64_t seed);

struct AdjacencyDemoReport {
  IntPolynomial star_charpoly;        // K_{1,4}
  IntPolynomial union_charpoly;       // C4 + isolated vertex
  std::vector<int> star_degrees;
  std::vector<int> union_degrees;
  bool charpolys_equal = false;
  bool non_isomorphic = false;
  bool union_disconnected = false;

  bool ok() const {
    return charpolys_equal && non_isomorphic && union_disconnected;
  }
};

// The classical reason adjacency spectra are not enough: K_{1,4} and
// C4 + K1 share the adjacency charpoly x^5 - 4x^3 without being
// isomorphic (and the mate is disconnected, so it has no D-spectrum).
AdjacencyDemoReport adjacency_cospectral_demo();

}  // namespace dspectra
