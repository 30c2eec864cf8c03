#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace dspectra {

// Undirected simple graph with adjacency stored as bit rows.
// Orders are capped at 64 so a row always fits one machine word; the
// graph6 codec narrows this further to 62 (short form).
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int order);

  int order() const { return order_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;
  std::uint64_t row(int v) const;

  // Degrees sorted non-increasing.
  std::vector<int> degree_sequence() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int order_;
  std::vector<std::uint64_t> adj_;
};

// Multiset of positive part sizes, kept sorted non-increasing so that
// equality is multiset equality.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int vertex_count() const { return total_; }  // n
  int part_count() const { return static_cast<int>(parts_.size()); }  // k

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int total_;
};

// Symmetric matrix of shortest-path lengths. The constructor enforces the
// distance axioms (zero diagonal, symmetry, off-diagonal >= 1, triangle
// inequality), so a value of this type is always a plausible metric.
class DistanceMatrix {
 public:
  DistanceMatrix(int order, std::vector<int> entries);  // row-major

  int order() const { return order_; }
  int at(int u, int v) const { return entries_[u * order_ + v]; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int order_;
  std::vector<int> entries_;
};

// Vertices are grouped block by block in part order: part 1 gets labels
// 0..n_1-1, part 2 the next n_2 labels, and so on. Edges run exactly
// between distinct blocks.
Graph complete_multipartite(const Partition& p);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);

// BFS from every vertex. Throws std::invalid_argument when g is
// disconnected (distances undefined).
DistanceMatrix distance_matrix(const Graph& g);

// Returns the part-size multiset iff the complement of g is a disjoint
// union of cliques, std::nullopt otherwise. Purely structural; serves as
// the independent oracle for the spectrum classifier.
std::optional<Partition> recognize_multipartite_structural(const Graph& g);

// Upper-triangle bit index of the pair {u,v}, u < v, column-major:
// (0,1), (0,2), (1,2), (0,3), ... Matches the graph6 bit order.
inline int pair_bit_index(int u, int v) { return v * (v - 1) / 2 + u; }

std::uint64_t edge_mask_count(int n);  // 2^(n(n-1)/2)
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Every labeled simple connected graph on n vertices exactly once, by
// iterating all upper-triangle bitmasks and filtering by connectivity.
// Capped at n <= 7; larger orders come from graph6 corpora.
void enumerate_labeled_connected(int n,
                                 const std::function<void(const Graph&)>& fn);

// Uniform random labeled tree via a Pruefer sequence drawn from a seeded
// mt19937_64. Same (n, seed) always yields the same tree.
Graph random_tree(int n, std::uint64_t seed);

// All partitions of n (k >= 1), parts non-increasing, in lexicographically
// decreasing order of part vectors.
std::vector<Partition> partitions_of(int n);

}  // namespace dspectra
