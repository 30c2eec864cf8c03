#include "dspectra/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace dspectra {

Graph::Graph(int order) : order_(order), adj_(static_cast<size_t>(order), 0) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("graph order must be in [1, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(order));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(order_));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : adj_) twice += std::popcount(r);
  return twice / 2;
}

std::uint64_t Graph::row(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(order_);
  for (int v = 0; v < order_; ++v) d[v] = std::popcount(adj_[v]);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs k >= 1");
  for (int p : parts_)
    if (p < 1)
      throw std::invalid_argument("partition parts must be positive, got " +
                                  std::to_string(p));
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  total_ = 0;
  for (int p : parts_) total_ += p;
}

DistanceMatrix::DistanceMatrix(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order < 1) throw std::invalid_argument("distance matrix order must be >= 1");
  if (entries_.size() != static_cast<size_t>(order) * order)
    throw std::invalid_argument("distance matrix entry count mismatch");
  for (int u = 0; u < order; ++u) {
    if (at(u, u) != 0)
      throw std::invalid_argument("distance matrix diagonal must be zero");
    for (int v = u + 1; v < order; ++v) {
      if (at(u, v) != at(v, u))
        throw std::invalid_argument("distance matrix must be symmetric");
      if (at(u, v) < 1)
        throw std::invalid_argument("off-diagonal distances must be >= 1");
    }
  }
  for (int u = 0; u < order; ++u)
    for (int v = 0; v < order; ++v)
      for (int w = 0; w < order; ++w)
        if (at(u, w) > at(u, v) + at(v, w))
          throw std::invalid_argument("triangle inequality violated");
}

Graph complete_multipartite(const Partition& p) {
  Graph g(p.vertex_count());
  // block[v] = index of the part containing vertex v
  std::vector<int> block(p.vertex_count());
  int v = 0;
  for (size_t i = 0; i < p.parts().size(); ++i)
    for (int j = 0; j < p.parts()[i]; ++j) block[v++] = static_cast<int>(i);
  for (int u = 0; u < g.order(); ++u)
    for (int w = u + 1; w < g.order(); ++w)
      if (block[u] != block[w]) g.add_edge(u, w);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

namespace {

// Bitmask of vertices reachable from `start`.
std::uint64_t reachable_set(const Graph& g, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.row(v);
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::uint64_t all = (g.order() == 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << g.order()) - 1;
  return reachable_set(g, 0) == all;
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int level = 0;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        d[static_cast<size_t>(s) * n + v] = level;
        next |= g.row(v);
      }
      frontier = next & ~seen;
      seen |= frontier;
      ++level;
    }
    if (std::popcount(seen) != n)
      throw std::invalid_argument(
          "distance matrix undefined: graph is disconnected");
  }
  return DistanceMatrix(n, std::move(d));
}

std::optional<Partition> recognize_multipartite_structural(const Graph& g) {
  const Graph h = complement(g);
  const int n = h.order();
  std::vector<int> parts;
  std::uint64_t unvisited = (n == 64) ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n) - 1;
  while (unvisited) {
    int start = std::countr_zero(unvisited);
    std::uint64_t comp = reachable_set(h, start);
    unvisited &= ~comp;
    // the component must be a clique in the complement
    std::uint64_t c = comp;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      if ((h.row(v) & comp) != (comp & ~(std::uint64_t{1} << v)))
        return std::nullopt;
    }
    parts.push_back(std::popcount(comp));
  }
  return Partition(parts);
}

std::uint64_t edge_mask_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if ((mask >> pair_bit_index(u, v)) & 1u) g.add_edge(u, v);
  return g;
}

void enumerate_labeled_connected(int n,
                                 const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7)
    throw std::invalid_argument(
        "labeled enumeration is capped at n <= 7; ingest a graph6 corpus "
        "for larger orders");
  const std::uint64_t total = edge_mask_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (is_connected(g)) fn(g);
  }
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_tree needs n >= 2");
  if (n > Graph::kMaxOrder)
    throw std::invalid_argument("random_tree order exceeds graph cap");
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(static_cast<size_t>(std::max(0, n - 2)));
  for (auto& a : pruefer) a = static_cast<int>(rng() % n);

  std::vector<int> deg(n, 1);
  for (int a : pruefer) ++deg[a];
  Graph g(n);
  for (int a : pruefer) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    g.add_edge(leaf, a);
    deg[leaf] = 0;
    --deg[a];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) {
      if (u < 0)
        u = v;
      else
        g.add_edge(u, v);
    }
  return g;
}

namespace {

void extend_partition(int remaining, int cap, std::vector<int>& acc,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    acc.push_back(next);
    extend_partition(remaining - next, next, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  extend_partition(n, n, acc, out);
  return out;
}

}  // namespace dspectra
