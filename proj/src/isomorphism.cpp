#include "dspectra/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "dspectra/graph6.hpp"

namespace dspectra {

std::vector<int> refinement_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = g.degree(v);
  int distinct = 0;
  for (int round = 0; round < n; ++round) {
    // signature: own color + sorted neighbor colors
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      std::uint64_t nb = g.row(v);
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        sig[v].push_back(colors[u]);
      }
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) colors[v] = ids[sig[v]];
    if (next == distinct) break;
    distinct = next;
  }
  return colors;
}

namespace {

std::vector<std::pair<int, int>> color_histogram(const std::vector<int>& c) {
  std::map<int, int> counts;
  for (int x : c) ++counts[x];
  return {counts.begin(), counts.end()};
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> order;       // vertices of a, most-constrained first
  std::vector<int> image;       // order[i] -> image[i] in b
  std::uint64_t used_b = 0;

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    const int va = order[depth];
    for (int vb = 0; vb < b.order(); ++vb) {
      if ((used_b >> vb) & 1u) continue;
      if (cb[vb] != ca[va]) continue;
      bool consistent = true;
      for (size_t i = 0; i < depth && consistent; ++i)
        consistent = (a.has_edge(va, order[i]) == b.has_edge(vb, image[i]));
      if (!consistent) continue;
      image[depth] = vb;
      used_b |= std::uint64_t{1} << vb;
      if (extend(depth + 1)) return true;
      used_b &= ~(std::uint64_t{1} << vb);
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  const std::vector<int> ca = refinement_colors(a);
  const std::vector<int> cb = refinement_colors(b);
  if (color_histogram(ca) != color_histogram(cb)) return false;

  IsoSearch search{a, b, ca, cb, {}, {}, 0};
  search.order.resize(a.order());
  for (int v = 0; v < a.order(); ++v) search.order[v] = v;
  std::vector<int> class_size(a.order() + 1, 0);
  std::vector<int> color_count;
  for (int c : ca) {
    if (c >= static_cast<int>(color_count.size()))
      color_count.resize(c + 1, 0);
    ++color_count[c];
  }
  std::sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    if (color_count[ca[x]] != color_count[ca[y]])
      return color_count[ca[x]] < color_count[ca[y]];
    if (ca[x] != ca[y]) return ca[x] < ca[y];
    return x < y;
  });
  search.image.resize(a.order());
  return search.extend(0);
}

Graph relabeled(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.order())
    throw std::invalid_argument("relabeling order has wrong length");
  Graph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has_edge(order[i], order[j])) h.add_edge(i, j);
  return h;
}

namespace {

struct CanonSearch {
  const Graph& g;
  const std::vector<int>& colors;
  std::vector<int> pos_class;    // color class required at each position
  std::vector<int> placed;
  std::vector<std::uint32_t> cols;
  std::uint64_t used = 0;
  bool have_best = false;
  std::vector<std::uint32_t> best_cols;
  std::vector<int> best_order;

  // Returns true when the subtree replaced the incumbent best.
  bool extend(int pos, bool prefix_eq) {
    const int n = g.order();
    if (pos == n) {
      if (have_best && prefix_eq) return false;  // identical to best
      best_cols = cols;
      best_order = placed;
      have_best = true;
      return true;
    }
    bool updated = false;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (colors[v] != pos_class[pos]) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = (col << 1) | (g.has_edge(placed[i], v) ? 1u : 0u);
      bool child_eq = false;
      if (have_best && prefix_eq) {
        if (col > best_cols[pos]) continue;
        child_eq = (col == best_cols[pos]);
      }
      placed[pos] = v;
      cols[pos] = col;
      used |= std::uint64_t{1} << v;
      if (extend(pos + 1, child_eq)) {
        updated = true;
        prefix_eq = true;  // the new best runs through this prefix
      }
      used &= ~(std::uint64_t{1} << v);
    }
    return updated;
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw std::invalid_argument(
        "canonical labeling is capped at order " +
        std::to_string(kCanonicalMaxOrder));
  const std::vector<int> colors = refinement_colors(g);

  CanonSearch search{g, colors, {}, {}, {}, 0, false, {}, {}};
  search.pos_class.reserve(n);
  for (auto [color, count] : color_histogram(colors))
    for (int i = 0; i < count; ++i) search.pos_class.push_back(color);
  search.placed.resize(n);
  search.cols.resize(n);
  search.extend(0, true);
  return relabeled(g, search.best_order);
}

std::string canonical_graph6(const Graph& g) {
  return to_graph6(canonical_form(g));
}

}  // namespace dspectra
