#pragma once

#include <string>
#include <vector>

#include "dspectra/graph.hpp"

namespace dspectra {

// Stable color refinement (1-dimensional Weisfeiler-Leman). Color ids are
// assigned by sorted signature rank, so isomorphic graphs get identical
// color multisets and matching ids.
std::vector<int> refinement_colors(const Graph& g);

// Exact isomorphism test: invariant screens (order, edges, degrees,
// refinement colors) followed by a color-respecting backtracking search
// over vertex bijections. Feasible for the tiny equal-charpoly buckets
// this library meets, at any supported order.
bool are_isomorphic(const Graph& a, const Graph& b);

// Graph with vertex i of the result = vertex order[i] of g.
Graph relabeled(const Graph& g, const std::vector<int>& order);

// Canonical relabeling: the lexicographically smallest upper-triangle
// bitstring over all orderings that respect the refinement color classes.
// Brute-force backtracking with prefix pruning; intended for small orders
// (capped at 16).
Graph canonical_form(const Graph& g);

static constexpr int kCanonicalMaxOrder = 16;

// to_graph6(canonical_form(g)); identical for isomorphic graphs.
std::string canonical_graph6(const Graph& g);

}  // namespace dspectra
