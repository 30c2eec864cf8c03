#include "dspectra/spectra.hpp"

#include <stdexcept>
#include <utility>

namespace dspectra {

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
      }
  return m;
}

IntMatrix to_int_matrix(const DistanceMatrix& d) {
  IntMatrix m(d.order());
  for (int u = 0; u < d.order(); ++u)
    for (int v = 0; v < d.order(); ++v) m.at(u, v) = d.at(u, v);
  return m;
}

namespace {

IntPolynomial g_from_xi(const XiCoefficients& xi) {
  std::vector<Int> ascending(static_cast<size_t>(xi.k) + 1, 0);
  ascending[static_cast<size_t>(xi.k)] = 1;
  for (int i = 1; i <= xi.k; ++i)
    ascending[static_cast<size_t>(xi.k - i)] = xi.xi[static_cast<size_t>(i) - 1];
  return IntPolynomial(std::move(ascending));
}

const IntPolynomial kXPlusTwo(std::vector<Int>{2, 1});

}  // namespace

IntPolynomial charpoly_closed_form(const Partition& p) {
  if (p.part_count() < 2)
    throw std::invalid_argument(
        "closed form needs k >= 2 (K_n is the all-ones partition)");
  const int deflated = p.vertex_count() - p.part_count();  // n - k
  return pow(kXPlusTwo, deflated) * g_from_xi(xi_from_partition(p));
}

IntPolynomial distance_charpoly(const Graph& g) {
  return charpoly(to_int_matrix(distance_matrix(g)));
}

IntPolynomial complete_graph_charpoly(int n) {
  if (n < 1) throw std::invalid_argument("complete graph order must be >= 1");
  return IntPolynomial(std::vector<Int>{Int(1 - n), 1}) *
         pow(IntPolynomial(std::vector<Int>{1, 1}), n - 1);
}

Classification classify_spectrum(const IntPolynomial& p, int n) {
  if (p.degree() != n)
    throw std::invalid_argument("polynomial degree does not match order n");
  Classification result;
  result.roots_below_minus_two = count_roots_below(p, Rat(-2));
  result.minus_two_multiplicity = root_multiplicity(p, Int(-2));
  const int m = result.minus_two_multiplicity;
  if (result.roots_below_minus_two == 0 && m >= 1 && m <= n - 2) {
    result.kind = GraphClass::complete_multipartite;
    result.part_count = n - m;
  } else if (p == complete_graph_charpoly(n)) {
    result.kind = GraphClass::complete_graph;
    result.part_count = n;
  } else {
    result.kind = GraphClass::other;
  }
  return result;
}

ReconstructionReport reconstruct_partition(const IntPolynomial& p) {
  if (!p.is_monic())
    throw std::invalid_argument("reconstruction requires a monic polynomial");
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("reconstruction requires degree >= 2");

  ReconstructionReport report;
  report.input = p;

  const int m = root_multiplicity(p, Int(-2));
  report.minus_two_multiplicity = m;
  const int k = n - m;
  report.part_count = k;
  if (k < 1) {
    report.failure = "multiplicity of -2 leaves no parts (k = 0)";
    return report;
  }

  IntPolynomial g = p;
  for (int i = 0; i < m; ++i) g = synthetic_divide(g, Int(-2)).quotient;

  XiCoefficients xi;
  xi.k = k;
  xi.xi.resize(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) xi.xi[static_cast<size_t>(i) - 1] = g.coeff(k - i);
  report.xi = xi.xi;

  ElementarySymmetric e;
  try {
    e = e_from_xi(xi);
  } catch (const std::domain_error& err) {
    report.failure = std::string("elementary-symmetric recovery: ") + err.what();
    return report;
  }
  report.elementary = e.values;

  std::vector<Int> ascending(static_cast<size_t>(k) + 1, 0);
  for (int j = 0; j <= k; ++j)
    ascending[static_cast<size_t>(k - j)] = (j % 2 == 0) ? e.e(j) : -e.e(j);
  const IntPolynomial q(std::move(ascending));

  std::vector<int> parts;
  int total_mult = 0;
  for (const auto& [root, mult] : integer_roots(q)) {
    total_mult += mult;
    if (root < -1) {
      report.failure = "recovered root " + root.str() +
                       " < -1 (part size would be nonpositive)";
      return report;
    }
    if (root + 2 > n) {
      report.failure = "recovered part size " + Int(root + 2).str() +
                       " exceeds n = " + std::to_string(n);
      return report;
    }
    for (int i = 0; i < mult; ++i)
      parts.push_back(root.convert_to<int>() + 2);
  }
  if (total_mult != k) {
    report.failure = "only " + std::to_string(total_mult) + " of " +
                     std::to_string(k) + " recovered roots are integers";
    return report;
  }

  int sum = 0;
  for (int part : parts) sum += part;
  if (sum != n) {
    report.failure = "part sizes sum to " + std::to_string(sum) +
                     ", expected n = " + std::to_string(n);
    return report;
  }

  Partition partition(parts);
  report.partition = partition;
  if (k == 1) {
    report.failure =
        "k = 1: a single part is an edgeless graph, not a connected "
        "complete multipartite graph";
    return report;
  }
  report.verified = (charpoly_closed_form(partition) == p);
  if (!report.verified)
    report.failure = "re-synthesis verification failed: closed form of the "
                     "recovered partition differs from the input";
  return report;
}

TreeDeterminantReport verify_tree_determinant(int order, int trials,
                                              std::uint64_t seed) {
  if (order < 2) throw std::invalid_argument("tree order must be >= 2");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  TreeDeterminantReport report;
  report.order = order;
  report.trials = trials;
  report.seed = seed;
  report.generator = "mt19937_64 + Pruefer decode";
  // (-1)^(n-1) (n-1) 2^(n-2)
  Int expected = Int(order - 1) << (order - 2);
  if (order % 2 == 0) expected = -expected;
  report.expected = expected;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed =
        seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
    const Graph tree = random_tree(order, trial_seed);
    const Int det = determinant(to_int_matrix(distance_matrix(tree)));
    if (det == expected)
      ++report.passes;
    else
      report.mismatches.emplace_back(t, det);
  }
  return report;
}

AdjacencyDemoReport adjacency_cospectral_demo() {
  Graph star(5);  // K_{1,4}: center 0
  for (int leaf = 1; leaf <= 4; ++leaf) star.add_edge(0, leaf);

  Graph cycle_union(5);  // C4 on 0..3, vertex 4 isolated
  cycle_union.add_edge(0, 1);
  cycle_union.add_edge(1, 2);
  cycle_union.add_edge(2, 3);
  cycle_union.add_edge(3, 0);

  AdjacencyDemoReport report;
  report.star_charpoly = charpoly(adjacency_matrix(star));
  report.union_charpoly = charpoly(adjacency_matrix(cycle_union));
  report.star_degrees = star.degree_sequence();
  report.union_degrees = cycle_union.degree_sequence();
  report.charpolys_equal = (report.star_charpoly == report.union_charpoly);
  report.non_isomorphic = (report.star_degrees != report.union_degrees);
  report.union_disconnected = !is_connected(cycle_union);
  return report;
}

}  // namespace dspectra
