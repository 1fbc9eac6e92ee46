#pragma once

// Worked-example matrices and test-only oracles. Nothing here calls into the
// solver paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pctrees/graph.hpp"
#include "pctrees/pcm.hpp"
#include "pctrees/tfn.hpp"

namespace pctrees::testing {

// ------------------------------------------------------------ fixtures

/// Four alternatives, comparisons {1,2},{1,3},{2,3},{3,4}.
inline CrispPcm example15_pcm() { return make_reciprocal(4, {{0, 1, 4.0}, {0, 2, 0.5}, {1, 2, 2.0}, {2, 3, 5.0}}); }

inline CrispConfidence example15_conf() {
  CrispConfidence c(4);
  auto put = [&](std::size_t i, std::size_t j, double v) {
    c.set(i, j, v);
    c.set(j, i, v);
  };
  put(0, 1, 4);
  put(0, 2, 3);
  put(1, 2, 1);
  put(2, 3, 2);
  return c;
}

inline FuzzyPcm example17_pcm() {
  return make_reciprocal(4, {{0, 1, Tfn{3, 4, 5}}, {0, 2, Tfn{1.0 / 3, 0.5, 1}}, {1, 2, Tfn{1, 2, 3}}, {2, 3, Tfn{4, 5, 6}}});
}

inline FuzzyConfidence example17_conf() {
  FuzzyConfidence c(4);
  auto put = [&](std::size_t i, std::size_t j, Tfn v) {
    c.set(i, j, v);
    c.set(j, i, v);
  };
  put(0, 1, {0.75, 1, 1});
  put(0, 2, {0.5, 0.75, 1});
  put(1, 2, {0, 0.25, 0.5});
  put(2, 3, {0.25, 0.5, 0.75});
  return c;
}

/// Seven alternatives, nine comparisons, one leaf (vertex 6).
inline CrispPcm example19_pcm() {
  return make_reciprocal(7, {{0, 1, 5.0},
                             {0, 6, 0.25},
                             {1, 2, 4.0},
                             {1, 3, 0.125},
                             {1, 4, 4.0},
                             {2, 3, 0.5},
                             {3, 4, 2.0},
                             {3, 6, 6.0},
                             {5, 6, 3.0}});
}

inline SpanningTree tree_of(std::initializer_list<std::pair<std::size_t, std::size_t>> one_based) {
  SpanningTree t;
  for (auto [a, b] : one_based) t.edges.push_back({std::min(a, b) - 1, std::max(a, b) - 1});
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

// Trees of the four-alternative example, numbered as in the worked tables.
inline SpanningTree ex_st1() { return tree_of({{1, 2}, {2, 3}, {3, 4}}); }
inline SpanningTree ex_st2() { return tree_of({{1, 2}, {1, 3}, {3, 4}}); }
inline SpanningTree ex_st3() { return tree_of({{1, 3}, {2, 3}, {3, 4}}); }

inline ComparisonGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return ComparisonGraph(n, edges);
}

inline ComparisonGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return ComparisonGraph(n, edges);
}

inline ComparisonGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return ComparisonGraph(n, edges);
}

/// a_ij = w_i / w_j on the given edges.
inline CrispPcm ratio_matrix(const std::vector<double>& w, const std::vector<Edge>& edges) {
  std::vector<std::tuple<std::size_t, std::size_t, double>> upper;
  for (const auto& e : edges) upper.emplace_back(e.u, e.v, w[e.u] / w[e.v]);
  return make_reciprocal(w.size(), upper);
}

// ------------------------------------------------------------ oracles

/// Subsets of n - 1 edges that are acyclic and connected, by exhaustive search.
inline std::size_t brute_force_tree_count(const ComparisonGraph& g) {
  const auto n = g.vertex_count();
  const auto& edges = g.edges();
  const auto e = edges.size();
  if (n <= 1) return 1;
  if (e < n - 1) return 0;
  std::vector<bool> pick(e, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
  std::size_t count = 0;
  do {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t k = 0; k < e; ++k) {
      if (!pick[k]) continue;
      adj[edges[k].u].push_back(edges[k].v);
      adj[edges[k].v].push_back(edges[k].u);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    // n - 1 edges reaching all n vertices is necessarily acyclic.
    if (reached == n) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

/// Solves w_i - a_ij w_j = 0 on the tree edges together with sum(w) = 1 as
/// one dense linear system.
inline std::vector<double> tree_weights_by_linear_solve(const CrispPcm& pcm, const SpanningTree& tree) {
  const auto n = static_cast<Eigen::Index>(pcm.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  Eigen::Index row = 0;
  for (const auto& e : tree.edges) {
    a(row, static_cast<Eigen::Index>(e.u)) = 1.0;
    a(row, static_cast<Eigen::Index>(e.v)) = -pcm.value(e.u, e.v);
    ++row;
  }
  a.row(row).setOnes();
  b(row) = 1.0;
  const Eigen::VectorXd x = a.fullPivLu().solve(b);
  return {x.data(), x.data() + n};
}

/// Minimum-spread fuzzy tree weights found by bisection and a grid scan
/// instead of the closed form. Inputs are the componentwise root-relative
/// products (lower, modal, upper) obtained from the tree equations.
struct SearchedFuzzySolution {
  std::vector<Tfn> weights;
  double spread;
};

inline SearchedFuzzySolution search_min_spread(const std::vector<double>& lower, const std::vector<double>& modal_raw,
                                               const std::vector<double>& upper) {
  const auto n = lower.size();
  const double modal_sum = std::accumulate(modal_raw.begin(), modal_raw.end(), 0.0);
  std::vector<double> modal(n);
  for (std::size_t i = 0; i < n; ++i) modal[i] = modal_raw[i] / modal_sum;
  const double sl = std::accumulate(lower.begin(), lower.end(), 0.0);
  const double su = std::accumulate(upper.begin(), upper.end(), 0.0);

  auto feasible = [&](double mu) {
    const double lambda = 1.0 / (mu * sl * su);
    for (std::size_t i = 0; i < n; ++i) {
      if (lambda * lower[i] > modal[i] || mu * upper[i] < modal[i]) return false;
    }
    return true;
  };
  // Feasibility is monotone in mu; bracket then bisect for the boundary.
  double hi = 1.0;
  while (!feasible(hi)) hi *= 2.0;
  double lo = hi;
  while (feasible(lo) && lo > 1e-300) lo /= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  // Scan a grid of feasible mu for the smallest spread.
  double best_mu = hi;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 2000; ++k) {
    const double mu = hi * (1.0 + 0.001 * k);
    const double lambda = 1.0 / (mu * sl * su);
    const double spread = mu * su - lambda * sl;
    if (spread < best) {
      best = spread;
      best_mu = mu;
    }
  }
  const double lambda = 1.0 / (best_mu * sl * su);
  SearchedFuzzySolution out{{}, best};
  for (std::size_t i = 0; i < n; ++i) out.weights.push_back({lambda * lower[i], modal[i], best_mu * upper[i]});
  return out;
}

// ------------------------------------------------------------ generators

/// Random connected graph: a random spanning tree plus extra random edges.
inline ComparisonGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    const auto a = order[k];
    const auto b = order[pick(rng)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<Edge> absent;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::find(edges.begin(), edges.end(), Edge{i, j}) == edges.end()) absent.push_back({i, j});
  std::shuffle(absent.begin(), absent.end(), rng);
  const auto room = max_edges > edges.size() ? max_edges - edges.size() : 0;
  std::uniform_int_distribution<std::size_t> extra(0, std::min(room, absent.size()));
  const auto add = extra(rng);
  edges.insert(edges.end(), absent.begin(), absent.begin() + static_cast<std::ptrdiff_t>(add));
  return ComparisonGraph(n, edges);
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(0.05, 1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = d(rng);
  const double s = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= s;
  return w;
}

/// Random reciprocal (generally inconsistent) matrix on the graph's edges,
/// judgments log-uniform in [1/9, 9].
inline CrispPcm random_pcm(std::mt19937_64& rng, const ComparisonGraph& g) {
  std::uniform_real_distribution<double> d(-std::log(9.0), std::log(9.0));
  std::vector<std::tuple<std::size_t, std::size_t, double>> upper;
  for (const auto& e : g.edges()) upper.emplace_back(e.u, e.v, std::exp(d(rng)));
  return make_reciprocal(g.vertex_count(), upper);
}

inline CrispConfidence random_confidence(std::mt19937_64& rng, const ComparisonGraph& g, int lo = 1, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  CrispConfidence c(g.vertex_count());
  for (const auto& e : g.edges()) {
    const double v = d(rng);
    c.set(e.u, e.v, v);
    c.set(e.v, e.u, v);
  }
  return c;
}

/// Random fuzzy judgments around log-uniform modal values.
inline FuzzyPcm random_fuzzy_pcm(std::mt19937_64& rng, const ComparisonGraph& g) {
  std::uniform_real_distribution<double> d(-std::log(9.0), std::log(9.0));
  std::uniform_real_distribution<double> spread(0.0, 0.6);
  std::vector<std::tuple<std::size_t, std::size_t, Tfn>> upper;
  for (const auto& e : g.edges()) {
    const double m = std::exp(d(rng));
    upper.emplace_back(e.u, e.v, Tfn{m * (1.0 - spread(rng)), m, m * (1.0 + 2.0 * spread(rng))});
  }
  return make_reciprocal(g.vertex_count(), upper);
}

}  // namespace pctrees::testing
