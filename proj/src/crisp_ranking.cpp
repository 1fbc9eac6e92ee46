#include "pctrees/crisp_ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "pctrees/error.hpp"

namespace pctrees {

namespace {

bool is_chain_tree(const SpanningTree& tree) {
  for (std::size_t k = 0; k < tree.edges.size(); ++k) {
    if (tree.edges[k].u != k || tree.edges[k].v != k + 1) return false;
  }
  return !tree.edges.empty();
}

PriorityVector normalized(std::vector<double> w) {
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= sum;
  return {std::move(w)};
}

bool is_complete(const CrispPcm& pcm) {
  for (std::size_t i = 0; i < pcm.size(); ++i)
    for (std::size_t j = 0; j < pcm.size(); ++j)
      if (!pcm.has(i, j)) return false;
  return true;
}

}  // namespace

PriorityVector solve_tree_weights(const CrispPcm& pcm, const SpanningTree& tree, Orientation orientation) {
  const auto n = pcm.size();
  for (const auto& e : tree.edges) {
    if (e.v >= n || !pcm.has(e.u, e.v)) {
      throw MissingEntryError("tree edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                              "} has no comparison");
    }
  }

  const bool reverse_last = orientation == Orientation::kPaperEq14 && is_chain_tree(tree);
  const Edge last{n - 2, n - 1};

  std::vector<double> w(n, 0.0);
  w[0] = 1.0;
  for (const auto& [p, c] : root_tree(tree, n)) {
    // a_pc = w_p / w_c
    const double ratio = pcm.value(p, c);
    const bool flip = reverse_last && Edge{std::min(p, c), std::max(p, c)} == last;
    w[c] = flip ? w[p] * ratio : w[p] / ratio;
  }
  return normalized(std::move(w));
}

double absolute_reliability(const CrispConfidence& conf, const SpanningTree& tree) {
  double r = 1.0;
  for (const auto& e : tree.edges) {
    if (e.v >= conf.size() || !conf.has(e.u, e.v)) {
      throw MissingEntryError("tree edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                              "} has no confidence");
    }
    r *= conf.value(e.u, e.v);
  }
  return r;
}

std::vector<double> relative_reliabilities(std::span<const double> rs) {
  double total = 0.0;
  for (double r : rs) total += r;
  if (!(total > 0.0)) {
    throw ZeroReliabilityError("every spanning tree has zero reliability; each contains a zero-confidence comparison");
  }
  std::vector<double> out;
  out.reserve(rs.size());
  for (double r : rs) out.push_back(r / total);
  return out;
}

PriorityVector aggregate_crisp(std::span<const TreeResult> results) {
  if (results.empty()) throw std::invalid_argument("aggregate_crisp needs at least one tree result");
  std::vector<double> w(results.front().weights.size(), 0.0);
  for (const auto& tr : results) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += tr.rel_reliability * tr.weights[i];
  }
  return {std::move(w)};
}

std::vector<std::size_t> rank(const PriorityVector& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  return order;
}

CrispRankingResult rank_by_spanning_trees(const CrispPcm& pcm, const CrispConfidence* conf, Orientation orientation,
                                          std::uint64_t cap) {
  const auto trees = enumerate_spanning_trees(build_graph(pcm), cap);

  CrispRankingResult result;
  result.trees.reserve(trees.size());
  std::vector<double> rs;
  rs.reserve(trees.size());
  for (const auto& tree : trees) {
    TreeResult tr;
    tr.tree = tree;
    tr.weights = solve_tree_weights(pcm, tree, orientation);
    tr.abs_reliability = conf != nullptr ? absolute_reliability(*conf, tree) : 1.0;
    rs.push_back(tr.abs_reliability);
    result.trees.push_back(std::move(tr));
  }
  const auto rel = relative_reliabilities(rs);
  for (std::size_t k = 0; k < rel.size(); ++k) result.trees[k].rel_reliability = rel[k];

  result.final_weights = aggregate_crisp(result.trees);
  result.ranking = rank(result.final_weights);
  return result;
}

PriorityVector spanning_tree_mean_uniform(const CrispPcm& pcm, std::uint64_t cap) {
  return rank_by_spanning_trees(pcm, nullptr, Orientation::kStandard, cap).final_weights;
}

std::vector<std::vector<double>> harker_matrix(const CrispPcm& pcm) {
  const auto n = pcm.size();
  std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t missing = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pcm.has(i, j)) {
        b[i][j] = pcm.value(i, j);
      } else {
        ++missing;
      }
    }
    b[i][i] = static_cast<double>(missing + 1);
  }
  return b;
}

HarkerResult harker_evm_detailed(const CrispPcm& pcm) {
  if (!is_connected(build_graph(pcm))) throw NotConnectedError("comparison graph is not connected");
  const auto b = harker_matrix(pcm);
  const auto n = pcm.size();

  auto apply = [&](const std::vector<double>& x) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += b[i][j] * x[j];
    return y;
  };

  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  for (std::size_t it = 1; it <= kPowerIterationCap; ++it) {
    auto y = apply(w);
    const double norm = std::accumulate(y.begin(), y.end(), 0.0);
    for (auto& v : y) v /= norm;
    w = std::move(y);

    // w sums to 1, so the Rayleigh-style estimate is the sum of Bw.
    const auto bw = apply(w);
    const double lambda = std::accumulate(bw.begin(), bw.end(), 0.0);
    double resid = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      resid = std::max(resid, std::abs(bw[i] - lambda * w[i]));
      scale = std::max(scale, std::abs(bw[i]));
    }
    if (resid <= kPowerIterationTol * scale) return {PriorityVector{std::move(w)}, lambda, it};
  }
  throw ConvergenceError("power iteration did not converge within " + std::to_string(kPowerIterationCap) + " iterations");
}

PriorityVector harker_evm(const CrispPcm& pcm) { return harker_evm_detailed(pcm).weights; }

PriorityVector log_least_squares(const CrispPcm& pcm) {
  const auto n = pcm.size();
  const auto g = build_graph(pcm);
  if (!is_connected(g)) throw NotConnectedError("comparison graph is not connected; the log least-squares system is singular");

  // Normal equations L x = b with x = log w; x_0 is pinned to 0.
  const auto lap = laplacian(g);
  const auto m = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd reduced(m, m);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto row = static_cast<std::size_t>(i) + 1;
    double b = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != row && pcm.has(row, j)) b += std::log(pcm.value(row, j));
    }
    rhs(i) = b;
    for (Eigen::Index j = 0; j < m; ++j) reduced(i, j) = static_cast<double>(lap[row][static_cast<std::size_t>(j) + 1]);
  }
  const Eigen::VectorXd x = reduced.ldlt().solve(rhs);

  std::vector<double> w(n);
  w[0] = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) w[static_cast<std::size_t>(i) + 1] = std::exp(x(i));
  return normalized(std::move(w));
}

PriorityVector incomplete_gmm(const CrispPcm& pcm) {
  if (!is_complete(pcm)) return log_least_squares(pcm);
  const auto n = pcm.size();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) log_sum += std::log(pcm.value(i, j));
    w[i] = std::exp(log_sum / static_cast<double>(n));
  }
  return normalized(std::move(w));
}

}  // namespace pctrees
