#include "pctrees/fuzzy_ranking.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pctrees/error.hpp"

namespace pctrees {

namespace {

double sum_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

std::string edge_str(std::size_t i, std::size_t j) { return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}"; }

}  // namespace

FuzzyEdgeEquation edge_equation(const FuzzyPcm& pcm, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j >= pcm.size() || (!pcm.has(i, j) && !pcm.has(j, i))) {
    throw MissingEntryError("tree edge " + edge_str(i, j) + " has no comparison");
  }
  const Tfn forward = pcm.has(i, j) ? pcm.value(i, j) : inverse(pcm.value(j, i));
  const Tfn backward = pcm.has(j, i) ? pcm.value(j, i) : inverse(forward);
  if (forward.l >= 1.0) return {i, j, forward};
  if (backward.l >= 1.0) return {j, i, backward};
  if (forward.m >= 1.0) return {i, j, forward};
  if (backward.m > 1.0) return {j, i, backward};
  return {i, j, forward};
}

double FuzzyTreeModel::lambda_for(double mu) const { return 1.0 / (mu * sum_of(lower) * sum_of(upper)); }

std::vector<Tfn> FuzzyTreeModel::weights_at(double mu) const {
  const double lambda = lambda_for(mu);
  std::vector<Tfn> w(modal.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = {lambda * lower[i], modal[i], mu * upper[i]};
  return w;
}

double FuzzyTreeModel::spread_at(double mu) const { return mu * sum_of(upper) - lambda_for(mu) * sum_of(lower); }

FuzzyTreeModel build_fuzzy_tree_model(const FuzzyPcm& pcm, const SpanningTree& tree) {
  const auto n = pcm.size();
  FuzzyTreeModel model;
  model.lower.assign(n, 0.0);
  model.modal.assign(n, 0.0);
  model.upper.assign(n, 0.0);
  model.lower[0] = model.modal[0] = model.upper[0] = 1.0;

  for (const auto& [p, c] : root_tree(tree, n)) {
    const auto eq = edge_equation(pcm, p, c);
    if (!(eq.ratio.l > 0.0)) throw DomainError("judgment on edge " + edge_str(p, c) + " needs a positive lower bound");
    if (eq.greater == p) {
      // w_p = a * w_c
      model.lower[c] = model.lower[p] / eq.ratio.l;
      model.modal[c] = model.modal[p] / eq.ratio.m;
      model.upper[c] = model.upper[p] / eq.ratio.u;
    } else {
      // w_c = a * w_p
      model.lower[c] = model.lower[p] * eq.ratio.l;
      model.modal[c] = model.modal[p] * eq.ratio.m;
      model.upper[c] = model.upper[p] * eq.ratio.u;
    }
  }

  const double modal_sum = sum_of(model.modal);
  for (auto& m : model.modal) m /= modal_sum;

  double max_m_over_upper = 0.0;
  double min_m_over_lower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    max_m_over_upper = std::max(max_m_over_upper, model.modal[i] / model.upper[i]);
    min_m_over_lower = std::min(min_m_over_lower, model.modal[i] / model.lower[i]);
  }
  model.mu_min = std::max(max_m_over_upper, 1.0 / (sum_of(model.lower) * sum_of(model.upper) * min_m_over_lower));
  return model;
}

std::vector<Tfn> solve_tree_weights_fuzzy(const FuzzyPcm& pcm, const SpanningTree& tree) {
  const auto model = build_fuzzy_tree_model(pcm, tree);
  auto w = model.weights_at(model.mu_min);
  constexpr double slack = 1e-12;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i].l > 0.0) || w[i].l > w[i].m * (1.0 + slack) || w[i].u < w[i].m * (1.0 - slack)) {
      throw InfeasibleModelError("fuzzy tree model for " + to_string(tree) + " violates 0 < l <= m <= u at coordinate " +
                                 std::to_string(i + 1));
    }
    // Snap rounding noise at the active bound.
    w[i].l = std::min(w[i].l, w[i].m);
    w[i].u = std::max(w[i].u, w[i].m);
  }
  return w;
}

double total_spread(std::span<const Tfn> ws) {
  double s = 0.0;
  for (const auto& w : ws) s += w.u - w.l;
  return s;
}

Tfn fuzzy_absolute_reliability(const FuzzyConfidence& conf, const SpanningTree& tree) {
  Tfn r = Tfn::crisp(1.0);
  for (const auto& e : tree.edges) {
    if (e.v >= conf.size() || !conf.has(e.u, e.v)) {
      throw MissingEntryError("tree edge " + edge_str(e.u, e.v) + " has no confidence");
    }
    r = r * conf.value(e.u, e.v);
  }
  return r;
}

std::vector<Tfn> fuzzy_relative_reliabilities(std::span<const Tfn> rs) {
  Tfn total{};
  for (const auto& r : rs) total = total + r;
  if (!(total.l > 0.0)) {
    throw ZeroReliabilityError("sum of fuzzy reliabilities " + to_string(total) +
                               " has a zero lower bound; relative reliabilities are undefined");
  }
  std::vector<Tfn> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(r / total);
  return out;
}

std::vector<Tfn> fuzzy_aggregate(std::span<const FuzzyTreeResult> results) {
  if (results.empty()) throw std::invalid_argument("fuzzy_aggregate needs at least one tree result");
  std::vector<Tfn> w(results.front().weights.size(), Tfn{});
  for (const auto& tr : results) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = w[i] + tr.rel_reliability * tr.weights[i];
  }
  return w;
}

FuzzyFinal finalize_fuzzy(std::span<const Tfn> final_weights) {
  FuzzyFinal out;
  out.defuzzified.reserve(final_weights.size());
  for (const auto& w : final_weights) {
    out.defuzzified.push_back(defuzzify_centroid(w));
    out.fuzziness.push_back(fuzziness(w));
  }
  const double total = sum_of(out.defuzzified);
  out.normalized.weights.reserve(final_weights.size());
  for (double d : out.defuzzified) out.normalized.weights.push_back(d / total);
  out.ranking = rank(out.normalized);
  return out;
}

FuzzyRankingResult rank_by_spanning_trees_fuzzy(const FuzzyPcm& pcm, const FuzzyConfidence* conf, std::uint64_t cap) {
  const auto trees = enumerate_spanning_trees(build_graph(pcm), cap);

  FuzzyRankingResult result;
  result.trees.reserve(trees.size());
  std::vector<Tfn> rs;
  rs.reserve(trees.size());
  for (const auto& tree : trees) {
    FuzzyTreeResult tr;
    tr.tree = tree;
    tr.weights = solve_tree_weights_fuzzy(pcm, tree);
    tr.abs_reliability = conf != nullptr ? fuzzy_absolute_reliability(*conf, tree) : Tfn::crisp(1.0);
    rs.push_back(tr.abs_reliability);
    result.trees.push_back(std::move(tr));
  }
  const auto rel = fuzzy_relative_reliabilities(rs);
  for (std::size_t k = 0; k < rel.size(); ++k) result.trees[k].rel_reliability = rel[k];

  result.final_weights = fuzzy_aggregate(result.trees);
  result.summary = finalize_fuzzy(result.final_weights);
  return result;
}

}  // namespace pctrees
