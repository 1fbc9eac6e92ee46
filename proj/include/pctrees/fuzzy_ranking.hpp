#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pctrees/crisp_ranking.hpp"
#include "pctrees/graph.hpp"
#include "pctrees/pcm.hpp"
#include "pctrees/tfn.hpp"

namespace pctrees {

/// One fuzzy tree equation w_greater = a * w_lesser, componentwise.
struct FuzzyEdgeEquation {
  std::size_t greater;
  std::size_t lesser;
  Tfn ratio;
};

/// Picks the direction of edge {i, j} whose judgment has a lower bound of at
/// least 1 (falling back to modal value >= 1, then to i < j). Writing every
/// equation this way makes the per-tree solution independent of how the
/// matrix happens to be stored.
FuzzyEdgeEquation edge_equation(const FuzzyPcm& pcm, std::size_t i, std::size_t j);

/// The per-tree fuzzy weight model reduced to its single free parameter.
///
/// Componentwise products along the tree fix the shape of each component
/// vector: l = lambda * lower, m = modal (already normalized), u = mu * upper.
/// The product constraint couples lambda = 1 / (mu * sum(lower) * sum(upper)),
/// and the total spread sum(u - l) grows strictly with mu, so the minimum
/// spread solution sits at the smallest mu that keeps l <= m <= u.
struct FuzzyTreeModel {
  std::vector<double> lower;
  std::vector<double> modal;
  std::vector<double> upper;
  double mu_min = 0.0;

  double lambda_for(double mu) const;
  std::vector<Tfn> weights_at(double mu) const;
  double spread_at(double mu) const;
};

/// Throws MissingEntryError if a tree edge has no comparison.
FuzzyTreeModel build_fuzzy_tree_model(const FuzzyPcm& pcm, const SpanningTree& tree);

/// Minimum-spread fuzzy weights satisfying the tree equations, the ordering
/// constraints and relaxed normalization. Throws InfeasibleModelError if the
/// ordering constraints cannot be met.
std::vector<Tfn> solve_tree_weights_fuzzy(const FuzzyPcm& pcm, const SpanningTree& tree);

/// Sum of u - l over all coordinates.
double total_spread(std::span<const Tfn> ws);

Tfn fuzzy_absolute_reliability(const FuzzyConfidence& conf, const SpanningTree& tree);

/// r_i / sum(r) with fuzzy division. Throws ZeroReliabilityError when the
/// sum has a zero lower bound.
std::vector<Tfn> fuzzy_relative_reliabilities(std::span<const Tfn> rs);

struct FuzzyTreeResult {
  SpanningTree tree;
  std::vector<Tfn> weights;
  Tfn abs_reliability;
  Tfn rel_reliability;

  friend bool operator==(const FuzzyTreeResult&, const FuzzyTreeResult&) = default;
};

/// Sum over trees of R_i * w_i, accumulated in tree order.
std::vector<Tfn> fuzzy_aggregate(std::span<const FuzzyTreeResult> results);

struct FuzzyFinal {
  std::vector<double> defuzzified;
  PriorityVector normalized;
  std::vector<std::size_t> ranking;
  std::vector<double> fuzziness;
};

/// Centroid defuzzification, then normalization, then ranking. The fuzzy
/// vector itself is not renormalized.
FuzzyFinal finalize_fuzzy(std::span<const Tfn> final_weights);

struct FuzzyRankingResult {
  std::vector<FuzzyTreeResult> trees;
  std::vector<Tfn> final_weights;
  FuzzyFinal summary;
};

/// A null `conf` means every confidence is (1, 1, 1).
FuzzyRankingResult rank_by_spanning_trees_fuzzy(const FuzzyPcm& pcm, const FuzzyConfidence* conf,
                                                std::uint64_t cap = kDefaultTreeCap);

}  // namespace pctrees
