#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pctrees/graph.hpp"
#include "pctrees/pcm.hpp"

namespace pctrees {

/// Normalized positive weights, one per alternative.
struct PriorityVector {
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  double operator[](std::size_t i) const { return weights[i]; }

  friend bool operator==(const PriorityVector&, const PriorityVector&) = default;
};

/// How tree edges translate into weight ratios.
enum class Orientation {
  /// a_ij = w_i / w_j on every edge.
  kStandard,
  /// As kStandard, except that on the chain tree {1,2},{2,3},...,{n-1,n}
  /// the last equation is read as w_n = a_{n-1,n} * w_{n-1}. Exists only to
  /// reproduce a published worked example literally.
  kPaperEq14,
};

struct TreeResult {
  SpanningTree tree;
  PriorityVector weights;
  double abs_reliability = 0.0;
  double rel_reliability = 0.0;

  friend bool operator==(const TreeResult&, const TreeResult&) = default;
};

/// Priority vector fixed by the n - 1 ratios on the tree's edges. Propagates
/// ratio products from vertex 0, then normalizes to sum 1.
/// Throws MissingEntryError if a tree edge has no comparison.
PriorityVector solve_tree_weights(const CrispPcm& pcm, const SpanningTree& tree,
                                  Orientation orientation = Orientation::kStandard);

/// Product of the confidences on the tree's edges.
double absolute_reliability(const CrispConfidence& conf, const SpanningTree& tree);

/// r_i / sum(r). Throws ZeroReliabilityError if every r is zero.
std::vector<double> relative_reliabilities(std::span<const double> rs);

/// Reliability-weighted mean of the per-tree vectors, accumulated in tree order.
PriorityVector aggregate_crisp(std::span<const TreeResult> results);

/// Zero-based indices by descending weight; ties go to the lower index.
std::vector<std::size_t> rank(const PriorityVector& w);

struct CrispRankingResult {
  std::vector<TreeResult> trees;
  PriorityVector final_weights;
  std::vector<std::size_t> ranking;
};

/// Full pipeline: enumerate trees, solve each, weight by confidence, aggregate.
/// A null `conf` means uniform confidence.
CrispRankingResult rank_by_spanning_trees(const CrispPcm& pcm, const CrispConfidence* conf,
                                          Orientation orientation = Orientation::kStandard,
                                          std::uint64_t cap = kDefaultTreeCap);

/// Plain mean over all spanning-tree vectors (every tree equally reliable).
PriorityVector spanning_tree_mean_uniform(const CrispPcm& pcm, std::uint64_t cap = kDefaultTreeCap);

/// Auxiliary matrix for incomplete eigenvector ranking: missing entries
/// become 0 and each diagonal becomes 1 + the number of missing entries in its row.
std::vector<std::vector<double>> harker_matrix(const CrispPcm& pcm);

struct HarkerResult {
  PriorityVector weights;
  double lambda_max = 0.0;
  std::size_t iterations = 0;
};

inline constexpr double kPowerIterationTol = 1e-10;
inline constexpr std::size_t kPowerIterationCap = 100'000;

/// Principal eigenvector of the auxiliary matrix by power iteration from
/// the uniform vector. Throws ConvergenceError past the iteration cap.
HarkerResult harker_evm_detailed(const CrispPcm& pcm);
PriorityVector harker_evm(const CrispPcm& pcm);

/// Row geometric means for complete matrices; logarithmic least squares
/// over the present entries otherwise.
PriorityVector incomplete_gmm(const CrispPcm& pcm);

/// Logarithmic least squares solved through the comparison-graph Laplacian,
/// regardless of completeness.
PriorityVector log_least_squares(const CrispPcm& pcm);

}  // namespace pctrees
