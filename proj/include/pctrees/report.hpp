#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pctrees/crisp_ranking.hpp"
#include "pctrees/fuzzy_ranking.hpp"
#include "pctrees/problem.hpp"

namespace pctrees {

/// One row of the per-tree table. Crisp values are stored as degenerate TFNs
/// and serialized as plain numbers.
struct ReportTree {
  SpanningTree tree;
  std::vector<Tfn> weights;
  Tfn abs_reliability;
  Tfn rel_reliability;

  friend bool operator==(const ReportTree&, const ReportTree&) = default;
};

/// Outcome of a single ranking run, in a form that serializes to JSON.
struct RankingReport {
  int schema = 1;
  std::string method;       // spanning-tree | harker | gmm
  Mode mode = Mode::kCrisp;
  std::string orientation;  // standard | paper-eq14 (crisp spanning-tree only)
  std::size_t n = 0;

  // Decimal strings; counts can exceed 64 bits.
  std::optional<std::string> tree_count;
  std::optional<std::string> tree_bound;

  std::vector<ReportTree> trees;
  std::vector<Tfn> final_weights;

  // Fuzzy mode only.
  std::optional<std::vector<double>> defuzzified;
  std::optional<std::vector<double>> fuzziness;

  /// Crisp priority vector the ranking is derived from (normalized after
  /// defuzzification in fuzzy mode).
  std::vector<double> priority;
  std::vector<std::size_t> ranking;  // one-based, best first

  std::optional<double> lambda_max;  // harker only
  double elapsed_ms = 0.0;

  friend bool operator==(const RankingReport&, const RankingReport&) = default;
};

RankingReport make_report(const CrispRankingResult& r, Orientation orientation, std::size_t n);
RankingReport make_report(const FuzzyRankingResult& r, std::size_t n);

std::string report_to_json(const RankingReport& report, int indent = 2);

/// Throws ParseError on malformed input.
RankingReport report_from_json(std::string_view text);

std::string_view to_string(Orientation orientation);

}  // namespace pctrees
