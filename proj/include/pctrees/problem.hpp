#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pctrees/pcm.hpp"
#include "pctrees/tfn.hpp"

namespace pctrees {

/// Five-level linguistic confidence scale with its crisp and fuzzy readings.
struct ConfidenceLevel {
  std::string_view label;
  double crisp;
  Tfn fuzzy;
};

inline constexpr std::array<ConfidenceLevel, 5> kConfidenceScale{{
    {"zero confidence", 0.0, {0.0, 0.0, 0.25}},
    {"low confidence", 1.0, {0.0, 0.25, 0.5}},
    {"moderate confidence", 2.0, {0.25, 0.5, 0.75}},
    {"strong confidence", 3.0, {0.5, 0.75, 1.0}},
    {"absolute confidence", 4.0, {0.75, 1.0, 1.0}},
}};

/// Case-insensitive lookup; nullopt for an unknown label.
std::optional<ConfidenceLevel> find_confidence_level(std::string_view label);

enum class Mode { kCrisp, kFuzzy };

std::string_view to_string(Mode mode);

struct CrispProblem {
  CrispPcm pcm;
  std::optional<CrispConfidence> conf;

  friend bool operator==(const CrispProblem&, const CrispProblem&) = default;
};

struct FuzzyProblem {
  FuzzyPcm pcm;
  std::optional<FuzzyConfidence> conf;

  friend bool operator==(const FuzzyProblem&, const FuzzyProblem&) = default;
};

using Problem = std::variant<CrispProblem, FuzzyProblem>;

inline Mode mode_of(const Problem& p) { return std::holds_alternative<CrispProblem>(p) ? Mode::kCrisp : Mode::kFuzzy; }

/// JSON problem file, schema 1. Only upper-triangle entries (i < j, one-based)
/// are accepted; mirrors are generated as reciprocals. Throws ParseError.
Problem parse_problem_json(std::string_view text);

/// Matrix CSV: n rows of n cells, "*" for a missing entry, "l;m;u" for fuzzy
/// cells, fractions like "1/3" allowed. An optional confidence matrix follows
/// after a blank line. Lines starting with '#' are ignored. Throws ParseError.
Problem parse_problem_csv(std::string_view text);

/// Dispatches on the extension (.csv, otherwise JSON). Throws ParseError for
/// unreadable files and malformed content.
Problem load_problem(const std::filesystem::path& path);

}  // namespace pctrees
