#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pctrees/tfn.hpp"

namespace pctrees {

/// Square n x n grid of optional entries. An absent entry is an undefined
/// comparison; it is never stored as a numeric zero.
///
/// Indices are zero-based throughout the library. Construction only checks
/// the shape (n >= 2); the semantic invariants are reported by the
/// validate_* functions so that malformed inputs can be diagnosed in full.
template <class T>
class PairwiseMatrix {
 public:
  using value_type = T;

  explicit PairwiseMatrix(std::size_t n) : n_(n), cells_(n * n) {
    if (n < 2) {
      throw std::invalid_argument("a comparison matrix needs at least 2 alternatives, got " + std::to_string(n));
    }
  }

  std::size_t size() const noexcept { return n_; }

  const std::optional<T>& at(std::size_t i, std::size_t j) const { return cells_.at(index(i, j)); }
  bool has(std::size_t i, std::size_t j) const { return at(i, j).has_value(); }

  /// Throws std::out_of_range if the entry is absent.
  const T& value(std::size_t i, std::size_t j) const {
    const auto& cell = at(i, j);
    if (!cell) throw std::out_of_range("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is absent");
    return *cell;
  }

  void set(std::size_t i, std::size_t j, std::optional<T> v) { cells_.at(index(i, j)) = std::move(v); }
  void clear(std::size_t i, std::size_t j) { set(i, j, std::nullopt); }

  friend bool operator==(const PairwiseMatrix&, const PairwiseMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    return i * n_ + j;
  }

  std::size_t n_;
  std::vector<std::optional<T>> cells_;
};

using CrispPcm = PairwiseMatrix<double>;
using CrispConfidence = PairwiseMatrix<double>;
using FuzzyPcm = PairwiseMatrix<Tfn>;
using FuzzyConfidence = PairwiseMatrix<Tfn>;

/// Relative tolerance for reciprocity checks.
inline constexpr double kReciprocityTol = 1e-9;

enum class ViolationKind {
  kSizeMismatch,
  kDiagonal,
  kPresenceAsymmetry,
  kReciprocity,
  kNonPositive,
  kUnorderedTfn,
  kConfidenceNegative,
  kConfidenceAsymmetry,
  kConfidencePattern,
};

struct Violation {
  ViolationKind kind;
  std::size_t i = 0;  // zero-based
  std::size_t j = 0;
  std::string message;
};

std::string to_string(ViolationKind kind);

/// Builds a matrix with a unit diagonal and reciprocal pairs from upper-triangle entries.
CrispPcm make_reciprocal(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& upper);
FuzzyPcm make_reciprocal(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Tfn>>& upper);

/// Lists every violated invariant; an empty result means the input is valid.
/// Connectivity is not checked here.
std::vector<Violation> validate_crisp(const CrispPcm& pcm, const CrispConfidence* conf = nullptr);
std::vector<Violation> validate_fuzzy(const FuzzyPcm& pcm, const FuzzyConfidence* conf = nullptr);

struct Triad {
  std::size_t i, j, k;
  double product;  // a_ij * a_jk * a_ki
};

struct ConsistencyResult {
  bool consistent = true;
  std::vector<Triad> violations;
};

/// Multiplicative consistency over every triad with all three entries present.
ConsistencyResult is_consistent_triads(const CrispPcm& pcm, double tol);

}  // namespace pctrees
