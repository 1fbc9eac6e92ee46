#include "pctrees/pcm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace pctrees {

namespace {

std::string pair_str(std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

template <class T>
void check_presence(const PairwiseMatrix<T>& pcm, std::vector<Violation>& out) {
  const auto n = pcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pcm.has(i, j) != pcm.has(j, i)) {
        out.push_back({ViolationKind::kPresenceAsymmetry, i, j,
                       "entry " + pair_str(i, j) + " and its mirror " + pair_str(j, i) + " must both be present or both absent"});
      }
    }
  }
}

template <class P, class C>
void check_confidence_pattern(const PairwiseMatrix<P>& pcm, const PairwiseMatrix<C>& conf, std::vector<Violation>& out) {
  const auto n = pcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pcm.has(i, j) != conf.has(i, j)) {
        out.push_back({ViolationKind::kConfidencePattern, i, j,
                       "confidence " + pair_str(i, j) + (conf.has(i, j) ? " given for a missing comparison" : " missing for a present comparison")});
      }
    }
  }
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kSizeMismatch: return "size-mismatch";
    case ViolationKind::kDiagonal: return "diagonal";
    case ViolationKind::kPresenceAsymmetry: return "presence-asymmetry";
    case ViolationKind::kReciprocity: return "reciprocity";
    case ViolationKind::kNonPositive: return "non-positive";
    case ViolationKind::kUnorderedTfn: return "unordered-tfn";
    case ViolationKind::kConfidenceNegative: return "confidence-negative";
    case ViolationKind::kConfidenceAsymmetry: return "confidence-asymmetry";
    case ViolationKind::kConfidencePattern: return "confidence-pattern";
  }
  return "unknown";
}

CrispPcm make_reciprocal(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& upper) {
  CrispPcm pcm(n);
  for (std::size_t i = 0; i < n; ++i) pcm.set(i, i, 1.0);
  for (const auto& [i, j, v] : upper) {
    pcm.set(i, j, v);
    pcm.set(j, i, 1.0 / v);
  }
  return pcm;
}

FuzzyPcm make_reciprocal(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Tfn>>& upper) {
  FuzzyPcm pcm(n);
  for (std::size_t i = 0; i < n; ++i) pcm.set(i, i, Tfn::crisp(1.0));
  for (const auto& [i, j, v] : upper) {
    pcm.set(i, j, v);
    pcm.set(j, i, v.l > 0.0 ? inverse(v) : Tfn{});
  }
  return pcm;
}

std::vector<Violation> validate_crisp(const CrispPcm& pcm, const CrispConfidence* conf) {
  std::vector<Violation> out;
  const auto n = pcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!pcm.has(i, i) || *pcm.at(i, i) != 1.0) {
      out.push_back({ViolationKind::kDiagonal, i, i, "diagonal entry " + pair_str(i, i) + " must be 1"});
    }
  }
  check_presence(pcm, out);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !pcm.has(i, j)) continue;
      if (!(pcm.value(i, j) > 0.0)) {
        out.push_back({ViolationKind::kNonPositive, i, j, "entry " + pair_str(i, j) + " must be strictly positive"});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pcm.has(i, j) || !pcm.has(j, i)) continue;
      const double prod = pcm.value(i, j) * pcm.value(j, i);
      if (!rel_close(prod, 1.0, kReciprocityTol)) {
        out.push_back({ViolationKind::kReciprocity, i, j,
                       "a" + pair_str(i, j) + " * a" + pair_str(j, i) + " = " + num_str(prod) + " (expected 1)"});
      }
    }
  }

  if (conf != nullptr) {
    if (conf->size() != n) {
      out.push_back({ViolationKind::kSizeMismatch, 0, 0, "confidence matrix size differs from preference matrix size"});
      return out;
    }
    check_confidence_pattern(pcm, *conf, out);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !conf->has(i, j)) continue;
        const double c = conf->value(i, j);
        if (!(c >= 0.0)) {
          out.push_back({ViolationKind::kConfidenceNegative, i, j, "confidence " + pair_str(i, j) + " must be nonnegative"});
        }
        if (j > i && conf->has(j, i) && conf->value(j, i) != c) {
          out.push_back({ViolationKind::kConfidenceAsymmetry, i, j, "confidence " + pair_str(i, j) + " differs from " + pair_str(j, i)});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_fuzzy(const FuzzyPcm& pcm, const FuzzyConfidence* conf) {
  std::vector<Violation> out;
  const auto n = pcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!pcm.has(i, i) || *pcm.at(i, i) != Tfn::crisp(1.0)) {
      out.push_back({ViolationKind::kDiagonal, i, i, "diagonal entry " + pair_str(i, i) + " must be (1,1,1)"});
    }
  }
  check_presence(pcm, out);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !pcm.has(i, j)) continue;
      const Tfn& a = pcm.value(i, j);
      if (!a.is_ordered()) {
        out.push_back({ViolationKind::kUnorderedTfn, i, j, "entry " + pair_str(i, j) + " " + to_string(a) + " violates l <= m <= u"});
      }
      if (!(a.l > 0.0)) {
        out.push_back({ViolationKind::kNonPositive, i, j, "entry " + pair_str(i, j) + " must have a positive lower bound"});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pcm.has(i, j) || !pcm.has(j, i)) continue;
      const Tfn& a = pcm.value(i, j);
      const Tfn& b = pcm.value(j, i);
      if (!(a.l > 0.0)) continue;
      const Tfn expected = inverse(a);
      if (!rel_close(b.l, expected.l, kReciprocityTol) || !rel_close(b.m, expected.m, kReciprocityTol) ||
          !rel_close(b.u, expected.u, kReciprocityTol)) {
        out.push_back({ViolationKind::kReciprocity, i, j,
                       "entry " + pair_str(j, i) + " " + to_string(b) + " is not the inverse " + to_string(expected) + " of " + pair_str(i, j)});
      }
    }
  }

  if (conf != nullptr) {
    if (conf->size() != n) {
      out.push_back({ViolationKind::kSizeMismatch, 0, 0, "confidence matrix size differs from preference matrix size"});
      return out;
    }
    check_confidence_pattern(pcm, *conf, out);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !conf->has(i, j)) continue;
        const Tfn& c = conf->value(i, j);
        if (!(c.l >= 0.0) || !c.is_ordered()) {
          out.push_back({ViolationKind::kConfidenceNegative, i, j, "confidence " + pair_str(i, j) + " must satisfy 0 <= l <= m <= u"});
        }
        if (j > i && conf->has(j, i) && conf->value(j, i) != c) {
          out.push_back({ViolationKind::kConfidenceAsymmetry, i, j, "confidence " + pair_str(i, j) + " differs from " + pair_str(j, i)});
        }
      }
    }
  }
  return out;
}

ConsistencyResult is_consistent_triads(const CrispPcm& pcm, double tol) {
  ConsistencyResult result;
  const auto n = pcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pcm.has(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!pcm.has(j, k) || !pcm.has(k, i)) continue;
        const double prod = pcm.value(i, j) * pcm.value(j, k) * pcm.value(k, i);
        if (std::abs(prod - 1.0) > tol) result.violations.push_back({i, j, k, prod});
      }
    }
  }
  result.consistent = result.violations.empty();
  return result;
}

}  // namespace pctrees
