#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "pctrees/pcm.hpp"

using namespace pctrees;
using pctrees::testing::example15_conf;
using pctrees::testing::example15_pcm;
using pctrees::testing::example17_pcm;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("matrix shape") {
  CHECK_THROWS_AS(CrispPcm(1), std::invalid_argument);
  CrispPcm p(3);
  CHECK_FALSE(p.has(0, 1));
  CHECK_THROWS_AS(p.value(0, 1), std::out_of_range);
  CHECK_THROWS_AS(p.at(3, 0), std::out_of_range);
  p.set(0, 1, 2.0);
  CHECK(p.value(0, 1) == 2.0);
  p.clear(0, 1);
  CHECK_FALSE(p.has(0, 1));
}

TEST_CASE("make_reciprocal fills mirrors and diagonal") {
  const auto p = example15_pcm();
  CHECK(p.value(0, 0) == 1.0);
  CHECK(p.value(1, 0) == doctest::Approx(0.25));
  CHECK(p.value(2, 0) == doctest::Approx(2.0));
  CHECK_FALSE(p.has(0, 3));
  CHECK(validate_crisp(p).empty());
  const auto c = example15_conf();
  CHECK(validate_crisp(p, &c).empty());
}

TEST_CASE("crisp validation reports each violation") {
  auto p = example15_pcm();
  p.set(1, 0, 4.0);
  CHECK(has_kind(validate_crisp(p), ViolationKind::kReciprocity));

  p = example15_pcm();
  p.set(3, 3, 2.0);
  CHECK(has_kind(validate_crisp(p), ViolationKind::kDiagonal));

  p = example15_pcm();
  p.clear(3, 2);
  CHECK(has_kind(validate_crisp(p), ViolationKind::kPresenceAsymmetry));

  p = example15_pcm();
  p.set(0, 1, -4.0);
  CHECK(has_kind(validate_crisp(p), ViolationKind::kNonPositive));

  p = example15_pcm();
  auto c = example15_conf();
  c.set(0, 1, -1.0);
  CHECK(has_kind(validate_crisp(p, &c), ViolationKind::kConfidenceNegative));
  c = example15_conf();
  c.set(0, 1, 2.0);
  CHECK(has_kind(validate_crisp(p, &c), ViolationKind::kConfidenceAsymmetry));
  c = example15_conf();
  c.set(0, 3, 1.0);
  c.set(3, 0, 1.0);
  CHECK(has_kind(validate_crisp(p, &c), ViolationKind::kConfidencePattern));
  const CrispConfidence small(3);
  CHECK(has_kind(validate_crisp(p, &small), ViolationKind::kSizeMismatch));
}

TEST_CASE("reciprocity tolerance is relative") {
  auto p = make_reciprocal(2, {{0, 1, 1e6}});
  p.set(1, 0, 1e-6 * (1 + 1e-12));
  CHECK(validate_crisp(p).empty());
  p.set(1, 0, 1e-6 * (1 + 1e-6));
  CHECK_FALSE(validate_crisp(p).empty());
}

TEST_CASE("fuzzy validation") {
  auto p = example17_pcm();
  CHECK(validate_fuzzy(p).empty());
  CHECK(p.value(2, 0) == Tfn{1, 2, 3});
  p.set(0, 1, Tfn{3, 2, 5});
  CHECK(has_kind(validate_fuzzy(p), ViolationKind::kUnorderedTfn));
  p = example17_pcm();
  p.set(1, 0, Tfn{0.2, 0.25, 0.5});
  CHECK(has_kind(validate_fuzzy(p), ViolationKind::kReciprocity));
  p = example17_pcm();
  p.set(0, 1, Tfn{0, 4, 5});
  CHECK(has_kind(validate_fuzzy(p), ViolationKind::kNonPositive));
}

TEST_CASE("triad consistency") {
  const auto consistent = testing::ratio_matrix({0.4, 0.3, 0.2, 0.1}, testing::complete_graph(4).edges());
  CHECK(is_consistent_triads(consistent, 1e-12).consistent);
  const auto r = is_consistent_triads(example15_pcm(), 1e-9);
  CHECK_FALSE(r.consistent);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].i == 0);
  CHECK(r.violations[0].j == 1);
  CHECK(r.violations[0].k == 2);
  CHECK(r.violations[0].product == doctest::Approx(4.0 * 2.0 * 2.0));
}
