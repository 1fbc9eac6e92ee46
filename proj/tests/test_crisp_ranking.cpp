#include "doctest.h"

#include <cmath>

#include "fixtures.hpp"
#include "pctrees/crisp_ranking.hpp"
#include "pctrees/error.hpp"

using namespace pctrees;
namespace t = pctrees::testing;

namespace {

bool near(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

const TreeResult& find_tree(const CrispRankingResult& r, const SpanningTree& tree) {
  for (const auto& x : r.trees)
    if (x.tree == tree) return x;
  throw std::logic_error("tree not found");
}

}  // namespace

TEST_CASE("tree weights match the linear-system oracle") {
  const auto pcm = t::example15_pcm();
  for (const auto& tree : {t::ex_st1(), t::ex_st2(), t::ex_st3()}) {
    CHECK(near(solve_tree_weights(pcm, tree).weights, t::tree_weights_by_linear_solve(pcm, tree), 1e-12));
  }
}

TEST_CASE("example 15 printed tree rows") {
  const auto pcm = t::example15_pcm();
  CHECK(near(solve_tree_weights(pcm, t::ex_st2()).weights, {0.274, 0.068, 0.548, 0.110}, 1e-3));
  CHECK(near(solve_tree_weights(pcm, t::ex_st3()).weights, {0.135, 0.541, 0.270, 0.054}, 1e-3));
  CHECK(near(solve_tree_weights(pcm, t::ex_st1(), Orientation::kPaperEq14).weights, {0.5, 0.125, 0.0625, 0.3125}, 1e-12));
  // The literal reading only touches the chain tree.
  CHECK(solve_tree_weights(pcm, t::ex_st2(), Orientation::kPaperEq14) == solve_tree_weights(pcm, t::ex_st2()));
}

TEST_CASE("example 15 reliabilities and aggregation") {
  const auto pcm = t::example15_pcm();
  const auto conf = t::example15_conf();
  const auto r = rank_by_spanning_trees(pcm, &conf);
  REQUIRE(r.trees.size() == 3);
  CHECK(find_tree(r, t::ex_st1()).abs_reliability == 8.0);
  CHECK(find_tree(r, t::ex_st2()).abs_reliability == 24.0);
  CHECK(find_tree(r, t::ex_st3()).abs_reliability == 6.0);
  CHECK(find_tree(r, t::ex_st1()).rel_reliability == doctest::Approx(8.0 / 38.0));
  CHECK(find_tree(r, t::ex_st2()).rel_reliability == doctest::Approx(24.0 / 38.0));

  std::vector<double> oracle(4, 0.0);
  for (auto [tree, rr] : {std::pair{t::ex_st1(), 8.0}, {t::ex_st2(), 24.0}, {t::ex_st3(), 6.0}}) {
    const auto w = t::tree_weights_by_linear_solve(pcm, tree);
    for (std::size_t i = 0; i < 4; ++i) oracle[i] += rr / 38.0 * w[i];
  }
  CHECK(near(r.final_weights.weights, oracle, 1e-12));
  CHECK(r.ranking == std::vector<std::size_t>{2, 0, 1, 3});

  const auto eq14 = rank_by_spanning_trees(pcm, &conf, Orientation::kPaperEq14);
  CHECK(near(eq14.final_weights.weights, {0.300, 0.155, 0.402, 0.144}, 1e-3));
  CHECK(eq14.ranking == std::vector<std::size_t>{2, 0, 1, 3});
}

TEST_CASE("null confidence means uniform") {
  const auto pcm = t::example15_pcm();
  const auto r = rank_by_spanning_trees(pcm, nullptr);
  CHECK(near(r.final_weights.weights, spanning_tree_mean_uniform(pcm).weights, 1e-15));
  for (const auto& x : r.trees) CHECK(x.rel_reliability == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("zero reliability") {
  const std::vector<double> zeros{0.0, 0.0};
  CHECK_THROWS_AS(relative_reliabilities(zeros), ZeroReliabilityError);
  const auto pcm = t::example15_pcm();
  const auto g = build_graph(pcm);
  CrispConfidence conf(4);
  for (const auto& e : g.edges()) {
    conf.set(e.u, e.v, 0.0);
    conf.set(e.v, e.u, 0.0);
  }
  CHECK_THROWS_AS(rank_by_spanning_trees(pcm, &conf), ZeroReliabilityError);
}

TEST_CASE("missing tree edge") {
  CHECK_THROWS_AS(solve_tree_weights(t::example15_pcm(), t::tree_of({{1, 4}, {2, 3}, {3, 4}})), MissingEntryError);
}

TEST_CASE("ranking ties go to the lower index") {
  CHECK(rank(PriorityVector{{0.25, 0.5, 0.25}}) == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("harker auxiliary matrix") {
  const auto b = harker_matrix(t::example15_pcm());
  CHECK(b[0][0] == 2.0);
  CHECK(b[1][1] == 2.0);
  CHECK(b[2][2] == 1.0);
  CHECK(b[3][3] == 3.0);
  CHECK(b[0][3] == 0.0);
  CHECK(b[0][1] == 4.0);
}

TEST_CASE("example 16 harker") {
  const auto pcm = t::example15_pcm();
  const auto h = harker_evm_detailed(pcm);
  CHECK(near(h.weights.weights, {0.416, 0.252, 0.298, 0.0335}, 2e-3));
  const auto b = harker_matrix(pcm);
  double res = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double bw = 0.0;
    for (std::size_t j = 0; j < 4; ++j) bw += b[i][j] * h.weights[j];
    res = std::max(res, std::abs(bw - h.lambda_max * h.weights[i]));
  }
  CHECK(res <= 1e-8);
  CHECK(rank(h.weights) == std::vector<std::size_t>{0, 2, 1, 3});
}

TEST_CASE("example 16 gmm closed form") {
  const double c = std::cbrt(2.0);
  const double d = 5.0 + 6.0 * c + 5.0 * c * c;
  const auto g = incomplete_gmm(t::example15_pcm());
  CHECK(near(g.weights, {0.387, 0.2439, 0.307, 0.061}, 1e-3));
  CHECK(near(g.weights, {5.0 * c * c / d, 5.0 / d, 5.0 * c / d, c / d}, 1e-9));
  CHECK(rank(g) == std::vector<std::size_t>{0, 2, 1, 3});
}

TEST_CASE("gmm on a complete matrix is the row geometric mean") {
  const auto pcm = make_reciprocal(3, {{0, 1, 2.0}, {0, 2, 6.0}, {1, 2, 4.0}});
  std::vector<double> gm{std::cbrt(12.0), std::cbrt(2.0), std::cbrt(1.0 / 24.0)};
  const double s = gm[0] + gm[1] + gm[2];
  for (auto& x : gm) x /= s;
  CHECK(near(incomplete_gmm(pcm).weights, gm, 1e-12));
  CHECK(near(log_least_squares(pcm).weights, gm, 1e-12));
}

TEST_CASE("two alternatives") {
  const double a = 3.0;
  const auto pcm = make_reciprocal(2, {{0, 1, a}});
  const std::vector<double> want{a / (1 + a), 1 / (1 + a)};
  CHECK(near(rank_by_spanning_trees(pcm, nullptr).final_weights.weights, want, 1e-12));
  CHECK(near(harker_evm(pcm).weights, want, 1e-9));
  CHECK(near(incomplete_gmm(pcm).weights, want, 1e-12));
}
