#include <doctest.h>

#include <sstream>
#include <vector>

#include "covrank/errors.hpp"
#include "covrank/eval.hpp"
#include "covrank/rankcore.hpp"
#include "covrank/rng.hpp"
#include "covrank/synth.hpp"
#include "oracles.hpp"

using namespace covrank;
using namespace covrank::testing;

TEST_CASE("cov counts fully covered items") {
  // x:{a}, y:{a,b}
  const auto g = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(cov(g, std::vector<NodeId>{}) == 0);
  CHECK(cov(g, std::vector<NodeId>{0}) == 1);
  CHECK(cov(g, std::vector<NodeId>{1}) == 0);
  CHECK(cov(g, std::vector<NodeId>{0, 1}) == 2);
  CHECK_THROWS_AS(static_cast<void>(cov(g, std::vector<NodeId>{5})), DataError);
  CHECK_THROWS_AS(static_cast<void>(cov(g, std::vector<NodeId>{-1})), DataError);
}

TEST_CASE("cov of the full contributor set is the item count") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenReport report;
    const auto g = generate_er({30, 50, 0.1, seed}, &report);
    std::vector<NodeId> all;
    for (NodeId c = 0; c < g.num_contributors(); ++c) all.push_back(c);
    CHECK(cov(g, all) == g.num_items());
  }
}

TEST_CASE("coverage curve on hand graphs") {
  SUBCASE("one item needing both contributors") {
    const auto g = make_graph(2, 1, {{0, 0}, {1, 0}});
    Ranking r{"manual", {0, 1}, {}};
    const auto curve = coverage_curve(g, r);
    CHECK(curve.covered == std::vector<std::int64_t>{0, 1});
    CHECK(curve.auc == doctest::Approx(0.5));
    Ranking r2{"manual", {1, 0}, {}};
    CHECK(coverage_curve(g, r2).auc == doctest::Approx(0.5));
  }
  SUBCASE("hand-computed two-step curve") {
    // x:{a}, y:{b}, z:{b}, ranking [b, a]: covered = [2, 3], auc = 5/6.
    const auto g = make_graph(2, 3, {{0, 0}, {1, 1}, {1, 2}});
    Ranking r{"manual", {1, 0}, {}};
    const auto curve = coverage_curve(g, r);
    CHECK(curve.covered == std::vector<std::int64_t>{2, 3});
    CHECK(curve.auc == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(auc_of(curve) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  }
  SUBCASE("all coverage at the final step") {
    const auto g = make_graph(4, 1, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    Ranking r{"manual", {0, 1, 2, 3}, {}};
    const auto curve = coverage_curve(g, r);
    CHECK(curve.covered == std::vector<std::int64_t>{0, 0, 0, 1});
    CHECK(curve.auc == doctest::Approx(1.0 / 4.0));  // 1/|C|
  }
  SUBCASE("early coverage dominates") {
    const auto g = make_graph(3, 2, {{0, 0}, {0, 1}});
    Ranking r{"manual", {0, 1, 2}, {}};
    const auto curve = coverage_curve(g, r);
    CHECK(curve.covered == std::vector<std::int64_t>{2, 2, 2});
    CHECK(curve.auc == doctest::Approx(1.0));
  }
}

TEST_CASE("coverage curve rejects non-permutations") {
  const auto g = make_graph(2, 1, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(static_cast<void>(coverage_curve(g, Ranking{"m", {0}, {}})), DataError);
  CHECK_THROWS_AS(static_cast<void>(coverage_curve(g, Ranking{"m", {0, 0}, {}})), DataError);
  CHECK_THROWS_AS(static_cast<void>(coverage_curve(g, Ranking{"m", {0, 5}, {}})), DataError);
}

TEST_CASE("incremental curve matches from-scratch cov on sampled prefixes") {
  Rng rng(17);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenReport report;
    const auto g = generate_er({60, 45, 0.07, 100 + seed}, &report);
    const auto r = mincov(g);
    const auto curve = coverage_curve(g, r);
    CHECK(curve.covered.back() == g.num_items());
    for (std::size_t j = 1; j < curve.covered.size(); ++j) {
      CHECK(curve.covered[j] >= curve.covered[j - 1]);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto len =
          static_cast<std::size_t>(rng.uniform(static_cast<std::uint64_t>(r.order.size())) + 1);
      const std::vector<NodeId> prefix(r.order.begin(), r.order.begin() + static_cast<long>(len));
      CHECK(curve.covered[len - 1] == cov(g, prefix));
    }
  }
}

TEST_CASE("curve CSV has the leading zero row") {
  const auto g = make_graph(2, 3, {{0, 0}, {1, 1}, {1, 2}});
  const auto curve = coverage_curve(g, Ranking{"manual", {1, 0}, {}});
  std::ostringstream out;
  write_curve_csv(curve, out);
  CHECK(out.str() == "k,covered,fraction\n0,0,0\n1,2,0.666667\n2,3,1\n");
}
