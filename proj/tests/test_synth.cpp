#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "covrank/edge_list.hpp"
#include "covrank/errors.hpp"
#include "covrank/eval.hpp"
#include "covrank/rng.hpp"
#include "covrank/search.hpp"
#include "covrank/synth.hpp"
#include "oracles.hpp"

using namespace covrank;
using namespace covrank::testing;

namespace {

std::string canonical(const BipartiteGraph& g) {
  std::ostringstream out;
  write_canonical_edge_list(g, out);
  return out.str();
}

}  // namespace

TEST_CASE("powerlaw with unit degree caps is a perfect matching") {
  PowerLawConfig cfg{50, 50, 0.5, 0.5, 1, 1, 11};
  GenReport report;
  const auto g = generate_powerlaw(cfg, &report);
  CHECK(g.num_edges() == 50);
  CHECK(report.duplicates_collapsed == 0);
  for (NodeId c = 0; c < g.num_contributors(); ++c) CHECK(g.contributor_degree(c) == 1);
  for (NodeId i = 0; i < g.num_items(); ++i) CHECK(g.item_degree(i) == 1);
}

TEST_CASE("powerlaw respects degree caps at full scale") {
  PowerLawConfig cfg{5000, 5000, 0.5, 0.5, 20, 100, 1};
  GenReport report;
  const auto g = generate_powerlaw(cfg, &report);
  CHECK(g.max_contributor_degree() <= 20);
  CHECK(g.max_item_degree() <= 100);
  CHECK(g.num_contributors() == 5000);
  CHECK(g.num_items() == 5000);
  for (NodeId i = 0; i < g.num_items(); ++i) CHECK(g.item_degree(i) >= 1);
  std::int64_t c_sum = 0, i_sum = 0;
  for (NodeId c = 0; c < g.num_contributors(); ++c) c_sum += g.contributor_degree(c);
  for (NodeId i = 0; i < g.num_items(); ++i) i_sum += g.item_degree(i);
  CHECK(c_sum == g.num_edges());
  CHECK(i_sum == g.num_edges());
  CHECK(report.realized_edges == g.num_edges());
}

TEST_CASE("powerlaw sampling follows the truncated law qualitatively") {
  Rng rng(5);
  const auto degrees = sample_powerlaw_degrees(20000, 0.5, 10, rng);
  std::vector<std::int64_t> histogram(11, 0);
  for (auto d : degrees) {
    REQUIRE(d >= 1);
    REQUIRE(d <= 10);
    ++histogram[static_cast<std::size_t>(d)];
  }
  // p(d) ~ d^-0.5 is decreasing: degree 1 clearly outnumbers degree 10.
  CHECK(histogram[1] > histogram[10]);
  const double expected_ratio = std::pow(10.0, -0.5);
  const double observed_ratio =
      static_cast<double>(histogram[10]) / static_cast<double>(histogram[1]);
  CHECK(observed_ratio == doctest::Approx(expected_ratio).epsilon(0.15));
}

TEST_CASE("infeasible reconciliation is rejected") {
  // Contributors: 3 stubs max (all caps 1); items demand 5 -> item side is
  // heavier with every degree already 1.
  PowerLawConfig cfg{3, 5, 0.5, 0.5, 1, 1, 2};
  CHECK_THROWS_AS(static_cast<void>(generate_powerlaw(cfg)), DataError);
}

TEST_CASE("generation is deterministic per seed") {
  PowerLawConfig cfg{200, 300, 0.5, 0.7, 15, 20, 77};
  const auto a = canonical(generate_powerlaw(cfg));
  const auto b = canonical(generate_powerlaw(cfg));
  CHECK(a == b);
  cfg.seed = 78;
  CHECK(canonical(generate_powerlaw(cfg)) != a);

  ErConfig er{100, 100, 0.05, 13};
  CHECK(canonical(generate_er(er)) == canonical(generate_er(er)));
}

TEST_CASE("er generator edge cases") {
  SUBCASE("p = 0 surfaces the empty-graph error") {
    CHECK_THROWS_WITH_AS(static_cast<void>(generate_er({3, 3, 0.0, 1})),
                         doctest::Contains("empty graph"), DataError);
  }
  SUBCASE("p = 1 is complete bipartite") {
    GenReport report;
    const auto g = generate_er({3, 3, 1.0, 1}, &report);
    CHECK(g.num_edges() == 9);
    CHECK(report.isolated_items_dropped == 0);
  }
  SUBCASE("realized edges stay within 3 sigma of the binomial mean") {
    GenReport report;
    const auto g = generate_er({5000, 5000, 0.004, 4}, &report);
    const double mean = 5000.0 * 5000.0 * 0.004;
    const double sigma = std::sqrt(5000.0 * 5000.0 * 0.004 * 0.996);
    CHECK(std::abs(static_cast<double>(g.num_edges()) - mean) <= 3.0 * sigma);
    CHECK(g.num_items() + report.isolated_items_dropped == 5000);
    for (NodeId i = 0; i < g.num_items(); ++i) CHECK(g.item_degree(i) >= 1);
  }
  SUBCASE("isolated items are dropped with a count") {
    GenReport report;
    const auto g = generate_er({2, 50, 0.05, 9}, &report);
    CHECK(report.isolated_items_dropped > 0);
    CHECK(g.num_items() + report.isolated_items_dropped == 50);
  }
}

TEST_CASE("dks reduction carries the budget and the coverage identity") {
  SUBCASE("triangle with k=3") {
    const auto instance =
        dks_to_criticalset(SimpleGraph::from_pairs(3, {{0, 1}, {0, 2}, {1, 2}}), 3);
    CHECK(instance.budget == 3);
    CHECK(cov(instance.graph, std::vector<NodeId>{0, 1, 2}) == 3);
  }
  SUBCASE("two disjoint edges with k=2") {
    const auto instance = dks_to_criticalset(SimpleGraph::from_pairs(4, {{0, 1}, {2, 3}}), 2);
    CHECK(brute_force_best_k(instance.graph, instance.budget).best_cov == 1);
  }
  SUBCASE("petersen graph, k=5") {
    std::vector<EdgePair> edges;
    for (NodeId v = 0; v < 5; ++v) {
      edges.push_back({v, static_cast<NodeId>((v + 1) % 5)});
      edges.push_back({v, static_cast<NodeId>(v + 5)});
      edges.push_back({static_cast<NodeId>(v + 5), static_cast<NodeId>(5 + (v + 2) % 5)});
    }
    const auto petersen = SimpleGraph::from_pairs(10, edges);
    REQUIRE(petersen.edges.size() == 15);
    const auto instance = dks_to_criticalset(petersen, 5);
    const auto via_reduction = brute_force_best_k(instance.graph, 5).best_cov;
    CHECK(via_reduction == best_k_induced_edges(petersen, 5));
    CHECK(via_reduction == 5);  // the outer 5-cycle; girth 5 forbids anything denser
  }
}

TEST_CASE("reduction identity holds across random graphs and subsets") {
  Rng rng(23);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto n = static_cast<NodeId>(5 + seed % 12);
    const auto m = std::min<std::int64_t>(2 * n, static_cast<std::int64_t>(n) * (n - 1) / 2);
    const auto source = random_simple_graph(n, m, 500 + seed);
    const auto g = incidence_transform(source);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<NodeId> subset;
      for (NodeId v = 0; v < n; ++v) {
        if (rng.uniform(2) == 0) subset.push_back(v);
      }
      CHECK(cov(g, subset) == induced_edge_count(source, subset));
    }
  }
}

TEST_CASE("explicit degree sequences drive the configuration model") {
  std::vector<std::int64_t> cdeg{3, 3, 2};
  std::vector<std::int64_t> ideg{2, 2, 2, 2};
  GenReport report;
  const auto g = graph_from_degree_sequences(cdeg, ideg, 6, &report);
  CHECK(g.num_contributors() == 3);
  CHECK(g.num_items() == 4);
  CHECK(g.num_edges() + report.duplicates_collapsed == 8);
  CHECK_THROWS_AS(static_cast<void>(graph_from_degree_sequences({1}, {2}, 0)), DataError);
}

TEST_CASE("random_bipartite drops isolated items and reports realized edges") {
  GenReport report;
  const auto g = random_bipartite(100, 100, 500, 3, &report);
  CHECK(report.realized_edges == g.num_edges());
  CHECK(g.num_edges() + report.duplicates_collapsed == 500);
  for (NodeId i = 0; i < g.num_items(); ++i) CHECK(g.item_degree(i) >= 1);
}
