#include "covrank/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "covrank/errors.hpp"

namespace covrank {

namespace {

std::vector<std::string> index_labels(const char* prefix, std::int64_t n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) labels.push_back(prefix + std::to_string(j));
  return labels;
}

// Decrements uniform random degree->1 nodes of `degrees` until its sum drops
// to `target`. Returns the number of decrements performed.
std::int64_t reconcile_down(std::vector<std::int64_t>& degrees, std::int64_t sum,
                            std::int64_t target, Rng& rng) {
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] > 1) candidates.push_back(j);
  }
  std::int64_t decrements = 0;
  while (sum > target) {
    if (candidates.empty()) {
      throw DataError("degree sums cannot be reconciled: all degrees on the heavier side are 1");
    }
    const auto slot = static_cast<std::size_t>(rng.uniform(candidates.size()));
    const std::size_t node = candidates[slot];
    --degrees[node];
    --sum;
    ++decrements;
    if (degrees[node] == 1) {
      candidates[slot] = candidates.back();
      candidates.pop_back();
    }
  }
  return decrements;
}

}  // namespace

std::vector<std::int64_t> sample_powerlaw_degrees(std::int64_t n, double alpha,
                                                  std::int64_t max_degree, Rng& rng) {
  if (alpha <= 0.0) throw UsageError("power-law exponent must be > 0");
  if (max_degree < 1) throw UsageError("max degree must be >= 1");

  // Cumulative distribution of p(d) proportional to d^(-alpha), d in
  // {1, ..., max_degree}. Truncated support keeps alpha < 1 well-defined.
  std::vector<double> cumulative(static_cast<std::size_t>(max_degree));
  double sum = 0.0;
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    sum += std::pow(static_cast<double>(d), -alpha);
    cumulative[static_cast<std::size_t>(d - 1)] = sum;
  }
  for (double& value : cumulative) value /= sum;
  cumulative.back() = 1.0;

  std::vector<std::int64_t> degrees(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    const double u = rng.uniform_double();
    const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u,
                                     [](double c, double x) { return c <= x; });
    degrees[static_cast<std::size_t>(j)] =
        static_cast<std::int64_t>(it - cumulative.begin()) + 1;
  }
  return degrees;
}

std::vector<EdgePair> configuration_model_pairs(const std::vector<std::int64_t>& contributor_degrees,
                                                const std::vector<std::int64_t>& item_degrees,
                                                Rng& rng, std::int64_t* duplicates_collapsed) {
  const std::int64_t stub_count =
      std::accumulate(contributor_degrees.begin(), contributor_degrees.end(), std::int64_t{0});
  const std::int64_t item_stub_count =
      std::accumulate(item_degrees.begin(), item_degrees.end(), std::int64_t{0});
  if (stub_count != item_stub_count) {
    throw DataError("degree sums differ: " + std::to_string(stub_count) + " vs " +
                    std::to_string(item_stub_count));
  }

  std::vector<NodeId> contributor_stubs;
  contributor_stubs.reserve(static_cast<std::size_t>(stub_count));
  for (std::size_t c = 0; c < contributor_degrees.size(); ++c) {
    for (std::int64_t r = 0; r < contributor_degrees[c]; ++r) {
      contributor_stubs.push_back(static_cast<NodeId>(c));
    }
  }
  std::vector<NodeId> item_stubs;
  item_stubs.reserve(static_cast<std::size_t>(stub_count));
  for (std::size_t i = 0; i < item_degrees.size(); ++i) {
    for (std::int64_t r = 0; r < item_degrees[i]; ++r) {
      item_stubs.push_back(static_cast<NodeId>(i));
    }
  }
  rng.shuffle(item_stubs);

  std::vector<EdgePair> pairs;
  pairs.reserve(static_cast<std::size_t>(stub_count));
  for (std::size_t s = 0; s < contributor_stubs.size(); ++s) {
    pairs.emplace_back(contributor_stubs[s], item_stubs[s]);
  }
  std::sort(pairs.begin(), pairs.end());
  const auto before = static_cast<std::int64_t>(pairs.size());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (duplicates_collapsed != nullptr) {
    *duplicates_collapsed = before - static_cast<std::int64_t>(pairs.size());
  }
  return pairs;
}

BipartiteGraph graph_from_degree_sequences(const std::vector<std::int64_t>& contributor_degrees,
                                           const std::vector<std::int64_t>& item_degrees,
                                           std::uint64_t seed, GenReport* report) {
  Rng rng(seed);
  GenReport local;
  auto pairs =
      configuration_model_pairs(contributor_degrees, item_degrees, rng, &local.duplicates_collapsed);
  local.realized_edges = static_cast<std::int64_t>(pairs.size());
  auto g = BipartiteGraph::from_edges(
      std::move(pairs), index_labels("c", static_cast<std::int64_t>(contributor_degrees.size())),
      index_labels("i", static_cast<std::int64_t>(item_degrees.size())));
  if (report != nullptr) *report = local;
  return g;
}

BipartiteGraph generate_powerlaw(const PowerLawConfig& cfg, GenReport* report) {
  if (cfg.n_contributors < 1 || cfg.n_items < 1) throw UsageError("side sizes must be >= 1");
  if (cfg.max_degree_c < 1 || cfg.max_degree_c > cfg.n_items) {
    throw UsageError("max contributor degree must be in [1, n_items]");
  }
  if (cfg.max_degree_i < 1 || cfg.max_degree_i > cfg.n_contributors) {
    throw UsageError("max item degree must be in [1, n_contributors]");
  }

  Rng rng(cfg.seed);
  auto contributor_degrees =
      sample_powerlaw_degrees(cfg.n_contributors, cfg.alpha_c, cfg.max_degree_c, rng);
  auto item_degrees = sample_powerlaw_degrees(cfg.n_items, cfg.alpha_i, cfg.max_degree_i, rng);

  GenReport local;
  const std::int64_t sum_c =
      std::accumulate(contributor_degrees.begin(), contributor_degrees.end(), std::int64_t{0});
  const std::int64_t sum_i =
      std::accumulate(item_degrees.begin(), item_degrees.end(), std::int64_t{0});
  if (sum_c > sum_i) {
    local.reconciliation_decrements = reconcile_down(contributor_degrees, sum_c, sum_i, rng);
  } else if (sum_i > sum_c) {
    local.reconciliation_decrements = reconcile_down(item_degrees, sum_i, sum_c, rng);
  }

  auto pairs =
      configuration_model_pairs(contributor_degrees, item_degrees, rng, &local.duplicates_collapsed);
  local.realized_edges = static_cast<std::int64_t>(pairs.size());
  auto g = BipartiteGraph::from_edges(std::move(pairs), index_labels("c", cfg.n_contributors),
                                      index_labels("i", cfg.n_items));
  if (report != nullptr) *report = local;
  return g;
}

namespace {

// Builds a graph from raw pairs, dropping items that received no edge.
// Dropped items keep no trace beyond the report; surviving items keep labels
// derived from their original grid index.
BipartiteGraph build_dropping_isolated_items(std::vector<EdgePair> pairs,
                                             std::int64_t n_contributors, std::int64_t n_items,
                                             GenReport& report) {
  std::vector<std::int64_t> item_degree(static_cast<std::size_t>(n_items), 0);
  for (const auto& [c, i] : pairs) ++item_degree[static_cast<std::size_t>(i)];

  std::vector<NodeId> remap(static_cast<std::size_t>(n_items), -1);
  std::vector<std::string> item_labels;
  NodeId next = 0;
  for (std::int64_t i = 0; i < n_items; ++i) {
    if (item_degree[static_cast<std::size_t>(i)] > 0) {
      remap[static_cast<std::size_t>(i)] = next++;
      item_labels.push_back("i" + std::to_string(i));
    } else {
      ++report.isolated_items_dropped;
    }
  }
  for (auto& [c, i] : pairs) i = remap[static_cast<std::size_t>(i)];

  return BipartiteGraph::from_edges(std::move(pairs), index_labels("c", n_contributors),
                                    std::move(item_labels), &report.duplicates_collapsed);
}

}  // namespace

BipartiteGraph generate_er(const ErConfig& cfg, GenReport* report) {
  if (cfg.n_contributors < 1 || cfg.n_items < 1) throw UsageError("side sizes must be >= 1");
  if (cfg.p < 0.0 || cfg.p > 1.0) throw UsageError("edge probability must be in [0, 1]");

  Rng rng(cfg.seed);
  const std::int64_t total = cfg.n_contributors * cfg.n_items;
  std::vector<EdgePair> pairs;

  if (cfg.p >= 1.0) {
    pairs.reserve(static_cast<std::size_t>(total));
    for (NodeId c = 0; c < cfg.n_contributors; ++c) {
      for (NodeId i = 0; i < cfg.n_items; ++i) pairs.emplace_back(c, i);
    }
  } else if (cfg.p > 0.0) {
    // Geometric skipping over the flattened n_C x n_I grid.
    const double log_q = std::log1p(-cfg.p);
    std::int64_t cell = -1;
    while (true) {
      const double u = rng.uniform_double();
      const double gap = std::floor(std::log1p(-u) / log_q);
      if (gap >= static_cast<double>(total)) break;
      cell += static_cast<std::int64_t>(gap) + 1;
      if (cell >= total) break;
      pairs.emplace_back(static_cast<NodeId>(cell / cfg.n_items),
                         static_cast<NodeId>(cell % cfg.n_items));
    }
  }

  GenReport local;
  auto g = build_dropping_isolated_items(std::move(pairs), cfg.n_contributors, cfg.n_items, local);
  local.realized_edges = g.num_edges();
  if (report != nullptr) *report = local;
  return g;
}

BipartiteGraph random_bipartite(std::int64_t n_contributors, std::int64_t n_items,
                                std::int64_t edges, std::uint64_t seed, GenReport* report) {
  if (n_contributors < 1 || n_items < 1) throw UsageError("side sizes must be >= 1");
  Rng rng(seed);
  std::vector<EdgePair> pairs;
  pairs.reserve(static_cast<std::size_t>(edges));
  for (std::int64_t e = 0; e < edges; ++e) {
    pairs.emplace_back(static_cast<NodeId>(rng.uniform(static_cast<std::uint64_t>(n_contributors))),
                       static_cast<NodeId>(rng.uniform(static_cast<std::uint64_t>(n_items))));
  }
  GenReport local;
  auto g = build_dropping_isolated_items(std::move(pairs), n_contributors, n_items, local);
  local.realized_edges = g.num_edges();
  if (report != nullptr) *report = local;
  return g;
}

DksInstance dks_to_criticalset(const SimpleGraph& g, std::int64_t k) {
  return {incidence_transform(g), k};
}

}  // namespace covrank
