#pragma once

#include <cstdint>
#include <vector>

#include "covrank/bigraph.hpp"
#include "covrank/rng.hpp"

namespace covrank {

// Truncated power-law configuration model: degrees drawn from
// p(d) proportional to d^(-alpha) on {1, ..., max_degree} per side.
struct PowerLawConfig {
  std::int64_t n_contributors = 0;
  std::int64_t n_items = 0;
  double alpha_c = 0.0;
  double alpha_i = 0.0;
  std::int64_t max_degree_c = 0;  // D_C, at most n_items
  std::int64_t max_degree_i = 0;  // D_I, at most n_contributors
  std::uint64_t seed = 0;
};

struct ErConfig {
  std::int64_t n_contributors = 0;
  std::int64_t n_items = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct GenReport {
  std::int64_t realized_edges = 0;
  std::int64_t duplicates_collapsed = 0;
  std::int64_t reconciliation_decrements = 0;
  std::int64_t isolated_items_dropped = 0;
};

// Samples per-side degree sequences, reconciles their sums by decrementing
// uniform random degree->1 nodes on the heavier side, stub-matches (item
// stubs shuffled, paired positionally), and collapses duplicate pairs.
// Deterministic from cfg.seed. Throws DataError when the sums cannot be
// reconciled.
BipartiteGraph generate_powerlaw(const PowerLawConfig& cfg, GenReport* report = nullptr);

// Each of the n_C x n_I pairs is included independently with probability p
// (geometric skipping for sparse p). Items of realized degree 0 are dropped
// with a count; degree-0 contributors are retained.
BipartiteGraph generate_er(const ErConfig& cfg, GenReport* report = nullptr);

// A densest-k-subgraph instance mapped onto this problem: the incidence
// transform of g paired with the unchanged budget. For every contributor set
// S, cov(S) equals the induced edge count of S in g.
struct DksInstance {
  BipartiteGraph graph;
  std::int64_t budget = 0;
};
DksInstance dks_to_criticalset(const SimpleGraph& g, std::int64_t k);

// Building blocks, exposed for callers that need explicit degree sequences.
std::vector<std::int64_t> sample_powerlaw_degrees(std::int64_t n, double alpha,
                                                  std::int64_t max_degree, Rng& rng);

// Stub matching for given degree sequences (sums must match): contributor
// stubs in block order, item stubs shuffled, paired positionally; duplicates
// collapsed and counted.
std::vector<EdgePair> configuration_model_pairs(const std::vector<std::int64_t>& contributor_degrees,
                                                const std::vector<std::int64_t>& item_degrees,
                                                Rng& rng, std::int64_t* duplicates_collapsed);

// Configuration-model graph for explicit degree sequences. Labels are
// c0..c|C|-1 / i0..i|I|-1.
BipartiteGraph graph_from_degree_sequences(const std::vector<std::int64_t>& contributor_degrees,
                                           const std::vector<std::int64_t>& item_degrees,
                                           std::uint64_t seed, GenReport* report = nullptr);

// Uniform random bipartite graph with (approximately) the requested number of
// edges: pairs sampled with replacement, duplicates collapsed, isolated items
// dropped. Used by the scaling benchmark.
BipartiteGraph random_bipartite(std::int64_t n_contributors, std::int64_t n_items,
                                std::int64_t edges, std::uint64_t seed,
                                GenReport* report = nullptr);

}  // namespace covrank
