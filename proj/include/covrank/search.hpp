#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covrank/bigraph.hpp"
#include "covrank/ranking.hpp"
#include "covrank/rankcore.hpp"

namespace covrank {

enum class ShcInit { kRandom, kMincovSeeded };

struct ShcParams {
  std::uint64_t seed = 0;
  std::int64_t restarts = 1;
  std::int64_t max_moves_per_restart = 0;
  std::int64_t patience = 0;  // non-improving moves before convergence
  ShcInit init = ShcInit::kRandom;
};

struct ShcRestartStats {
  double initial_auc = 0.0;
  double final_auc = 0.0;
  std::int64_t moves = 0;
  std::int64_t accepted = 0;
  std::int64_t improved = 0;
};

struct ShcResult {
  Ranking ranking;
  double auc = 0.0;
  std::vector<ShcRestartStats> restarts;
};

// Stochastic hill climbing over full contributor orderings with AUC as the
// objective. A move swaps two positions chosen uniformly at random and is
// accepted iff the AUC does not decrease; a restart stops after `patience`
// consecutive moves without strict improvement or after the move budget.
// The best ordering across restarts wins, first found on ties. Restart r
// derives its generator from seed + r, so runs are reproducible.
ShcResult shc_rank(const BipartiteGraph& g, const ShcParams& params);

struct OracleResult {
  std::int64_t k = 0;
  std::vector<NodeId> best_set;  // ascending ids, lexicographically smallest maximizer
  std::int64_t best_cov = 0;
  std::int64_t evaluated = 0;
};

// Exhaustively evaluates all size-k contributor subsets in lexicographic
// order (monotonicity makes size exactly k sufficient). Refuses when
// C(|C|, k) exceeds `limit` (GuardError).
OracleResult brute_force_best_k(const BipartiteGraph& g, std::int64_t k,
                                std::int64_t limit = 5'000'000);

// Permutation-enumeration Shapley values: averages marginal coverage gains
// over all |C|! arrival orders with exact integer accumulation, divided once
// at the end. Refuses |C| > 10 (GuardError).
ShapleyScores brute_force_shapley(const BipartiteGraph& g);

struct SupermodularWitness {
  std::vector<NodeId> set_a, set_b;  // A subset of B
  NodeId v = -1;                     // v outside B; -1 for a monotonicity witness
  std::int64_t cov_a = 0, cov_av = 0, cov_b = 0, cov_bv = 0;
  bool monotonicity = false;  // true: cov(A) > cov(B); false: margin violation
  std::string describe() const;
};

// Verifies cov(A + v) - cov(A) <= cov(B + v) - cov(B) and cov(A) <= cov(B)
// over chains A subset of B subset of C, v outside B. trials == 0 runs the
// exhaustive check (requires |C| <= 16, GuardError otherwise); trials > 0
// samples that many random chains from `seed`. Returns the first violating
// chain as a witness, or nullopt when every checked chain passes.
std::optional<SupermodularWitness> check_supermodular(const BipartiteGraph& g,
                                                      std::int64_t trials, std::uint64_t seed);

// JSON text for an oracle result: {k, best_cov, best_set: [labels], evaluated}.
std::string oracle_result_json(const OracleResult& result, const BipartiteGraph& g);

}  // namespace covrank
