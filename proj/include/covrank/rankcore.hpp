#pragma once

#include <vector>

#include "covrank/bigraph.hpp"
#include "covrank/ranking.hpp"

namespace covrank {

// Per-contributor scores phi_c, indexed by contributor id. Always satisfies
// sum(phi) = |I| up to accumulation error, and phi_c = 0 iff deg(c) = 0.
using ShapleyScores = std::vector<double>;

// Closed-form coverage-game Shapley value: phi_c = sum over items i adjacent
// to c of 1/deg(i). O(|E|). Each contributor's sum accumulates over its own
// adjacency list in stored order, so results do not depend on thread count.
ShapleyScores shapley_cov(const BipartiteGraph& g, int threads = 1);

// Contributors sorted by phi descending, id ascending on ties.
Ranking shapley_rank(const BipartiteGraph& g, int threads = 1);

// Iterative peeling: repeatedly remove the contributor covering the fewest
// not-yet-covered items (bucket queue, FIFO ties, ascending-id initial fill);
// the ranking is the reversed removal order. O(|E|) total queue operations.
Ranking mincov(const BipartiteGraph& g);

}  // namespace covrank
