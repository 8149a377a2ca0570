#pragma once

#include <cstdint>

#include "covrank/bigraph.hpp"
#include "covrank/ranking.hpp"

namespace covrank {

// Contributors by degree descending, id ascending on ties.
Ranking degree_rank(const BipartiteGraph& g);

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-10;
  std::int64_t max_iters = 200;
  int threads = 1;
};

struct PageRankResult {
  Ranking ranking;
  std::int64_t iterations = 0;
  bool converged = false;
};

// Power iteration on the undirected bipartite graph (each edge walked both
// ways), uniform teleport over all |C|+|I| nodes, dangling mass from
// degree-0 contributors redistributed uniformly. Stops when the L1 change
// drops below tol; returns the best iterate with converged=false otherwise.
// Only contributors are ranked.
PageRankResult pagerank_rank(const BipartiteGraph& g, const PageRankOptions& options = {});

// Exact shortest-path betweenness (Brandes) over the unweighted bipartite
// graph, contributors ranked by score. Refuses graphs with more than
// `size_guard` total nodes (GuardError naming --size-guard).
Ranking betweenness_rank(const BipartiteGraph& g, std::int64_t size_guard = 50000);

// Classic minimum-degree peeling over the union node set (contributors and
// items together, items ordered after contributors at equal degree); the
// ranking is the reversed removal order restricted to contributors.
Ranking dspeel_rank(const BipartiteGraph& g);

// Forward greedy coverage maximization: repeatedly append the contributor
// with the largest marginal coverage gain; on an all-zero-gain plateau fall
// back to the largest residual degree over uncovered items, then ascending
// id. Continues until every contributor is ranked.
Ranking forward_greedy_rank(const BipartiteGraph& g);

}  // namespace covrank
