#include "covrank/rankcore.hpp"

#include <algorithm>
#include <vector>

#include "covrank/bucket_queue.hpp"
#include "covrank/parallel.hpp"

namespace covrank {

ShapleyScores shapley_cov(const BipartiteGraph& g, int threads) {
  const auto n_c = g.num_contributors();
  const auto n_i = g.num_items();
  std::vector<double> inverse_degree(static_cast<std::size_t>(n_i));
  for (NodeId i = 0; i < n_i; ++i) {
    inverse_degree[static_cast<std::size_t>(i)] = 1.0 / static_cast<double>(g.item_degree(i));
  }
  ShapleyScores phi(static_cast<std::size_t>(n_c), 0.0);
  parallel_for(n_c, threads, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t c = begin; c < end; ++c) {
      double sum = 0.0;
      for (NodeId i : g.items_of(static_cast<NodeId>(c))) {
        sum += inverse_degree[static_cast<std::size_t>(i)];
      }
      phi[static_cast<std::size_t>(c)] = sum;
    }
  });
  return phi;
}

Ranking shapley_rank(const BipartiteGraph& g, int threads) {
  return ranking_from_scores("shapley", shapley_cov(g, threads));
}

Ranking mincov(const BipartiteGraph& g) {
  const auto n_c = g.num_contributors();
  const auto n_i = g.num_items();

  // Priority of a contributor = count of its incident not-yet-covered items,
  // initially its degree.
  std::vector<std::int64_t> priority(static_cast<std::size_t>(n_c));
  for (NodeId c = 0; c < n_c; ++c) priority[static_cast<std::size_t>(c)] = g.contributor_degree(c);
  MinBucketQueue queue(priority);

  std::vector<bool> covered(static_cast<std::size_t>(n_i), false);
  std::vector<NodeId> removal;
  removal.reserve(static_cast<std::size_t>(n_c));

  while (!queue.empty()) {
    const NodeId c = queue.pop_min();
    removal.push_back(c);
    for (NodeId i : g.items_of(c)) {
      if (covered[static_cast<std::size_t>(i)]) continue;
      covered[static_cast<std::size_t>(i)] = true;
      for (NodeId other : g.contributors_of(i)) {
        if (queue.live(other)) queue.decrement(other);
      }
    }
  }

  Ranking r;
  r.method = "mincov";
  r.order.assign(removal.rbegin(), removal.rend());
  return r;
}

}  // namespace covrank
