#include "covrank/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

#include "covrank/bucket_queue.hpp"
#include "covrank/errors.hpp"
#include "covrank/parallel.hpp"

namespace covrank {

Ranking degree_rank(const BipartiteGraph& g) {
  std::vector<double> scores(static_cast<std::size_t>(g.num_contributors()));
  for (NodeId c = 0; c < g.num_contributors(); ++c) {
    scores[static_cast<std::size_t>(c)] = static_cast<double>(g.contributor_degree(c));
  }
  return ranking_from_scores("degree", scores);
}

PageRankResult pagerank_rank(const BipartiteGraph& g, const PageRankOptions& options) {
  if (options.damping <= 0.0 || options.damping >= 1.0) {
    throw UsageError("damping must be in (0, 1)");
  }
  const auto n_c = static_cast<std::int64_t>(g.num_contributors());
  const auto n_i = static_cast<std::int64_t>(g.num_items());
  const std::int64_t n = n_c + n_i;

  // Node v < n_c is contributor v; otherwise item v - n_c. Items always have
  // degree >= 1, so only contributors can dangle.
  std::vector<std::int64_t> degree(static_cast<std::size_t>(n));
  std::vector<NodeId> dangling;
  for (NodeId c = 0; c < n_c; ++c) {
    degree[static_cast<std::size_t>(c)] = g.contributor_degree(c);
    if (g.contributor_degree(c) == 0) dangling.push_back(c);
  }
  for (NodeId i = 0; i < n_i; ++i) {
    degree[static_cast<std::size_t>(n_c + i)] = g.item_degree(i);
  }

  std::vector<double> rank(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
  std::vector<double> next(static_cast<std::size_t>(n));
  const double d = options.damping;
  bool converged = false;
  std::int64_t iterations = 0;
  while (iterations < options.max_iters) {
    ++iterations;
    double dangling_mass = 0.0;
    for (NodeId c : dangling) dangling_mass += rank[static_cast<std::size_t>(c)];
    const double base = (1.0 - d) / static_cast<double>(n) +
                        d * dangling_mass / static_cast<double>(n);
    parallel_for(n, options.threads, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t v = begin; v < end; ++v) {
        double sum = 0.0;
        if (v < n_c) {
          for (NodeId i : g.items_of(static_cast<NodeId>(v))) {
            const auto u = static_cast<std::size_t>(n_c + i);
            sum += rank[u] / static_cast<double>(degree[u]);
          }
        } else {
          for (NodeId c : g.contributors_of(static_cast<NodeId>(v - n_c))) {
            sum += rank[static_cast<std::size_t>(c)] /
                   static_cast<double>(degree[static_cast<std::size_t>(c)]);
          }
        }
        next[static_cast<std::size_t>(v)] = base + d * sum;
      }
    });
    double l1 = 0.0;
    for (std::int64_t v = 0; v < n; ++v) {
      l1 += std::abs(next[static_cast<std::size_t>(v)] - rank[static_cast<std::size_t>(v)]);
    }
    rank.swap(next);
    if (l1 < options.tol) {
      converged = true;
      break;
    }
  }

  rank.resize(static_cast<std::size_t>(n_c));
  PageRankResult result;
  result.ranking = ranking_from_scores("pagerank", rank);
  result.iterations = iterations;
  result.converged = converged;
  return result;
}

Ranking betweenness_rank(const BipartiteGraph& g, std::int64_t size_guard) {
  const auto n_c = static_cast<std::int64_t>(g.num_contributors());
  const auto n_i = static_cast<std::int64_t>(g.num_items());
  const std::int64_t n = n_c + n_i;
  if (n > size_guard) {
    throw GuardError("graph has " + std::to_string(n) + " nodes, exceeding --size-guard=" +
                     std::to_string(size_guard));
  }

  // Flattened union adjacency: node v < n_c is contributor v, otherwise item
  // v - n_c. Neighbor order mirrors the per-side adjacency lists.
  std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t v = 0; v < n; ++v) {
    offsets[static_cast<std::size_t>(v) + 1] =
        offsets[static_cast<std::size_t>(v)] +
        (v < n_c ? g.contributor_degree(static_cast<NodeId>(v))
                 : g.item_degree(static_cast<NodeId>(v - n_c)));
  }
  std::vector<std::int32_t> targets(static_cast<std::size_t>(offsets.back()));
  {
    std::size_t fill = 0;
    for (NodeId c = 0; c < n_c; ++c) {
      for (NodeId i : g.items_of(c)) targets[fill++] = static_cast<std::int32_t>(n_c + i);
    }
    for (NodeId i = 0; i < n_i; ++i) {
      for (NodeId c : g.contributors_of(i)) targets[fill++] = c;
    }
  }

  std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n), -1);
  std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
  std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
  std::vector<std::int32_t> order;
  order.reserve(static_cast<std::size_t>(n));

  for (std::int64_t s = 0; s < n; ++s) {
    order.clear();
    dist[static_cast<std::size_t>(s)] = 0;
    sigma[static_cast<std::size_t>(s)] = 1.0;
    std::size_t head = 0;
    order.push_back(static_cast<std::int32_t>(s));
    while (head < order.size()) {
      const std::int32_t v = order[head++];
      const std::int32_t next_dist = dist[static_cast<std::size_t>(v)] + 1;
      const double sigma_v = sigma[static_cast<std::size_t>(v)];
      for (std::int64_t e = offsets[static_cast<std::size_t>(v)];
           e < offsets[static_cast<std::size_t>(v) + 1]; ++e) {
        const std::int32_t w = targets[static_cast<std::size_t>(e)];
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = next_dist;
          order.push_back(w);
        }
        if (dist[static_cast<std::size_t>(w)] == next_dist) {
          sigma[static_cast<std::size_t>(w)] += sigma_v;
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::int32_t w = *it;
      const double coefficient =
          (1.0 + delta[static_cast<std::size_t>(w)]) / sigma[static_cast<std::size_t>(w)];
      const std::int32_t prev_dist = dist[static_cast<std::size_t>(w)] - 1;
      for (std::int64_t e = offsets[static_cast<std::size_t>(w)];
           e < offsets[static_cast<std::size_t>(w) + 1]; ++e) {
        const std::int32_t v = targets[static_cast<std::size_t>(e)];
        if (dist[static_cast<std::size_t>(v)] == prev_dist) {
          delta[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(v)] * coefficient;
        }
      }
      if (w != s) bc[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
    }
    for (std::int32_t v : order) {
      dist[static_cast<std::size_t>(v)] = -1;
      sigma[static_cast<std::size_t>(v)] = 0.0;
      delta[static_cast<std::size_t>(v)] = 0.0;
    }
  }

  // Undirected: each pair was counted from both endpoints.
  std::vector<double> scores(static_cast<std::size_t>(n_c));
  for (std::int64_t c = 0; c < n_c; ++c) {
    scores[static_cast<std::size_t>(c)] = bc[static_cast<std::size_t>(c)] / 2.0;
  }
  return ranking_from_scores("betweenness", scores);
}

Ranking dspeel_rank(const BipartiteGraph& g) {
  const auto n_c = static_cast<std::int64_t>(g.num_contributors());
  const auto n_i = static_cast<std::int64_t>(g.num_items());
  const std::int64_t n = n_c + n_i;

  std::vector<std::int64_t> keys(static_cast<std::size_t>(n));
  for (NodeId c = 0; c < n_c; ++c) keys[static_cast<std::size_t>(c)] = g.contributor_degree(c);
  for (NodeId i = 0; i < n_i; ++i) keys[static_cast<std::size_t>(n_c + i)] = g.item_degree(i);
  MinBucketQueue queue(keys);

  std::vector<NodeId> removed_contributors;
  removed_contributors.reserve(static_cast<std::size_t>(n_c));
  while (!queue.empty()) {
    const std::int32_t v = queue.pop_min();
    if (v < n_c) {
      removed_contributors.push_back(static_cast<NodeId>(v));
      for (NodeId i : g.items_of(static_cast<NodeId>(v))) {
        const auto u = static_cast<std::int32_t>(n_c + i);
        if (queue.live(u)) queue.decrement(u);
      }
    } else {
      for (NodeId c : g.contributors_of(static_cast<NodeId>(v - n_c))) {
        if (queue.live(c)) queue.decrement(c);
      }
    }
  }

  Ranking r;
  r.method = "dspeel";
  r.order.assign(removed_contributors.rbegin(), removed_contributors.rend());
  return r;
}

namespace {

// Max-heap entry ordering: larger key first, smaller id on ties.
struct GainEntry {
  std::int64_t key;
  NodeId id;
  bool operator<(const GainEntry& other) const {
    if (key != other.key) return key < other.key;
    return id > other.id;
  }
};

}  // namespace

Ranking forward_greedy_rank(const BipartiteGraph& g) {
  const auto n_c = g.num_contributors();
  const auto n_i = g.num_items();

  std::vector<std::int64_t> missing(static_cast<std::size_t>(n_i));
  for (NodeId i = 0; i < n_i; ++i) missing[static_cast<std::size_t>(i)] = g.item_degree(i);
  std::vector<bool> selected(static_cast<std::size_t>(n_c), false);

  // gain[c] = number of items whose only missing contributor is c. Gains only
  // grow until a contributor is selected, so stale heap entries (smaller key)
  // are discarded on pop.
  std::vector<std::int64_t> gain(static_cast<std::size_t>(n_c), 0);
  for (NodeId i = 0; i < n_i; ++i) {
    if (g.item_degree(i) == 1) ++gain[static_cast<std::size_t>(g.contributors_of(i)[0])];
  }
  std::priority_queue<GainEntry> gain_heap;
  for (NodeId c = 0; c < n_c; ++c) gain_heap.push({gain[static_cast<std::size_t>(c)], c});

  // Plateau fallback: an unselected contributor's residual degree over
  // uncovered items always equals its full degree (any item incident to an
  // unselected contributor is uncovered), so the fallback is a fixed
  // degree-descending, id-ascending order.
  std::vector<NodeId> fallback(static_cast<std::size_t>(n_c));
  std::iota(fallback.begin(), fallback.end(), 0);
  std::sort(fallback.begin(), fallback.end(), [&](NodeId a, NodeId b) {
    if (g.contributor_degree(a) != g.contributor_degree(b)) {
      return g.contributor_degree(a) > g.contributor_degree(b);
    }
    return a < b;
  });
  std::size_t fallback_head = 0;

  Ranking r;
  r.method = "greedy";
  r.order.reserve(static_cast<std::size_t>(n_c));

  for (NodeId step = 0; step < n_c; ++step) {
    NodeId chosen = -1;
    while (!gain_heap.empty()) {
      const GainEntry top = gain_heap.top();
      if (selected[static_cast<std::size_t>(top.id)] ||
          top.key != gain[static_cast<std::size_t>(top.id)]) {
        gain_heap.pop();
        continue;
      }
      if (top.key > 0) {
        chosen = top.id;
        gain_heap.pop();
      }
      break;
    }
    if (chosen < 0) {
      while (selected[static_cast<std::size_t>(fallback[fallback_head])]) ++fallback_head;
      chosen = fallback[fallback_head++];
    }

    selected[static_cast<std::size_t>(chosen)] = true;
    r.order.push_back(chosen);
    for (NodeId i : g.items_of(chosen)) {
      auto& m = missing[static_cast<std::size_t>(i)];
      if (m == 0) continue;
      if (--m == 1) {
        for (NodeId other : g.contributors_of(i)) {
          if (!selected[static_cast<std::size_t>(other)]) {
            ++gain[static_cast<std::size_t>(other)];
            gain_heap.push({gain[static_cast<std::size_t>(other)], other});
            break;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace covrank
