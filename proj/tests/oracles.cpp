#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "covrank/edge_list.hpp"
#include "covrank/rng.hpp"

namespace covrank::testing {

BipartiteGraph make_graph(NodeId n_contributors, NodeId n_items, std::vector<EdgePair> edges) {
  std::vector<std::string> c_labels, i_labels;
  for (NodeId c = 0; c < n_contributors; ++c) c_labels.push_back("c" + std::to_string(c));
  for (NodeId i = 0; i < n_items; ++i) i_labels.push_back("i" + std::to_string(i));
  return BipartiteGraph::from_edges(std::move(edges), std::move(c_labels), std::move(i_labels));
}

BipartiteGraph load_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::int64_t induced_edge_count(const SimpleGraph& g, const std::vector<NodeId>& subset) {
  std::vector<bool> in(static_cast<std::size_t>(g.num_vertices), false);
  for (NodeId v : subset) in[static_cast<std::size_t>(v)] = true;
  std::int64_t count = 0;
  for (const auto& [u, v] : g.edges) {
    if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) ++count;
  }
  return count;
}

namespace {

void best_k_recurse(const SimpleGraph& g, std::vector<NodeId>& chosen, NodeId start,
                    std::int64_t remaining, std::int64_t& best) {
  if (remaining == 0) {
    best = std::max(best, induced_edge_count(g, chosen));
    return;
  }
  for (NodeId v = start; v <= g.num_vertices - remaining; ++v) {
    chosen.push_back(v);
    best_k_recurse(g, chosen, v + 1, remaining - 1, best);
    chosen.pop_back();
  }
}

}  // namespace

std::int64_t best_k_induced_edges(const SimpleGraph& g, std::int64_t k) {
  std::int64_t best = 0;
  std::vector<NodeId> chosen;
  best_k_recurse(g, chosen, 0, std::min<std::int64_t>(k, g.num_vertices), best);
  return best;
}

std::vector<NodeId> min_degree_peel_order(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices);
  // Neighbor lists in incident-edge input order (not sorted by neighbor id):
  // this matches the order in which covered items trigger decrements on the
  // incidence transform.
  std::vector<std::vector<NodeId>> adjacency(n);
  for (const auto& [u, v] : g.edges) {
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<std::int64_t> degree(n);
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<std::int64_t>(adjacency[v].size());
    max_degree = std::max(max_degree, adjacency[v].size());
  }

  // Lazy FIFO buckets: an entry is valid iff its pushed key still matches the
  // vertex's current degree. A decrement pushes a fresh entry at the tail of
  // the lower bucket, which reproduces tail re-queueing exactly.
  std::vector<std::deque<std::pair<NodeId, std::int64_t>>> buckets(max_degree + 1);
  for (NodeId v = 0; v < g.num_vertices; ++v) {
    buckets[static_cast<std::size_t>(degree[static_cast<std::size_t>(v)])].emplace_back(
        v, degree[static_cast<std::size_t>(v)]);
  }

  std::vector<bool> removed(n, false);
  std::vector<NodeId> order;
  order.reserve(n);
  while (order.size() < n) {
    NodeId chosen = -1;
    for (auto& bucket : buckets) {
      while (!bucket.empty()) {
        const auto [v, key] = bucket.front();
        if (removed[static_cast<std::size_t>(v)] || key != degree[static_cast<std::size_t>(v)]) {
          bucket.pop_front();
          continue;
        }
        chosen = v;
        bucket.pop_front();
        break;
      }
      if (chosen >= 0) break;
    }
    if (chosen < 0) throw std::logic_error("peeling ran out of vertices");
    removed[static_cast<std::size_t>(chosen)] = true;
    order.push_back(chosen);
    for (NodeId u : adjacency[static_cast<std::size_t>(chosen)]) {
      if (removed[static_cast<std::size_t>(u)]) continue;
      auto& d = degree[static_cast<std::size_t>(u)];
      --d;
      buckets[static_cast<std::size_t>(d)].emplace_back(u, d);
    }
  }
  return order;
}

std::vector<double> dense_pagerank(const BipartiteGraph& g, double damping, double tol,
                                   std::int64_t max_iters) {
  const auto n_c = static_cast<std::size_t>(g.num_contributors());
  const auto n_i = static_cast<std::size_t>(g.num_items());
  const std::size_t n = n_c + n_i;

  // Column-stochastic transition matrix with dangling columns spread
  // uniformly, blended with the teleport matrix.
  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  for (NodeId c = 0; c < g.num_contributors(); ++c) {
    const auto deg = static_cast<double>(g.contributor_degree(c));
    if (deg == 0.0) {
      for (std::size_t row = 0; row < n; ++row) {
        matrix[row][static_cast<std::size_t>(c)] = 1.0 / static_cast<double>(n);
      }
      continue;
    }
    for (NodeId i : g.items_of(c)) {
      matrix[n_c + static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 1.0 / deg;
    }
  }
  for (NodeId i = 0; i < g.num_items(); ++i) {
    const auto deg = static_cast<double>(g.item_degree(i));
    for (NodeId c : g.contributors_of(i)) {
      matrix[static_cast<std::size_t>(c)][n_c + static_cast<std::size_t>(i)] = 1.0 / deg;
    }
  }

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::int64_t iter = 0; iter < max_iters; ++iter) {
    double l1 = 0.0;
    for (std::size_t row = 0; row < n; ++row) {
      double sum = 0.0;
      for (std::size_t col = 0; col < n; ++col) sum += matrix[row][col] * x[col];
      next[row] = (1.0 - damping) / static_cast<double>(n) + damping * sum;
      l1 += std::abs(next[row] - x[row]);
    }
    x.swap(next);
    if (l1 < tol) break;
  }
  return x;
}

std::vector<double> brute_force_betweenness(const BipartiteGraph& g) {
  const auto n_c = static_cast<std::int64_t>(g.num_contributors());
  const auto n_i = static_cast<std::int64_t>(g.num_items());
  const std::int64_t n = n_c + n_i;

  auto neighbors = [&](std::int64_t v) {
    std::vector<std::int64_t> out;
    if (v < n_c) {
      for (NodeId i : g.items_of(static_cast<NodeId>(v))) out.push_back(n_c + i);
    } else {
      for (NodeId c : g.contributors_of(static_cast<NodeId>(v - n_c))) out.push_back(c);
    }
    return out;
  };

  // All-pairs distances and path counts by BFS from every node.
  std::vector<std::vector<std::int64_t>> dist(static_cast<std::size_t>(n));
  std::vector<std::vector<double>> paths(static_cast<std::size_t>(n));
  for (std::int64_t s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    auto& sigma = paths[static_cast<std::size_t>(s)];
    d.assign(static_cast<std::size_t>(n), -1);
    sigma.assign(static_cast<std::size_t>(n), 0.0);
    d[static_cast<std::size_t>(s)] = 0;
    sigma[static_cast<std::size_t>(s)] = 1.0;
    std::vector<std::int64_t> frontier{s};
    while (!frontier.empty()) {
      std::vector<std::int64_t> next_frontier;
      for (std::int64_t v : frontier) {
        for (std::int64_t w : neighbors(v)) {
          if (d[static_cast<std::size_t>(w)] < 0) {
            d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
            next_frontier.push_back(w);
          }
          if (d[static_cast<std::size_t>(w)] == d[static_cast<std::size_t>(v)] + 1) {
            sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
          }
        }
      }
      frontier = std::move(next_frontier);
    }
  }

  std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t s = 0; s < n; ++s) {
    for (std::int64_t t = 0; t < n; ++t) {
      if (s == t || dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] < 0) continue;
      const auto d_st = dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      const double sigma_st = paths[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      for (std::int64_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const auto d_sv = dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)];
        const auto d_vt = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
        if (d_sv < 0 || d_vt < 0 || d_sv + d_vt != d_st) continue;
        bc[static_cast<std::size_t>(v)] += paths[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] *
                                           paths[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] /
                                           sigma_st;
      }
    }
  }
  for (double& value : bc) value /= 2.0;
  return bc;
}

SimpleGraph random_simple_graph(NodeId n, std::int64_t m, std::uint64_t seed) {
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m > max_edges) throw std::invalid_argument("too many edges requested");
  Rng rng(seed);
  std::set<EdgePair> chosen;
  while (static_cast<std::int64_t>(chosen.size()) < m) {
    auto u = static_cast<NodeId>(rng.uniform(static_cast<std::uint64_t>(n)));
    auto v = static_cast<NodeId>(rng.uniform(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.emplace(u, v);
  }
  return SimpleGraph::from_pairs(n, {chosen.begin(), chosen.end()});
}

}  // namespace covrank::testing
