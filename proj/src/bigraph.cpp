#include "covrank/bigraph.hpp"

#include <algorithm>
#include <istream>
#include <string>

#include "covrank/errors.hpp"

namespace covrank {

BipartiteGraph BipartiteGraph::from_edges(std::vector<EdgePair> edges,
                                          std::vector<std::string> contributor_labels,
                                          std::vector<std::string> item_labels,
                                          std::int64_t* duplicates_dropped) {
  if (edges.empty()) throw DataError("empty graph");

  const auto n_c = static_cast<NodeId>(contributor_labels.size());
  const auto n_i = static_cast<NodeId>(item_labels.size());
  for (const auto& [c, i] : edges) {
    if (c < 0 || c >= n_c) throw DataError("contributor id out of range: " + std::to_string(c));
    if (i < 0 || i >= n_i) throw DataError("item id out of range: " + std::to_string(i));
  }

  std::sort(edges.begin(), edges.end());
  const auto before = static_cast<std::int64_t>(edges.size());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (duplicates_dropped != nullptr) {
    *duplicates_dropped = before - static_cast<std::int64_t>(edges.size());
  }
  const auto m = static_cast<std::int64_t>(edges.size());

  BipartiteGraph g;
  g.contributor_labels_ = std::move(contributor_labels);
  g.item_labels_ = std::move(item_labels);

  g.contributor_offsets_.assign(static_cast<std::size_t>(n_c) + 1, 0);
  g.item_offsets_.assign(static_cast<std::size_t>(n_i) + 1, 0);
  for (const auto& [c, i] : edges) {
    ++g.contributor_offsets_[static_cast<std::size_t>(c) + 1];
    ++g.item_offsets_[static_cast<std::size_t>(i) + 1];
  }
  for (NodeId i = 0; i < n_i; ++i) {
    if (g.item_offsets_[static_cast<std::size_t>(i) + 1] == 0) {
      throw DataError("item has degree 0: " + g.item_labels_[i]);
    }
  }
  for (std::size_t c = 0; c < static_cast<std::size_t>(n_c); ++c) {
    g.contributor_offsets_[c + 1] += g.contributor_offsets_[c];
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_i); ++i) {
    g.item_offsets_[i + 1] += g.item_offsets_[i];
  }

  // Edges are sorted by (c, i), so both directions come out sorted: the
  // contributor side directly, the item side because fill order follows c.
  g.contributor_targets_.resize(static_cast<std::size_t>(m));
  g.item_targets_.resize(static_cast<std::size_t>(m));
  std::vector<std::int64_t> item_fill(g.item_offsets_.begin(), g.item_offsets_.end() - 1);
  std::int64_t pos = 0;
  for (const auto& [c, i] : edges) {
    g.contributor_targets_[static_cast<std::size_t>(pos++)] = i;
    g.item_targets_[static_cast<std::size_t>(item_fill[static_cast<std::size_t>(i)]++)] = c;
  }
  return g;
}

std::int64_t BipartiteGraph::max_contributor_degree() const {
  std::int64_t best = 0;
  for (NodeId c = 0; c < num_contributors(); ++c) best = std::max(best, contributor_degree(c));
  return best;
}

std::int64_t BipartiteGraph::max_item_degree() const {
  std::int64_t best = 0;
  for (NodeId i = 0; i < num_items(); ++i) best = std::max(best, item_degree(i));
  return best;
}

std::unordered_map<std::string, NodeId> BipartiteGraph::contributor_index() const {
  std::unordered_map<std::string, NodeId> index;
  index.reserve(contributor_labels_.size());
  for (NodeId c = 0; c < num_contributors(); ++c) index.emplace(contributor_labels_[c], c);
  return index;
}

GraphStats degree_stats(const BipartiteGraph& g) {
  GraphStats s;
  const auto n_c = g.num_contributors();
  const auto n_i = g.num_items();
  s.mean_contributor_degree = static_cast<double>(g.num_edges()) / static_cast<double>(n_c);
  s.mean_item_degree = static_cast<double>(g.num_edges()) / static_cast<double>(n_i);

  std::int64_t deg1_contributors = 0;
  for (NodeId c = 0; c < n_c; ++c) {
    if (g.contributor_degree(c) == 1) ++deg1_contributors;
  }
  std::int64_t deg1_items = 0;
  std::vector<bool> sole(static_cast<std::size_t>(n_c), false);
  for (NodeId i = 0; i < n_i; ++i) {
    if (g.item_degree(i) == 1) {
      ++deg1_items;
      sole[static_cast<std::size_t>(g.contributors_of(i)[0])] = true;
    }
  }
  const auto unique_contributors =
      static_cast<std::int64_t>(std::count(sole.begin(), sole.end(), true));

  s.phi_c = static_cast<double>(deg1_contributors) / static_cast<double>(n_c);
  s.phi_i = static_cast<double>(deg1_items) / static_cast<double>(n_i);
  s.gamma_c = static_cast<double>(unique_contributors) / static_cast<double>(n_c);
  return s;
}

SimpleGraph SimpleGraph::from_pairs(NodeId num_vertices, std::vector<EdgePair> raw,
                                    std::vector<std::string> labels) {
  for (auto& [u, v] : raw) {
    if (u == v) throw DataError("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw DataError("vertex id out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  SimpleGraph g;
  g.num_vertices = num_vertices;
  g.edges = std::move(raw);
  if (labels.empty()) {
    g.labels.reserve(static_cast<std::size_t>(num_vertices));
    for (NodeId v = 0; v < num_vertices; ++v) g.labels.push_back("v" + std::to_string(v));
  } else {
    if (static_cast<NodeId>(labels.size()) != num_vertices) {
      throw DataError("label count does not match vertex count");
    }
    g.labels = std::move(labels);
  }
  return g;
}

SimpleGraph SimpleGraph::from_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<EdgePair> pairs;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t a0 = line.find_first_not_of(" \t\r");
    if (a0 == std::string::npos) continue;
    if (line[a0] == '%' || line[a0] == '#') continue;
    std::size_t a1 = line.find_first_of(" \t\r", a0);
    if (a1 == std::string::npos) throw ParseError("expected two fields", line_no);
    std::size_t b0 = line.find_first_not_of(" \t\r", a1);
    if (b0 == std::string::npos) throw ParseError("expected two fields", line_no);
    std::size_t b1 = line.find_first_of(" \t\r", b0);
    if (b1 == std::string::npos) b1 = line.size();
    const NodeId u = intern(line.substr(a0, a1 - a0));
    const NodeId v = intern(line.substr(b0, b1 - b0));
    if (u == v) throw DataError("self-loop on vertex " + labels[static_cast<std::size_t>(u)]);
    pairs.emplace_back(u, v);
  }
  const auto num_vertices = static_cast<NodeId>(labels.size());
  return from_pairs(num_vertices, std::move(pairs), std::move(labels));
}

std::vector<std::int64_t> SimpleGraph::degrees() const {
  std::vector<std::int64_t> deg(static_cast<std::size_t>(num_vertices), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

BipartiteGraph incidence_transform(const SimpleGraph& g) {
  std::vector<EdgePair> pairs;
  pairs.reserve(g.edges.size() * 2);
  std::vector<std::string> item_labels;
  item_labels.reserve(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v) throw DataError("self-loop on vertex " + std::to_string(u));
    const auto item = static_cast<NodeId>(e);
    pairs.emplace_back(u, item);
    pairs.emplace_back(v, item);
    item_labels.push_back(g.labels[static_cast<std::size_t>(u)] + "~" +
                          g.labels[static_cast<std::size_t>(v)]);
  }
  return BipartiteGraph::from_edges(std::move(pairs), g.labels, std::move(item_labels));
}

}  // namespace covrank
