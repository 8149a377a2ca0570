#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace covrank {

using NodeId = std::int32_t;
using EdgePair = std::pair<NodeId, NodeId>;  // (contributor, item) or (u, v)

// Immutable bipartite graph of contributors and items with dense ids on each
// side and adjacency stored in both directions (CSR, sorted ascending).
// Invariants enforced at construction:
//   - no duplicate edges, both directions describe the same edge set,
//   - every item has degree >= 1 (contributors may have degree 0),
//   - labels are bijective with dense ids on each side.
class BipartiteGraph {
 public:
  // Builds from (contributor id, item id) pairs. Duplicate pairs are
  // collapsed; the number dropped is reported through `duplicates_dropped`.
  // Label vectors define the id spaces and must cover every id that occurs.
  // Throws DataError on an empty edge set or a degree-0 item.
  static BipartiteGraph from_edges(std::vector<EdgePair> edges,
                                   std::vector<std::string> contributor_labels,
                                   std::vector<std::string> item_labels,
                                   std::int64_t* duplicates_dropped = nullptr);

  NodeId num_contributors() const { return static_cast<NodeId>(contributor_labels_.size()); }
  NodeId num_items() const { return static_cast<NodeId>(item_labels_.size()); }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(contributor_targets_.size()); }

  std::span<const NodeId> items_of(NodeId c) const {
    return {contributor_targets_.data() + contributor_offsets_[c],
            contributor_targets_.data() + contributor_offsets_[c + 1]};
  }
  std::span<const NodeId> contributors_of(NodeId i) const {
    return {item_targets_.data() + item_offsets_[i],
            item_targets_.data() + item_offsets_[i + 1]};
  }

  std::int64_t contributor_degree(NodeId c) const {
    return contributor_offsets_[c + 1] - contributor_offsets_[c];
  }
  std::int64_t item_degree(NodeId i) const { return item_offsets_[i + 1] - item_offsets_[i]; }
  std::int64_t max_contributor_degree() const;
  std::int64_t max_item_degree() const;

  const std::string& contributor_label(NodeId c) const { return contributor_labels_[c]; }
  const std::string& item_label(NodeId i) const { return item_labels_[i]; }
  const std::vector<std::string>& contributor_labels() const { return contributor_labels_; }
  const std::vector<std::string>& item_labels() const { return item_labels_; }

  // Label -> dense id map, built on demand (not stored in the graph).
  std::unordered_map<std::string, NodeId> contributor_index() const;

 private:
  BipartiteGraph() = default;

  std::vector<std::int64_t> contributor_offsets_;
  std::vector<NodeId> contributor_targets_;  // item ids, sorted per contributor
  std::vector<std::int64_t> item_offsets_;
  std::vector<NodeId> item_targets_;  // contributor ids, sorted per item
  std::vector<std::string> contributor_labels_;
  std::vector<std::string> item_labels_;
};

// Structural statistics of a bipartite graph (dimensionless except the means).
struct GraphStats {
  double mean_contributor_degree = 0.0;  // |E| / |C|
  double mean_item_degree = 0.0;         // |E| / |I|
  double phi_c = 0.0;                    // fraction of contributors with degree exactly 1
  double phi_i = 0.0;                    // fraction of items with degree exactly 1
  double gamma_c = 0.0;                  // fraction of contributors that are the sole
                                         // neighbor of at least one item
};

GraphStats degree_stats(const BipartiteGraph& g);

// A simple undirected graph held as a canonical edge list: edges stored with
// u < v, sorted, deduplicated. Used as the source of incidence transforms.
struct SimpleGraph {
  NodeId num_vertices = 0;
  std::vector<EdgePair> edges;
  std::vector<std::string> labels;

  // Normalizes raw pairs: orients u < v, sorts, deduplicates.
  // Throws DataError on a self-loop or an out-of-range endpoint.
  static SimpleGraph from_pairs(NodeId num_vertices, std::vector<EdgePair> raw,
                                std::vector<std::string> labels = {});

  // Parses `<u> <v>` lines (same comment/separator rules as the bipartite
  // edge-list loader). Vertex ids are assigned in first-appearance order.
  static SimpleGraph from_edge_list(std::istream& in);

  std::vector<std::int64_t> degrees() const;
};

// Maps a simple graph to a bipartite graph: vertices become contributors,
// edges become items of degree exactly 2. Throws DataError on a self-loop.
BipartiteGraph incidence_transform(const SimpleGraph& g);

}  // namespace covrank
