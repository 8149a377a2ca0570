#include "covrank/edge_list.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "covrank/errors.hpp"

namespace covrank {

BipartiteGraph load_edge_list(std::istream& in, const ParseOptions& options, LoadReport* report) {
  std::unordered_map<std::string, NodeId> contributor_ids;
  std::unordered_map<std::string, NodeId> item_ids;
  std::vector<std::string> contributor_labels;
  std::vector<std::string> item_labels;
  std::vector<EdgePair> edges;
  LoadReport local;

  auto intern = [](std::unordered_map<std::string, NodeId>& ids, std::vector<std::string>& labels,
                   std::string label) {
    auto [it, inserted] = ids.emplace(std::move(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(it->first);
    return it->second;
  };

  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++local.lines_read;
    std::size_t a0 = line.find_first_not_of(" \t\r");
    if (a0 == std::string::npos) {
      ++local.blanks_skipped;
      continue;
    }
    if (line[a0] == '%' || line[a0] == '#') {
      ++local.comments_skipped;
      continue;
    }
    std::size_t a1 = line.find_first_of(" \t\r", a0);
    if (a1 == std::string::npos) throw ParseError("expected two fields", line_no);
    std::size_t b0 = line.find_first_not_of(" \t\r", a1);
    if (b0 == std::string::npos) throw ParseError("expected two fields", line_no);
    std::size_t b1 = line.find_first_of(" \t\r", b0);
    if (b1 == std::string::npos) b1 = line.size();
    // Fields beyond the second (timestamps, weights) are ignored.
    std::string first = line.substr(a0, a1 - a0);
    std::string second = line.substr(b0, b1 - b0);
    if (options.swap_columns) std::swap(first, second);
    const NodeId c = intern(contributor_ids, contributor_labels, std::move(first));
    const NodeId i = intern(item_ids, item_labels, std::move(second));
    edges.emplace_back(c, i);
  }

  auto g = BipartiteGraph::from_edges(std::move(edges), std::move(contributor_labels),
                                      std::move(item_labels), &local.duplicates_dropped);
  if (report != nullptr) *report = local;
  return g;
}

void write_canonical_edge_list(const BipartiteGraph& g, std::ostream& out) {
  for (NodeId c = 0; c < g.num_contributors(); ++c) {
    const std::string& label = g.contributor_label(c);
    for (NodeId i : g.items_of(c)) {
      out << label << '\t' << g.item_label(i) << '\n';
    }
  }
}

}  // namespace covrank
