#include "covrank/ranking.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "covrank/errors.hpp"

namespace covrank {

Ranking ranking_from_scores(std::string method, const std::vector<double>& score_per_contributor) {
  Ranking r;
  r.method = std::move(method);
  r.order.resize(score_per_contributor.size());
  std::iota(r.order.begin(), r.order.end(), 0);
  std::sort(r.order.begin(), r.order.end(), [&](NodeId a, NodeId b) {
    if (score_per_contributor[static_cast<std::size_t>(a)] !=
        score_per_contributor[static_cast<std::size_t>(b)]) {
      return score_per_contributor[static_cast<std::size_t>(a)] >
             score_per_contributor[static_cast<std::size_t>(b)];
    }
    return a < b;
  });
  r.scores.reserve(r.order.size());
  for (NodeId c : r.order) r.scores.push_back(score_per_contributor[static_cast<std::size_t>(c)]);
  return r;
}

void write_ranking_text(const Ranking& r, const BipartiteGraph& g, std::ostream& out) {
  for (NodeId c : r.order) out << g.contributor_label(c) << '\n';
}

void write_ranking_csv(const Ranking& r, const BipartiteGraph& g, std::ostream& out) {
  out << "rank,contributor,score\n";
  for (std::size_t j = 0; j < r.order.size(); ++j) {
    out << (j + 1) << ',' << g.contributor_label(r.order[j]) << ',';
    if (r.has_scores()) out << r.scores[j];
    out << '\n';
  }
}

std::vector<std::string> read_ranking_labels(std::istream& in) {
  std::vector<std::string> labels;
  std::string line;
  bool first = true;
  bool csv = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("rank,", 0) == 0) {
        csv = true;
        continue;
      }
    }
    if (csv) {
      const std::size_t comma1 = line.find(',');
      const std::size_t comma2 = line.find(',', comma1 + 1);
      if (comma1 == std::string::npos || comma2 == std::string::npos) {
        throw DataError("malformed ranking CSV row: " + line);
      }
      labels.push_back(line.substr(comma1 + 1, comma2 - comma1 - 1));
    } else {
      labels.push_back(line);
    }
  }
  return labels;
}

Ranking ranking_from_labels(const BipartiteGraph& g, const std::vector<std::string>& labels,
                            std::string method) {
  if (static_cast<NodeId>(labels.size()) != g.num_contributors()) {
    throw DataError("ranking has " + std::to_string(labels.size()) + " entries, graph has " +
                    std::to_string(g.num_contributors()) + " contributors");
  }
  const auto index = g.contributor_index();
  Ranking r;
  r.method = std::move(method);
  r.order.reserve(labels.size());
  std::vector<bool> seen(labels.size(), false);
  for (const auto& label : labels) {
    auto it = index.find(label);
    if (it == index.end()) throw DataError("unknown contributor in ranking: " + label);
    if (seen[static_cast<std::size_t>(it->second)]) {
      throw DataError("duplicate contributor in ranking: " + label);
    }
    seen[static_cast<std::size_t>(it->second)] = true;
    r.order.push_back(it->second);
  }
  return r;
}

}  // namespace covrank
