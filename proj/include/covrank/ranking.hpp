#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "covrank/bigraph.hpp"

namespace covrank {

// A full ordering of the contributors, position 0 = most critical. This is
// the universal output of every ranking method. For score-based methods,
// scores[j] belongs to the contributor at order[j] and is non-increasing
// along the order (ties broken by ascending id).
struct Ranking {
  std::string method;
  std::vector<NodeId> order;
  std::vector<double> scores;

  bool has_scores() const { return !scores.empty(); }
};

// Sorts contributors by score descending, id ascending on ties.
Ranking ranking_from_scores(std::string method, const std::vector<double>& score_per_contributor);

// One contributor label per line, most critical first.
void write_ranking_text(const Ranking& r, const BipartiteGraph& g, std::ostream& out);

// CSV `rank,contributor,score` with a header; rank starts at 1, the score
// field is empty for methods without scores.
void write_ranking_csv(const Ranking& r, const BipartiteGraph& g, std::ostream& out);

// Reads either serialization back as an ordered list of labels.
std::vector<std::string> read_ranking_labels(std::istream& in);

// Resolves labels against the graph. Throws DataError naming the first
// offending label if the list is not a permutation of the contributors.
Ranking ranking_from_labels(const BipartiteGraph& g, const std::vector<std::string>& labels,
                            std::string method);

}  // namespace covrank
