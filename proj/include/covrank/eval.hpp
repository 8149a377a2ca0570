#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "covrank/bigraph.hpp"
#include "covrank/ranking.hpp"

namespace covrank {

// Number of items whose neighborhoods are entirely contained in `selected`.
// O(|E| + |I|) from scratch. Throws DataError on an out-of-range id.
std::int64_t cov(const BipartiteGraph& g, std::span<const NodeId> selected);

// Cumulative covered-item counts for each ranking prefix plus the normalized
// area under the curve. covered[i] (0-based) is cov of the first i+1
// contributors; the final entry always equals |I|.
struct CoverageCurve {
  std::vector<std::int64_t> covered;
  std::int64_t total_items = 0;
  double auc = 0.0;
};

// Single O(|E| + |C|) sweep over the ranking. Throws DataError if the
// ranking is not a permutation of the contributors.
CoverageCurve coverage_curve(const BipartiteGraph& g, const Ranking& r);

// The discrete mean-of-prefixes formula: (1/|C|) * sum_i covered[i] / |I|.
double auc_of(const CoverageCurve& curve);

// CSV `k,covered,fraction` with a leading (0,0) row for plotting.
void write_curve_csv(const CoverageCurve& curve, std::ostream& out);

}  // namespace covrank
