#include "covrank/eval.hpp"

#include <ostream>
#include <vector>

#include "covrank/errors.hpp"

namespace covrank {

std::int64_t cov(const BipartiteGraph& g, std::span<const NodeId> selected) {
  const auto n_i = g.num_items();
  std::vector<std::int64_t> missing(static_cast<std::size_t>(n_i));
  for (NodeId i = 0; i < n_i; ++i) missing[static_cast<std::size_t>(i)] = g.item_degree(i);

  std::vector<bool> in_set(static_cast<std::size_t>(g.num_contributors()), false);
  std::int64_t covered = 0;
  for (NodeId c : selected) {
    if (c < 0 || c >= g.num_contributors()) {
      throw DataError("unknown contributor id: " + std::to_string(c));
    }
    if (in_set[static_cast<std::size_t>(c)]) continue;
    in_set[static_cast<std::size_t>(c)] = true;
    for (NodeId i : g.items_of(c)) {
      if (--missing[static_cast<std::size_t>(i)] == 0) ++covered;
    }
  }
  return covered;
}

CoverageCurve coverage_curve(const BipartiteGraph& g, const Ranking& r) {
  const auto n_c = g.num_contributors();
  const auto n_i = g.num_items();
  if (static_cast<NodeId>(r.order.size()) != n_c) {
    throw DataError("ranking is not a permutation: has " + std::to_string(r.order.size()) +
                    " entries, graph has " + std::to_string(n_c) + " contributors");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_c), false);
  for (NodeId c : r.order) {
    if (c < 0 || c >= n_c || seen[static_cast<std::size_t>(c)]) {
      throw DataError("ranking is not a permutation of the contributors");
    }
    seen[static_cast<std::size_t>(c)] = true;
  }

  CoverageCurve curve;
  curve.total_items = n_i;
  curve.covered.reserve(static_cast<std::size_t>(n_c));

  std::vector<std::int64_t> missing(static_cast<std::size_t>(n_i));
  for (NodeId i = 0; i < n_i; ++i) missing[static_cast<std::size_t>(i)] = g.item_degree(i);
  std::int64_t covered = 0;
  for (NodeId c : r.order) {
    for (NodeId i : g.items_of(c)) {
      if (--missing[static_cast<std::size_t>(i)] == 0) ++covered;
    }
    curve.covered.push_back(covered);
  }
  curve.auc = auc_of(curve);
  return curve;
}

double auc_of(const CoverageCurve& curve) {
  if (curve.covered.empty() || curve.total_items == 0) return 0.0;
  std::int64_t sum = 0;
  for (std::int64_t v : curve.covered) sum += v;
  return static_cast<double>(sum) /
         (static_cast<double>(curve.covered.size()) * static_cast<double>(curve.total_items));
}

void write_curve_csv(const CoverageCurve& curve, std::ostream& out) {
  out << "k,covered,fraction\n0,0,0\n";
  for (std::size_t j = 0; j < curve.covered.size(); ++j) {
    out << (j + 1) << ',' << curve.covered[j] << ','
        << static_cast<double>(curve.covered[j]) / static_cast<double>(curve.total_items) << '\n';
  }
}

}  // namespace covrank
