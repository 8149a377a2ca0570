#include "covrank/search.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "covrank/errors.hpp"
#include "covrank/eval.hpp"
#include "covrank/rng.hpp"

namespace covrank {

namespace {

// Hill-climbing state over one ordering. The objective is the sum over items
// of the 1-based position at which the item becomes covered; minimizing it is
// algebraically identical to maximizing AUC:
//   sum_i cov(prefix_i) = |I| * (|C| + 1) - sum_items coverpos(item).
class OrderingState {
 public:
  explicit OrderingState(const BipartiteGraph& g) : g_(g) {}

  void reset(std::vector<NodeId> order) {
    order_ = std::move(order);
    const auto n_c = g_.num_contributors();
    pos_.assign(static_cast<std::size_t>(n_c), 0);
    for (std::size_t j = 0; j < order_.size(); ++j) {
      pos_[static_cast<std::size_t>(order_[j])] = static_cast<std::int64_t>(j) + 1;
    }
    cover_pos_.assign(static_cast<std::size_t>(g_.num_items()), 0);
    total_ = 0;
    for (NodeId i = 0; i < g_.num_items(); ++i) {
      std::int64_t best = 0;
      for (NodeId c : g_.contributors_of(i)) {
        best = std::max(best, pos_[static_cast<std::size_t>(c)]);
      }
      cover_pos_[static_cast<std::size_t>(i)] = best;
      total_ += best;
    }
  }

  // Swaps positions p and q and returns the objective change. Items adjacent
  // to both swapped contributors keep their cover position (the position set
  // of their neighborhood is unchanged).
  std::int64_t apply_swap(std::size_t p, std::size_t q) {
    const NodeId x = order_[p];
    const NodeId y = order_[q];
    const std::int64_t old_px = pos_[static_cast<std::size_t>(x)];
    const std::int64_t old_py = pos_[static_cast<std::size_t>(y)];
    std::swap(order_[p], order_[q]);
    std::swap(pos_[static_cast<std::size_t>(x)], pos_[static_cast<std::size_t>(y)]);
    touched_.clear();
    std::int64_t delta = 0;
    delta += update_items(x, y, old_px);
    delta += update_items(y, x, old_py);
    total_ += delta;
    return delta;
  }

  void revert_swap(std::size_t p, std::size_t q, std::int64_t delta) {
    const NodeId x = order_[p];
    const NodeId y = order_[q];
    std::swap(order_[p], order_[q]);
    std::swap(pos_[static_cast<std::size_t>(x)], pos_[static_cast<std::size_t>(y)]);
    for (const auto& [item, old_value] : touched_) {
      cover_pos_[static_cast<std::size_t>(item)] = old_value;
    }
    total_ -= delta;
  }

  std::int64_t total() const { return total_; }
  const std::vector<NodeId>& order() const { return order_; }

  double auc() const {
    const auto n_c = static_cast<double>(g_.num_contributors());
    const auto n_i = static_cast<double>(g_.num_items());
    const double prefix_sum =
        n_i * (n_c + 1.0) - static_cast<double>(total_);
    return prefix_sum / (n_c * n_i);
  }

  std::int64_t recompute_total() const {
    std::int64_t sum = 0;
    for (NodeId i = 0; i < g_.num_items(); ++i) {
      std::int64_t best = 0;
      for (NodeId c : g_.contributors_of(i)) {
        best = std::max(best, pos_[static_cast<std::size_t>(c)]);
      }
      sum += best;
    }
    return sum;
  }

 private:
  // Updates the items of `moved` (skipping those shared with `partner`)
  // after pos_ has been swapped. old_p is moved's position before the swap.
  std::int64_t update_items(NodeId moved, NodeId partner, std::int64_t old_p) {
    const std::int64_t new_p = pos_[static_cast<std::size_t>(moved)];
    std::int64_t delta = 0;
    for (NodeId i : g_.items_of(moved)) {
      const auto neighbors = g_.contributors_of(i);
      if (std::binary_search(neighbors.begin(), neighbors.end(), partner)) continue;
      const std::int64_t old_cp = cover_pos_[static_cast<std::size_t>(i)];
      std::int64_t new_cp;
      if (new_p >= old_cp) {
        new_cp = new_p;
      } else if (old_cp != old_p) {
        continue;  // another neighbor holds the max and did not move
      } else {
        new_cp = 0;
        for (NodeId c : neighbors) {
          new_cp = std::max(new_cp, pos_[static_cast<std::size_t>(c)]);
        }
      }
      if (new_cp != old_cp) {
        touched_.emplace_back(i, old_cp);
        cover_pos_[static_cast<std::size_t>(i)] = new_cp;
        delta += new_cp - old_cp;
      }
    }
    return delta;
  }

  const BipartiteGraph& g_;
  std::vector<NodeId> order_;
  std::vector<std::int64_t> pos_;        // contributor -> 1-based position
  std::vector<std::int64_t> cover_pos_;  // item -> position covering it
  std::int64_t total_ = 0;
  std::vector<std::pair<NodeId, std::int64_t>> touched_;
};

}  // namespace

ShcResult shc_rank(const BipartiteGraph& g, const ShcParams& params) {
  if (params.restarts < 1) throw UsageError("shc restarts must be >= 1");
  if (params.patience < 0 || params.patience > params.max_moves_per_restart) {
    throw UsageError("shc patience must be in [0, max_moves_per_restart]");
  }

  const auto n_c = g.num_contributors();
  std::vector<NodeId> identity(static_cast<std::size_t>(n_c));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<NodeId> seeded_order;
  if (params.init == ShcInit::kMincovSeeded) seeded_order = mincov(g).order;

  OrderingState state(g);
  ShcResult result;
  std::vector<NodeId> best_order;
  std::int64_t best_total = 0;
  bool have_best = false;

  for (std::int64_t restart = 0; restart < params.restarts; ++restart) {
    Rng rng(params.seed + static_cast<std::uint64_t>(restart));
    std::vector<NodeId> initial =
        params.init == ShcInit::kMincovSeeded ? seeded_order : identity;
    if (params.init == ShcInit::kRandom) rng.shuffle(initial);
    state.reset(std::move(initial));

    ShcRestartStats stats;
    stats.initial_auc = state.auc();

    std::int64_t non_improving = 0;
    if (n_c >= 2) {
      while (stats.moves < params.max_moves_per_restart && non_improving < params.patience) {
        ++stats.moves;
        const auto p = static_cast<std::size_t>(rng.uniform(static_cast<std::uint64_t>(n_c)));
        auto q = static_cast<std::size_t>(rng.uniform(static_cast<std::uint64_t>(n_c) - 1));
        if (q >= p) ++q;
        const std::int64_t delta = state.apply_swap(p, q);
        if (delta > 0) {
          state.revert_swap(p, q, delta);
          ++non_improving;
        } else {
          ++stats.accepted;
          if (delta < 0) {
            ++stats.improved;
            non_improving = 0;
          } else {
            ++non_improving;
          }
        }
#ifndef NDEBUG
        if (stats.moves % 8192 == 0) assert(state.total() == state.recompute_total());
#endif
      }
    }

    stats.final_auc = state.auc();
    result.restarts.push_back(stats);
    if (!have_best || state.total() < best_total) {
      have_best = true;
      best_total = state.total();
      best_order = state.order();
    }
  }

  state.reset(best_order);
  result.auc = state.auc();
  result.ranking.method = "shc";
  result.ranking.order = std::move(best_order);
  return result;
}

namespace {

std::int64_t binomial_capped(std::int64_t n, std::int64_t k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 ways = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    ways = ways * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (ways > static_cast<unsigned __int128>(cap)) return cap + 1;
  }
  return static_cast<std::int64_t>(ways);
}

// Shared incremental coverage tracker for the exhaustive oracles.
class SubsetCover {
 public:
  explicit SubsetCover(const BipartiteGraph& g) : g_(g) {
    missing_.resize(static_cast<std::size_t>(g.num_items()));
    for (NodeId i = 0; i < g.num_items(); ++i) {
      missing_[static_cast<std::size_t>(i)] = g.item_degree(i);
    }
  }

  // Adds c to the set and returns the number of items newly covered.
  std::int64_t add(NodeId c) {
    std::int64_t gained = 0;
    for (NodeId i : g_.items_of(c)) {
      if (--missing_[static_cast<std::size_t>(i)] == 0) ++gained;
    }
    covered_ += gained;
    return gained;
  }

  void remove(NodeId c) {
    for (NodeId i : g_.items_of(c)) {
      if (missing_[static_cast<std::size_t>(i)]++ == 0) --covered_;
    }
  }

  std::int64_t covered() const { return covered_; }

 private:
  const BipartiteGraph& g_;
  std::vector<std::int64_t> missing_;
  std::int64_t covered_ = 0;
};

}  // namespace

OracleResult brute_force_best_k(const BipartiteGraph& g, std::int64_t k, std::int64_t limit) {
  const auto n = static_cast<std::int64_t>(g.num_contributors());
  const std::int64_t k_eff = std::min(k, n);  // monotone objective: size exactly k_eff suffices
  if (binomial_capped(n, k_eff, limit) > limit) {
    throw GuardError("C(" + std::to_string(n) + ", " + std::to_string(k_eff) +
                     ") exceeds the enumeration limit " + std::to_string(limit));
  }

  OracleResult result;
  result.k = k;
  result.best_cov = -1;

  SubsetCover cover(g);
  std::vector<NodeId> chosen;
  chosen.reserve(static_cast<std::size_t>(k_eff));

  // Lexicographic enumeration: the first maximizer found is the
  // lexicographically smallest.
  auto recurse = [&](auto&& self, NodeId start, std::int64_t remaining) -> void {
    if (remaining == 0) {
      ++result.evaluated;
      if (cover.covered() > result.best_cov) {
        result.best_cov = cover.covered();
        result.best_set = chosen;
      }
      return;
    }
    for (NodeId c = start; c <= static_cast<NodeId>(n - remaining); ++c) {
      cover.add(c);
      chosen.push_back(c);
      self(self, c + 1, remaining - 1);
      chosen.pop_back();
      cover.remove(c);
    }
  };
  recurse(recurse, 0, k_eff);
  return result;
}

ShapleyScores brute_force_shapley(const BipartiteGraph& g) {
  const auto n = static_cast<std::int64_t>(g.num_contributors());
  if (n > 10) {
    throw GuardError("permutation enumeration refuses |C| > 10, got " + std::to_string(n));
  }

  std::vector<std::int64_t> factorial(static_cast<std::size_t>(n) + 1, 1);
  for (std::int64_t i = 1; i <= n; ++i) {
    factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i - 1)] * i;
  }

  // acc[c] = sum over ordered prefixes of (marginal gain of c) * (completions),
  // an exact integer; one division at the end.
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  SubsetCover cover(g);

  auto recurse = [&](auto&& self, std::int64_t depth) -> void {
    if (depth == n) return;
    const std::int64_t weight = factorial[static_cast<std::size_t>(n - depth - 1)];
    for (NodeId c = 0; c < static_cast<NodeId>(n); ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = true;
      const std::int64_t gained = cover.add(c);
      acc[static_cast<std::size_t>(c)] += gained * weight;
      self(self, depth + 1);
      cover.remove(c);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  recurse(recurse, 0);

  ShapleyScores phi(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) {
    phi[static_cast<std::size_t>(c)] = static_cast<double>(acc[static_cast<std::size_t>(c)]) /
                                       static_cast<double>(factorial[static_cast<std::size_t>(n)]);
  }
  return phi;
}

namespace {

std::vector<NodeId> mask_to_ids(std::uint32_t mask) {
  std::vector<NodeId> ids;
  for (NodeId c = 0; mask != 0; ++c, mask >>= 1) {
    if (mask & 1u) ids.push_back(c);
  }
  return ids;
}

}  // namespace

std::string SupermodularWitness::describe() const {
  std::ostringstream out;
  auto print_set = [&](const std::vector<NodeId>& s) {
    out << '{';
    for (std::size_t j = 0; j < s.size(); ++j) out << (j ? "," : "") << s[j];
    out << '}';
  };
  if (monotonicity) {
    out << "monotonicity violated: cov(A)=" << cov_a << " > cov(B)=" << cov_b << " for A=";
    print_set(set_a);
    out << " B=";
    print_set(set_b);
  } else {
    out << "supermodularity violated: cov(A+v)-cov(A)=" << (cov_av - cov_a)
        << " > cov(B+v)-cov(B)=" << (cov_bv - cov_b) << " for A=";
    print_set(set_a);
    out << " B=";
    print_set(set_b);
    out << " v=" << v;
  }
  return out.str();
}

std::optional<SupermodularWitness> check_supermodular(const BipartiteGraph& g, std::int64_t trials,
                                                      std::uint64_t seed) {
  const auto n = static_cast<std::int64_t>(g.num_contributors());

  if (trials == 0) {
    if (n > 16) {
      throw GuardError("exhaustive chain check refuses |C| > 16, got " + std::to_string(n));
    }
    // cov for every subset via a superset-sum sweep over neighborhood masks.
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<std::int32_t> cov_table(static_cast<std::size_t>(full) + 1, 0);
    for (NodeId i = 0; i < g.num_items(); ++i) {
      std::uint32_t mask = 0;
      for (NodeId c : g.contributors_of(i)) mask |= 1u << c;
      ++cov_table[mask];
    }
    for (std::int64_t b = 0; b < n; ++b) {
      const std::uint32_t bit = 1u << b;
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (mask & bit) cov_table[mask] += cov_table[mask ^ bit];
      }
    }

    for (std::uint32_t set_b = 0; set_b <= full; ++set_b) {
      std::uint32_t set_a = set_b;
      while (true) {
        if (cov_table[set_a] > cov_table[set_b]) {
          SupermodularWitness w;
          w.set_a = mask_to_ids(set_a);
          w.set_b = mask_to_ids(set_b);
          w.cov_a = cov_table[set_a];
          w.cov_b = cov_table[set_b];
          w.monotonicity = true;
          return w;
        }
        for (std::uint32_t rest = full & ~set_b; rest != 0; rest &= rest - 1) {
          const std::uint32_t vbit = rest & (~rest + 1);
          const std::int64_t margin_a = cov_table[set_a | vbit] - cov_table[set_a];
          const std::int64_t margin_b = cov_table[set_b | vbit] - cov_table[set_b];
          if (margin_a > margin_b) {
            SupermodularWitness w;
            w.set_a = mask_to_ids(set_a);
            w.set_b = mask_to_ids(set_b);
            w.v = mask_to_ids(vbit)[0];
            w.cov_a = cov_table[set_a];
            w.cov_av = cov_table[set_a | vbit];
            w.cov_b = cov_table[set_b];
            w.cov_bv = cov_table[set_b | vbit];
            return w;
          }
        }
        if (set_a == 0) break;
        set_a = (set_a - 1) & set_b;
      }
    }
    return std::nullopt;
  }

  Rng rng(seed);
  std::vector<NodeId> set_a, set_b, outside;
  for (std::int64_t t = 0; t < trials; ++t) {
    set_a.clear();
    set_b.clear();
    outside.clear();
    for (NodeId c = 0; c < static_cast<NodeId>(n); ++c) {
      switch (rng.uniform(3)) {
        case 0:
          set_a.push_back(c);
          set_b.push_back(c);
          break;
        case 1:
          set_b.push_back(c);
          break;
        default:
          outside.push_back(c);
      }
    }
    if (outside.empty()) continue;
    const NodeId v = outside[static_cast<std::size_t>(rng.uniform(outside.size()))];

    const std::int64_t cov_a = cov(g, set_a);
    const std::int64_t cov_b = cov(g, set_b);
    set_a.push_back(v);
    const std::int64_t cov_av = cov(g, set_a);
    set_a.pop_back();
    set_b.push_back(v);
    const std::int64_t cov_bv = cov(g, set_b);
    set_b.pop_back();

    if (cov_a > cov_b || cov_av - cov_a > cov_bv - cov_b) {
      SupermodularWitness w;
      w.set_a = set_a;
      w.set_b = set_b;
      w.v = v;
      w.cov_a = cov_a;
      w.cov_av = cov_av;
      w.cov_b = cov_b;
      w.cov_bv = cov_bv;
      w.monotonicity = cov_a > cov_b;
      return w;
    }
  }
  return std::nullopt;
}

std::string oracle_result_json(const OracleResult& result, const BipartiteGraph& g) {
  nlohmann::json j;
  j["k"] = result.k;
  j["best_cov"] = result.best_cov;
  auto labels = nlohmann::json::array();
  for (NodeId c : result.best_set) labels.push_back(g.contributor_label(c));
  j["best_set"] = std::move(labels);
  j["evaluated"] = result.evaluated;
  return j.dump();
}

}  // namespace covrank
