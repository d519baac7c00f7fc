#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "sdepth/clutter.hpp"
#include "sdepth/error.hpp"
#include "sdepth/subset.hpp"

namespace sdepth {

/// The interval [bottom, top] of the Boolean lattice.
struct Interval {
  Mask bottom = 0;
  Mask top = 0;

  std::uint64_t size() const noexcept { return std::uint64_t{1} << popcount(top & ~bottom); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;

  /// Smallest top cardinality, i.e. the Stanley depth of the decomposition.
  /// An empty partition reports -1.
  int min_top() const {
    int m = -1;
    for (const auto& iv : intervals)
      if (m < 0 || popcount(iv.top) < m) m = popcount(iv.top);
    return m;
  }
  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

/// Up-closed family of subsets of [n] containing some generator support.
/// Elements are kept in canonical order (cardinality, then mask value).
class CharacteristicPoset {
 public:
  CharacteristicPoset(int n, std::vector<Mask> generators) : n_(n) {
    if (n_ < 0 || n_ > kMaxSdepthVertices)
      throw Error(ErrorKind::CapExceeded,
                  "poset on n = " + std::to_string(n_) + " exceeds cap " + std::to_string(kMaxSdepthVertices));
    if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "ideal needs at least one generator");
    for (Mask g : generators)
      if (!is_subset(g, full_mask(n_)))
        throw Error(ErrorKind::VertexOutOfRange, "generator " + format_set(g) + " outside the ambient set");
    generators_ = detail::minimalize(std::move(generators));

    const std::size_t universe = std::size_t{1} << n_;
    index_.assign(universe, -1);
    std::vector<std::uint8_t> member(universe, 0);
    for (Mask g : generators_) member[g] = 1;
    // Ascending masks visit every set after all of its subsets.
    for (std::size_t m = 1; m < universe; ++m) {
      if (member[m]) continue;
      Mask rest = static_cast<Mask>(m);
      while (rest != 0) {
        const Mask low = rest & (~rest + 1);
        if (member[m ^ low]) {
          member[m] = 1;
          break;
        }
        rest ^= low;
      }
    }
    for (std::size_t m = 0; m < universe; ++m)
      if (member[m]) ground_.push_back(static_cast<Mask>(m));
    std::sort(ground_.begin(), ground_.end(), canonical_less);
    for (std::size_t i = 0; i < ground_.size(); ++i) index_[ground_[i]] = static_cast<std::int32_t>(i);
  }

  int ambient() const noexcept { return n_; }
  std::span<const Mask> generators() const noexcept { return generators_; }
  std::span<const Mask> ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return ground_.size(); }
  bool contains(Mask m) const noexcept { return m < index_.size() && index_[m] >= 0; }
  /// Position of m in canonical order, or -1.
  std::int32_t index_of(Mask m) const noexcept { return m < index_.size() ? index_[m] : -1; }

  int min_generator_size() const {
    int best = n_;
    for (Mask g : generators_) best = std::min(best, popcount(g));
    return best;
  }

 private:
  int n_;
  std::vector<Mask> generators_;
  std::vector<Mask> ground_;
  std::vector<std::int32_t> index_;
};

inline CharacteristicPoset build_poset(const Clutter& c) {
  if (c.vertex_count() > kMaxSdepthVertices)
    throw Error(ErrorKind::CapExceeded, "sdepth is limited to n <= " + std::to_string(kMaxSdepthVertices));
  return CharacteristicPoset(c.vertex_count(), {c.edges().begin(), c.edges().end()});
}

/// Certificate checker: disjointness, exact coverage of the ground set,
/// bottoms in the ground set and every top of size at least k. Linear in the
/// total number of interval members.
inline bool validate_partition(const CharacteristicPoset& p, const IntervalPartition& part, int k) {
  std::vector<std::uint8_t> seen(p.size(), 0);
  std::size_t covered = 0;
  for (const auto& iv : part.intervals) {
    if (!is_subset(iv.bottom, iv.top) || !is_subset(iv.top, full_mask(p.ambient()))) return false;
    if (!p.contains(iv.bottom)) return false;
    if (popcount(iv.top) < k) return false;
    bool ok = true;
    for_each_subset(iv.top & ~iv.bottom, [&](Mask s) {
      const auto idx = p.index_of(iv.bottom | s);
      if (idx < 0 || seen[idx]) {
        ok = false;
        return;
      }
      seen[idx] = 1;
      ++covered;
    });
    if (!ok) return false;
  }
  return covered == p.size();
}

struct SearchOptions {
  /// Workers used for the root branching level. Results do not depend on it.
  int threads = 1;
  /// Search nodes allowed per root branch of one level; 0 means unlimited.
  /// Running out raises SearchBudgetExceeded rather than guessing.
  std::uint64_t max_nodes = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t count_prunes = 0;
  std::uint64_t reach_prunes = 0;
};

namespace detail {

/// Depth-first search for an interval partition with every top of size at
/// least k. The least uncovered element is always the bottom of its interval;
/// candidate tops are tried in canonical order.
///
/// If X has |X| < k and no top of size exactly k leads to a completion, no
/// larger top does either: any interval [X, D] with |D| > k splits into
/// [X, D'] with |D'| = k plus pieces whose tops stay >= k. So only size-k tops
/// are branched on, which yields the same first witness as scanning all
/// tops >= k. Once the least uncovered element has size >= k, the remainder
/// is completed with trivial intervals.
class LevelSearch {
 public:
  LevelSearch(const CharacteristicPoset& p, int k, std::uint64_t max_nodes = 0)
      : p_(p), k_(k), max_nodes_(max_nodes), covered_(p.size(), 0), uncovered_at_(p.ambient() + 2, 0) {
    for (Mask m : p.ground()) ++uncovered_at_[popcount(m)];
  }

  /// Candidate intervals for the least element, in canonical order.
  std::vector<Interval> root_candidates() {
    if (p_.size() == 0 || popcount(p_.ground()[0]) >= k_) return {};
    return candidates(0);
  }

  bool run(std::optional<Interval> forced_root, const std::atomic<bool>* stop) {
    stop_ = stop;
    if (forced_root) {
      if (!available(*forced_root)) return false;
      place(*forced_root);
      if (!neighbors_reachable(*forced_root)) return false;
    }
    if (!prefix_feasible()) return false;
    return search(0);
  }

  /// Witness after a successful run, completed with trivial intervals.
  IntervalPartition witness() const {
    IntervalPartition part{chosen_};
    for (std::size_t i = 0; i < p_.size(); ++i)
      if (!covered_[i]) part.intervals.push_back({p_.ground()[i], p_.ground()[i]});
    return part;
  }

  const SearchStats& stats() const noexcept { return stats_; }
  bool budget_exhausted() const noexcept { return exhausted_; }

 private:
  std::vector<Interval> candidates(std::size_t pos) const {
    std::vector<Interval> out;
    const Mask x = p_.ground()[pos];
    const Mask free = full_mask(p_.ambient()) & ~x;
    for_each_subset_of_size(free, k_ - popcount(x), [&](Mask extra) {
      const Interval iv{x, x | extra};
      if (available(iv)) out.push_back(iv);
      return true;
    });
    return out;
  }

  bool available(const Interval& iv) const {
    bool ok = true;
    const Mask span = iv.top & ~iv.bottom;
    Mask s = 0;
    while (true) {
      const auto idx = p_.index_of(iv.bottom | s);
      if (idx < 0 || covered_[idx]) {
        ok = false;
        break;
      }
      if (s == span) break;
      s = (s - span) & span;
    }
    return ok;
  }

  void mark(const Interval& iv, std::uint8_t value) {
    for_each_subset(iv.top & ~iv.bottom, [&](Mask s) {
      const Mask m = iv.bottom | s;
      covered_[p_.index_of(m)] = value;
      uncovered_at_[popcount(m)] += value ? -1 : 1;
    });
  }

  void place(const Interval& iv) {
    mark(iv, 1);
    chosen_.push_back(iv);
  }

  void unplace(const Interval& iv) {
    mark(iv, 0);
    chosen_.pop_back();
  }

  /// Level counting bound. Every still-uncovered element of size j < k must
  /// sit in an interval whose bottom has some size i <= j and whose top has
  /// size exactly k; such an interval holds C(k-i, j-i) elements of size j.
  /// Peeling levels from the bottom fixes the number of intervals starting at
  /// each level; all must be nonnegative, and their tops are distinct
  /// uncovered k-sets.
  bool prefix_feasible() {
    std::int64_t bottoms[kMaxSdepthVertices + 1] = {};
    std::int64_t total = 0;
    for (int j = 0; j < k_; ++j) {
      std::int64_t need = uncovered_at_[j];
      for (int i = 0; i < j; ++i) need -= bottoms[i] * binomial(k_ - i, j - i);
      if (need < 0) {
        ++stats_.count_prunes;
        return false;
      }
      bottoms[j] = need;
      total += need;
    }
    if (total > uncovered_at_[k_]) {
      ++stats_.count_prunes;
      return false;
    }
    return true;
  }

  /// Some size-k top D over y with [y, D] entirely uncovered.
  bool has_top(Mask y) const {
    const Mask free = full_mask(p_.ambient()) & ~y;
    return !for_each_subset_of_size(free, k_ - popcount(y), [&](Mask extra) {
      return !available(Interval{y, y | extra});
    });
  }

  /// An uncovered set y below k can only be covered by an interval [b, D]
  /// with b <= y <= D and |D| = k, so [y, D] must be free. Covering the sets
  /// of `placed` can only remove such tops from subsets of placed.top.
  bool neighbors_reachable(const Interval& placed) {
    bool ok = true;
    for_each_subset(placed.top, [&](Mask y) {
      if (!ok || popcount(y) >= k_) return;
      const auto idx = p_.index_of(y);
      if (idx < 0 || covered_[idx]) return;
      if (!has_top(y)) ok = false;
    });
    if (!ok) ++stats_.reach_prunes;
    return ok;
  }

  bool search(std::size_t pos) {
    ++stats_.nodes;
    if (max_nodes_ != 0 && stats_.nodes > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    if (stop_ != nullptr && (stats_.nodes & 0x3ff) == 0 && stop_->load(std::memory_order_relaxed)) return false;
    while (pos < p_.size() && covered_[pos]) ++pos;
    if (pos == p_.size() || popcount(p_.ground()[pos]) >= k_) return true;
    for (const Interval& iv : candidates(pos)) {
      place(iv);
      if (prefix_feasible() && neighbors_reachable(iv) && search(pos + 1)) return true;
      unplace(iv);
      if (exhausted_) return false;
    }
    return false;
  }

  const CharacteristicPoset& p_;
  int k_;
  std::uint64_t max_nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint8_t> covered_;
  std::vector<std::int64_t> uncovered_at_;
  std::vector<Interval> chosen_;
  SearchStats stats_;
  const std::atomic<bool>* stop_ = nullptr;
};

}  // namespace detail

/// An interval partition of the poset whose tops all have at least k
/// elements, if one exists. The witness is the first one met in canonical
/// depth-first order, independent of the thread count.
inline std::optional<IntervalPartition> sdepth_at_least(const CharacteristicPoset& p, int k,
                                                        const SearchOptions& opts = {},
                                                        SearchStats* stats = nullptr) {
  if (k > p.ambient()) return std::nullopt;
  if (k < 0) k = 0;

  detail::LevelSearch root(p, k, opts.max_nodes);
  const auto branches = root.root_candidates();
  if (branches.empty()) {
    const bool ok = root.run(std::nullopt, nullptr);
    if (stats) *stats = root.stats();
    if (!ok) return std::nullopt;
    return root.witness();
  }

  // Root-level fan-out, also used with a single worker so that the node
  // budget means the same thing for every thread count. Each branch searches
  // privately; the least successful branch index wins, and branches beyond a
  // known success are abandoned.
  const int workers = std::clamp<int>(opts.threads, 1, static_cast<int>(branches.size()));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{branches.size()};
  std::vector<std::optional<IntervalPartition>> found(branches.size());
  std::vector<SearchStats> branch_stats(branches.size());
  std::vector<std::uint8_t> exhausted(branches.size(), 0);
  std::vector<std::atomic<bool>> cancel(branches.size());
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= branches.size() || i > best.load()) return;
      detail::LevelSearch s(p, k, opts.max_nodes);
      const bool ok = s.run(branches[i], &cancel[i]);
      branch_stats[i] = s.stats();
      exhausted[i] = s.budget_exhausted();
      if (!ok) continue;
      found[i] = s.witness();
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      for (std::size_t j = i + 1; j < branches.size(); ++j) cancel[j].store(true);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  if (stats) {
    *stats = {};
    for (const auto& s : branch_stats) {
      stats->nodes += s.nodes;
      stats->count_prunes += s.count_prunes;
      stats->reach_prunes += s.reach_prunes;
    }
  }
  const std::size_t winner = best.load();
  for (std::size_t i = 0; i < winner && i < branches.size(); ++i)
    if (exhausted[i])
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "level " + std::to_string(k) + " undecided after " + std::to_string(opts.max_nodes) +
                      " nodes in one root branch");
  if (winner == branches.size()) return std::nullopt;
  return found[winner];
}

struct SdepthResult {
  int value = 0;
  IntervalPartition certificate;
  /// Level whose search was exhausted without a witness; absent when value = n.
  std::optional<int> refutation_level;
};

/// Largest k admitting a partition with all tops >= k, searched downward
/// from n. The minimum generator size always succeeds.
inline SdepthResult exact_sdepth(const CharacteristicPoset& p, const SearchOptions& opts = {}) {
  const int lower = p.min_generator_size();
  for (int k = p.ambient(); k >= lower; --k) {
    if (auto part = sdepth_at_least(p, k, opts)) {
      SdepthResult r{k, std::move(*part), std::nullopt};
      if (k < p.ambient()) r.refutation_level = k + 1;
      return r;
    }
  }
  throw Error(ErrorKind::InvariantViolation, "no partition found at the minimum generator degree");
}

inline SdepthResult exact_sdepth(const Clutter& c, const SearchOptions& opts = {}) {
  return exact_sdepth(build_poset(c), opts);
}

}  // namespace sdepth
