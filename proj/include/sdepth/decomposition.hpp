#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "sdepth/bounds.hpp"
#include "sdepth/clutter.hpp"
#include "sdepth/error.hpp"
#include "sdepth/subset.hpp"

namespace sdepth {

/// Disjoint minimal vertex covers V_1, ..., V_d whose union is V and which
/// each meet every edge exactly once.
struct DPartition {
  std::vector<Mask> parts;

  std::vector<int> sizes() const {
    std::vector<int> out;
    for (Mask m : parts) out.push_back(popcount(m));
    return out;
  }
  /// Same family of parts, ignoring order.
  bool same_family(const DPartition& other) const {
    auto a = parts;
    auto b = other.parts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  friend bool operator==(const DPartition&, const DPartition&) = default;
};

inline bool is_unit_cover(const Clutter& c, Mask cover) {
  return std::all_of(c.edges().begin(), c.edges().end(), [&](Mask e) { return popcount(e & cover) == 1; });
}

/// Minimal vertex covers meeting every edge in exactly one vertex, canonical order.
inline std::vector<Mask> unit_covers(const Clutter& c) {
  if (!is_uniform(c)) throw Error(ErrorKind::NotUniform, "unit covers are defined for uniform clutters");
  std::vector<Mask> out;
  for (Mask m : minimal_vertex_covers(c))
    if (is_unit_cover(c, m)) out.push_back(m);
  return out;
}

inline std::optional<Mask> find_unit_cover(const Clutter& c) {
  auto all = unit_covers(c);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Checks each invariant separately against `c`.
inline bool verify_dpartition(const Clutter& c, const DPartition& p) {
  if (p.parts.empty()) return false;
  Mask seen = 0;
  for (Mask part : p.parts) {
    if ((seen & part) != 0) return false;
    seen |= part;
  }
  if (seen != c.vertices()) return false;
  for (Mask part : p.parts)
    if (!is_minimal_vertex_cover(c, part)) return false;
  for (Mask part : p.parts)
    if (!is_unit_cover(c, part)) return false;
  return true;
}

namespace detail {

/// Contracts every vertex of `cover` in ascending order. Vertices already
/// dropped by an earlier step are skipped. origin maps back to `c`.
inline Minor contract_all(const Clutter& c, Mask cover) {
  Minor cur{c, {}};
  for (int v = 0; v < c.vertex_count(); ++v) cur.origin.push_back(VertexId{v});
  for (int v : members(cover)) {
    auto it = std::find(cur.origin.begin(), cur.origin.end(), VertexId{v});
    if (it == cur.origin.end()) continue;
    Minor next = contraction(cur.clutter, VertexId{static_cast<int>(it - cur.origin.begin())});
    for (auto& o : next.origin) o = cur.origin[o.index];
    cur = std::move(next);
  }
  return cur;
}

inline Mask lift(Mask m, const std::vector<VertexId>& origin) {
  Mask out = 0;
  for (int v : members(m)) out |= bit(origin[v].index);
  return out;
}

/// Backtracks over unit-cover choices level by level. `emit` receives each
/// complete sequence of parts (in the labels of `c`) and returns true to stop.
using PartsSink = std::function<bool(std::vector<Mask>)>;

inline bool dpartition_search(const Clutter& c, int d, const PartsSink& emit) {
  if (d == 1) return emit(std::vector<Mask>{c.vertices()});
  for (Mask first : unit_covers(c)) {
    const Minor minor = contract_all(c, first);
    const bool stop = dpartition_search(minor.clutter, d - 1, [&](std::vector<Mask> rest) {
      std::vector<Mask> parts{first};
      for (Mask m : rest) parts.push_back(lift(m, minor.origin));
      return emit(std::move(parts));
    });
    if (stop) return true;
  }
  return false;
}

inline int uniform_degree(const Clutter& c) {
  const auto d = is_uniform(c);
  if (!d) throw Error(ErrorKind::NotUniform, "d-partitions are defined for uniform clutters");
  return *d;
}

}  // namespace detail

/// First d-partition in canonical choice order: V_1 is a unit cover, the
/// rest comes from the (d-1)-uniform minor obtained by contracting V_1.
/// Absent when no sequence of unit-cover choices works.
inline std::optional<DPartition> decompose_dpartition(const Clutter& c) {
  const int d = detail::uniform_degree(c);
  std::optional<DPartition> result;
  detail::dpartition_search(c, d, [&](std::vector<Mask> parts) {
    result = DPartition{std::move(parts)};
    return true;
  });
  if (result && !verify_dpartition(c, *result))
    throw Error(ErrorKind::InvariantViolation, "constructed d-partition fails verification");
  return result;
}

/// Every distinct d-partition (as an unordered family) reachable by the
/// recursion, each verified against `c`.
inline std::vector<DPartition> enumerate_dpartitions(const Clutter& c) {
  const int d = detail::uniform_degree(c);
  std::vector<DPartition> out;
  detail::dpartition_search(c, d, [&](std::vector<Mask> parts) {
    DPartition candidate{std::move(parts)};
    if (!verify_dpartition(c, candidate))
      throw Error(ErrorKind::InvariantViolation, "constructed d-partition fails verification");
    const bool dup = std::any_of(out.begin(), out.end(), [&](const DPartition& p) { return p.same_family(candidate); });
    if (!dup) out.push_back(std::move(candidate));
    return false;
  });
  return out;
}

/// Smallest integral-clutter bound over the given d-partitions. A clutter may
/// have several with different size vectors, so every one is evaluated.
inline std::optional<Rational> tightest_integral_bound(const Clutter& c, const std::vector<DPartition>& parts) {
  std::optional<Rational> best;
  for (const auto& p : parts) {
    const Rational b = paper_upper_integral(p.sizes(), static_cast<std::int64_t>(c.edge_count()));
    if (!best || b < *best) best = b;
  }
  return best;
}

}  // namespace sdepth
