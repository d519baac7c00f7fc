#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdepth/error.hpp"
#include "sdepth/subset.hpp"

namespace sdepth {

/// Strongly typed 0-based vertex index.
struct VertexId {
  int index = 0;
  friend constexpr bool operator==(VertexId, VertexId) = default;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// A clutter on the vertex set {0, ..., n-1}: a nonempty antichain of
/// nonempty edges that together cover every vertex. Edges are stored sorted
/// by mask value. Instances are immutable once constructed.
class Clutter {
 public:
  /// Validates and canonicalizes. `cap` bounds the vertex count.
  Clutter(int n, std::vector<Mask> edges, int cap = kMaxVertices) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "vertex count must be at least 1");
    if (n_ > cap || n_ > kMaxVertices)
      throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n_) + " exceeds cap " +
                                              std::to_string(std::min(cap, kMaxVertices)));
    if (edges_.empty()) throw Error(ErrorKind::InvalidArgument, "edge list is empty");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    const Mask all = full_mask(n_);
    Mask used = 0;
    for (Mask e : edges_) {
      if (e == 0) throw Error(ErrorKind::EmptyEdge, "edges must be nonempty");
      if (!is_subset(e, all))
        throw Error(ErrorKind::VertexOutOfRange, "edge " + format_set(e) + " leaves [1," + std::to_string(n_) + "]");
      used |= e;
    }
    for (Mask a : edges_)
      for (Mask b : edges_)
        if (a != b && is_subset(a, b))
          throw Error(ErrorKind::ContainedEdge, format_set(a) + " is contained in " + format_set(b));
    if (used != all) {
      const int v = std::countr_zero(static_cast<Mask>(all & ~used));
      throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v + 1) + " lies in no edge");
    }
  }

  int vertex_count() const noexcept { return n_; }
  std::span<const Mask> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Mask vertices() const noexcept { return full_mask(n_); }

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  int n_;
  std::vector<Mask> edges_;
};

/// Ordered blocks V_1, ..., V_k of a vertex partition.
struct VertexPartition {
  std::vector<Mask> blocks;

  std::vector<int> sizes() const {
    std::vector<int> out;
    for (Mask b : blocks) out.push_back(popcount(b));
    return out;
  }
  std::size_t size() const noexcept { return blocks.size(); }
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

/// A minor together with the map from its vertex indices back to the parent
/// clutter: origin[i] is the parent index of minor vertex i.
struct Minor {
  Clutter clutter;
  std::vector<VertexId> origin;
};

/// Output of the complete k-partite generator. `permutation[i]` is the
/// position in the caller's size list of the i-th block after sorting.
struct KPartiteInstance {
  Clutter clutter;
  VertexPartition partition;
  int degree = 0;
  std::vector<int> permutation;
};

inline Clutter make_clutter(int n, const std::vector<std::vector<int>>& edges_1based, int cap = kMaxVertices) {
  if (n > kMaxVertices) throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " exceeds cap");
  std::vector<Mask> masks;
  for (const auto& e : edges_1based) {
    Mask m = 0;
    for (int v : e) {
      if (v < 1 || v > n)
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
      m |= bit(v - 1);
    }
    masks.push_back(m);
  }
  return Clutter(n, std::move(masks), cap);
}

/// The common edge size, if all edges have the same size.
inline std::optional<int> is_uniform(const Clutter& c) {
  const int d = popcount(c.edges().front());
  for (Mask e : c.edges())
    if (popcount(e) != d) return std::nullopt;
  return d;
}

/// Edges are all d-subsets picking one vertex from each of d distinct blocks.
/// Block sizes are sorted ascending and blocks are laid out consecutively.
inline KPartiteInstance complete_kpartite(int d, std::vector<int> sizes) {
  const int k = static_cast<int>(sizes.size());
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "no blocks given");
  if (d > k)
    throw Error(ErrorKind::DegreeExceedsParts,
                "d = " + std::to_string(d) + " exceeds the number of parts k = " + std::to_string(k));
  for (int r : sizes)
    if (r < 1) throw Error(ErrorKind::InvalidArgument, "block sizes must be at least 1");
  const long total = std::accumulate(sizes.begin(), sizes.end(), 0L);
  if (total > kMaxVertices)
    throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(total) + " exceeds cap " + std::to_string(kMaxVertices));

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return sizes[a] < sizes[b]; });
  std::vector<int> sorted;
  for (int i : perm) sorted.push_back(sizes[i]);

  VertexPartition part;
  int offset = 0;
  for (int r : sorted) {
    part.blocks.push_back(full_mask(r) << offset);
    offset += r;
  }

  std::vector<Mask> edges;
  // Choose d of the k blocks, then one vertex from each chosen block.
  for_each_subset_of_size(full_mask(k), d, [&](Mask chosen) {
    std::vector<Mask> acc{0};
    for (int b : members(chosen)) {
      std::vector<Mask> next;
      for (Mask partial : acc)
        for (int v : members(part.blocks[b])) next.push_back(partial | bit(v));
      acc = std::move(next);
    }
    edges.insert(edges.end(), acc.begin(), acc.end());
    return true;
  });
  return {Clutter(static_cast<int>(total), std::move(edges)), std::move(part), d, std::move(perm)};
}

namespace detail {

/// Keeps only inclusion-minimal sets; result sorted and deduplicated.
inline std::vector<Mask> minimalize(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask kept : out)
      if (is_subset(kept, s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Drops vertices outside `support` and renumbers the rest densely.
inline Minor compact(int n, const std::vector<Mask>& edges, Mask support) {
  std::vector<int> remap(n, -1);
  std::vector<VertexId> origin;
  for (int v : members(support)) {
    remap[v] = static_cast<int>(origin.size());
    origin.push_back(VertexId{v});
  }
  std::vector<Mask> relabeled;
  for (Mask e : edges) {
    Mask m = 0;
    for (int v : members(e)) m |= bit(remap[v]);
    relabeled.push_back(m);
  }
  return {Clutter(static_cast<int>(origin.size()), std::move(relabeled)), std::move(origin)};
}

inline void check_vertex(const Clutter& c, VertexId v) {
  if (v.index < 0 || v.index >= c.vertex_count())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v.index + 1) + " out of range");
}

}  // namespace detail

/// Setting x_v = 0: edges through v vanish, newly isolated vertices go away.
inline Minor deletion(const Clutter& c, VertexId v) {
  detail::check_vertex(c, v);
  std::vector<Mask> kept;
  Mask support = 0;
  for (Mask e : c.edges())
    if ((e & bit(v.index)) == 0) {
      kept.push_back(e);
      support |= e;
    }
  if (kept.empty())
    throw Error(ErrorKind::EmptyResult, "deleting vertex " + std::to_string(v.index + 1) + " removes every edge");
  return detail::compact(c.vertex_count(), kept, support);
}

/// Setting x_v = 1: v is removed from every edge and the result is reduced
/// to its minimal members.
inline Minor contraction(const Clutter& c, VertexId v) {
  detail::check_vertex(c, v);
  std::vector<Mask> shrunk;
  for (Mask e : c.edges()) {
    const Mask s = e & ~bit(v.index);
    if (s == 0)
      throw Error(ErrorKind::UnitIdeal, "edge {" + std::to_string(v.index + 1) + "} contracts to the unit ideal");
    shrunk.push_back(s);
  }
  auto minimal = detail::minimalize(std::move(shrunk));
  Mask support = 0;
  for (Mask e : minimal) support |= e;
  return detail::compact(c.vertex_count(), minimal, support);
}

inline bool is_vertex_cover(const Clutter& c, Mask cover) {
  return std::all_of(c.edges().begin(), c.edges().end(), [&](Mask e) { return (e & cover) != 0; });
}

inline bool is_minimal_vertex_cover(const Clutter& c, Mask cover) {
  if (!is_vertex_cover(c, cover)) return false;
  for (int v : members(cover))
    if (is_vertex_cover(c, cover & ~bit(v))) return false;
  return true;
}

/// All inclusion-minimal transversals, ordered by size then mask value.
/// Depth-first over vertices: a branch is cut as soon as some edge can no
/// longer be hit, and every leaf is checked for minimality.
inline std::vector<Mask> minimal_vertex_covers(const Clutter& c) {
  const int n = c.vertex_count();
  const auto edges = c.edges();
  std::vector<Mask> out;
  auto rec = [&](auto&& self, int v, Mask chosen) -> void {
    // Vertices >= v are undecided.
    const Mask undecided = full_mask(n) & ~full_mask(v);
    for (Mask e : edges)
      if ((e & chosen) == 0 && (e & undecided) == 0) return;
    // Adding vertices never creates a private edge (one meeting the cover
    // only in u), so a chosen vertex without one rules out minimality.
    for (int u : members(chosen)) {
      const bool has_private =
          std::any_of(edges.begin(), edges.end(), [&](Mask e) { return (e & chosen) == bit(u); });
      if (!has_private) return;
    }
    if (v == n) {
      if (is_minimal_vertex_cover(c, chosen)) out.push_back(chosen);
      return;
    }
    self(self, v + 1, chosen | bit(v));
    self(self, v + 1, chosen);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Checks |e ∩ V_i| <= 1 for every edge and block. Minimality of the number
/// of blocks is not checked.
inline bool validate_kpartite(const Clutter& c, const VertexPartition& p) {
  Mask seen = 0;
  for (Mask b : p.blocks) {
    if (b == 0 || (seen & b) != 0 || !is_subset(b, c.vertices()))
      throw Error(ErrorKind::PartitionMismatch, "blocks must be nonempty, disjoint and inside the vertex set");
    seen |= b;
  }
  if (seen != c.vertices()) throw Error(ErrorKind::PartitionMismatch, "blocks do not cover the vertex set");
  for (Mask e : c.edges())
    for (Mask b : p.blocks)
      if (popcount(e & b) > 1) return false;
  return true;
}

/// True when `c` is exactly the complete d-partite clutter on the blocks of p.
inline bool is_complete_on(const Clutter& c, const VertexPartition& p, int d) {
  if (!validate_kpartite(c, p)) return false;
  if (static_cast<int>(p.size()) < d) return false;
  std::vector<int> sizes = p.sizes();
  std::int64_t expected = 0;
  for_each_subset_of_size(full_mask(static_cast<int>(sizes.size())), d, [&](Mask chosen) {
    std::int64_t prod = 1;
    for (int i : members(chosen)) prod *= sizes[i];
    expected += prod;
    return true;
  });
  for (Mask e : c.edges())
    if (popcount(e) != d) return false;
  // Every edge is a transversal of d distinct blocks and edges are distinct,
  // so matching the count means every such transversal is present.
  return static_cast<std::int64_t>(c.edge_count()) == expected;
}

}  // namespace sdepth
