#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sdepth {

/// A subset of {0, ..., n-1} packed into a machine word. Bit i set means
/// vertex i (1-based label i+1 in all I/O) is a member.
using Mask = std::uint32_t;

/// Hard ceiling for any vertex count handled by the library.
inline constexpr int kMaxVertices = 24;
/// Ceiling for anything that materializes the characteristic poset.
inline constexpr int kMaxSdepthVertices = 20;

inline constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

inline constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

inline constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

/// Canonical order on subsets: cardinality first, then mask value.
inline constexpr bool canonical_less(Mask a, Mask b) noexcept {
  const int pa = popcount(a);
  const int pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

/// 0-based member indices in ascending order.
inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// 1-based labels in ascending order.
inline std::vector<int> labels(Mask m) {
  auto out = members(m);
  for (auto& v : out) ++v;
  return out;
}

/// Compact rendering used in diagnostics, e.g. {1,3}.
inline std::string format_set(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int v : labels(m)) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

/// Calls f(sub) for every subset of `m`, including 0 and m itself.
template <typename F>
void for_each_subset(Mask m, F&& f) {
  Mask sub = 0;
  while (true) {
    f(sub);
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

/// Calls f(sub) for every subset of `m` with exactly `size` members, in
/// ascending mask order. Returns false if f asked to stop early.
template <typename F>
bool for_each_subset_of_size(Mask m, int size, F&& f) {
  const auto pool = members(m);
  const int count = static_cast<int>(pool.size());
  if (size < 0 || size > count) return true;
  // Colex enumeration of index combinations yields ascending mask order
  // because pool is sorted ascending.
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Mask sub = 0;
    for (int i : idx) sub |= bit(pool[i]);
    if (!f(sub)) return false;
    int i = 0;
    while (i < size && (i + 1 == size ? idx[i] + 1 >= count : idx[i] + 1 >= idx[i + 1])) ++i;
    if (i == size) return true;
    ++idx[i];
    for (int j = 0; j < i; ++j) idx[j] = j;
  }
}

inline constexpr std::int64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace sdepth
