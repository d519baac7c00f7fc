#pragma once

// Test-only reference for Stanley depth. Builds the up-closed family by
// direct enumeration and maximizes min |top| over every interval partition,
// sharing nothing with the library search beyond the Mask type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sdepth/error.hpp"
#include "sdepth/subset.hpp"

namespace sdepth::testing {

inline constexpr std::size_t kOracleMaxGround = 32;

/// max over all interval partitions of min |top|. Recursion: the least
/// uncovered set (any fixed order works) must be the bottom of its interval;
/// every superset whose interval is still uncovered is a branch. Results are
/// memoized on the uncovered family, which keeps the enumeration exhaustive.
inline int sdepth_exhaustive_oracle(int n, const std::vector<Mask>& generators) {
  std::vector<Mask> ground;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (std::any_of(generators.begin(), generators.end(), [&](Mask g) { return (g & ~m) == 0; }))
      ground.push_back(m);
  if (ground.size() > kOracleMaxGround)
    throw Error(ErrorKind::CapExceeded, "oracle limited to " + std::to_string(kOracleMaxGround) + " elements");
  std::vector<int> pos(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = static_cast<int>(i);

  const int infinity = n + 1;
  std::unordered_map<std::uint64_t, int> memo;
  auto best = [&](auto&& self, std::uint64_t uncovered) -> int {
    if (uncovered == 0) return infinity;
    if (auto it = memo.find(uncovered); it != memo.end()) return it->second;
    const Mask x = ground[std::countr_zero(uncovered)];
    const Mask rest = ((Mask{1} << n) - 1) & ~x;
    int result = -1;
    // Every top D = x | extra.
    Mask extra = 0;
    while (true) {
      std::uint64_t block = 0;
      bool ok = true;
      Mask s = 0;
      while (true) {
        const int i = pos[x | s];
        if (i < 0 || !((uncovered >> i) & 1)) {
          ok = false;
          break;
        }
        block |= std::uint64_t{1} << i;
        if (s == extra) break;
        s = (s - extra) & extra;
      }
      if (ok) {
        const int top = std::popcount(x | extra);
        result = std::max(result, std::min(top, self(self, uncovered & ~block)));
      }
      if (extra == rest) break;
      extra = (extra - rest) & rest;
    }
    memo.emplace(uncovered, result);
    return result;
  };
  const std::uint64_t all = ground.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground.size()) - 1;
  return best(best, all);
}

}  // namespace sdepth::testing
