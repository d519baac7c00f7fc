#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "sdepth/clutter.hpp"
#include "sdepth/error.hpp"
#include "sdepth/subset.hpp"

namespace sdepth {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& q) {
  // boost::rational keeps the denominator positive.
  const auto n = q.numerator();
  const auto d = q.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

namespace detail {

inline void check_degree(std::span<const int> r, int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  if (d > static_cast<int>(r.size()))
    throw Error(ErrorKind::DegreeExceedsParts,
                "d = " + std::to_string(d) + " exceeds k = " + std::to_string(r.size()));
  for (int x : r)
    if (x < 1) throw Error(ErrorKind::InvalidArgument, "part sizes must be at least 1");
}

/// Calls f(indices) for every d-subset j_1 < ... < j_d of the parts.
template <typename F>
void for_each_part_choice(std::span<const int> r, int d, F&& f) {
  for_each_subset_of_size(full_mask(static_cast<int>(r.size())), d, [&](Mask chosen) {
    f(members(chosen));
    return true;
  });
}

}  // namespace detail

/// e_d(r_1, ..., r_k).
inline std::int64_t edge_count(std::span<const int> r, int d) {
  detail::check_degree(r, d);
  std::int64_t total = 0;
  detail::for_each_part_choice(r, d, [&](const std::vector<int>& js) {
    std::int64_t prod = 1;
    for (int j : js) prod *= r[j];
    total += prod;
  });
  return total;
}

/// The double sum over part choices of C(r_{j_i}, 2) * (r_{j_1}...r_{j_d}) / r_{j_i}.
inline std::int64_t kpartite_numerator(std::span<const int> r, int d) {
  detail::check_degree(r, d);
  std::int64_t total = 0;
  detail::for_each_part_choice(r, d, [&](const std::vector<int>& js) {
    for (int ji : js) {
      std::int64_t others = 1;
      for (int j : js)
        if (j != ji) others *= r[j];
      total += binomial(r[ji], 2) * others;
    }
  });
  return total;
}

/// Upper bound for a d-uniform complete k-partite clutter:
/// d + numerator / e_d(r).
inline Rational paper_upper_kpartite(std::span<const int> r, int d) {
  return Rational(d) + Rational(kpartite_numerator(r, d), edge_count(r, d));
}

/// Upper bound for the complete d-partite case: d + sum (r_i - 1) / 2.
inline Rational paper_upper_dpartite(std::span<const int> r) {
  if (r.empty()) throw Error(ErrorKind::InvalidArgument, "no part sizes");
  Rational sum(static_cast<std::int64_t>(r.size()));
  for (int x : r) sum += Rational(x - 1, 2);
  return sum;
}

/// Upper bound for an integral d-uniform clutter with a d-partition of sizes
/// r: d + (prod r_i / |E|) * sum (r_i - 1) / 2.
inline Rational paper_upper_integral(std::span<const int> r, std::int64_t edges) {
  if (r.empty()) throw Error(ErrorKind::InvalidArgument, "no part sizes");
  std::int64_t prod = 1;
  Rational half_sum(0);
  for (int x : r) {
    if (x < 1) throw Error(ErrorKind::InvalidArgument, "part sizes must be at least 1");
    prod *= x;
    half_sum += Rational(x - 1, 2);
  }
  if (edges < 1 || edges > prod)
    throw Error(ErrorKind::EdgeCountOutOfRange,
                "|E| = " + std::to_string(edges) + " outside [1, " + std::to_string(prod) + "]");
  return Rational(static_cast<std::int64_t>(r.size())) + Rational(prod, edges) * half_sum;
}

/// (n + 2) / 2 for complete bipartite graphs on n >= 4 vertices.
inline Rational bipartite_upper(int n) {
  if (n < 4) throw Error(ErrorKind::TooFewVertices, "bound requires n >= 4, got " + std::to_string(n));
  return Rational(n + 2, 2);
}

/// Number of (d+1)-subsets of V containing at least one edge, by enumeration.
inline std::int64_t count_support_d_plus_1(const Clutter& c) {
  const auto d = is_uniform(c);
  if (!d) throw Error(ErrorKind::NotUniform, "clutter is not uniform");
  std::int64_t count = 0;
  for_each_subset_of_size(c.vertices(), *d + 1, [&](Mask s) {
    for (Mask e : c.edges())
      if (is_subset(e, s)) {
        ++count;
        break;
      }
    return true;
  });
  return count;
}

struct BoundsReport {
  int d = 0;
  int k = 0;
  std::vector<int> r;
  std::int64_t edge_count = 0;
  std::int64_t paper_numerator = 0;
  Rational paper_upper;
  std::int64_t paper_upper_floor = 0;
  std::optional<Rational> bipartite_upper;
  std::int64_t bruteforce_count = 0;
  Rational corrected_upper;
  int lower = 0;

  /// The enumerated count of (d+1)-sets differs from the closed-form sum.
  bool count_discrepancy() const noexcept { return bruteforce_count != paper_numerator; }
};

/// Aggregates the closed-form bounds and the brute-force count for a complete
/// k-partite clutter given with its partition.
inline BoundsReport bounds_report(const Clutter& c, const VertexPartition& p, int d) {
  if (!is_complete_on(c, p, d))
    throw Error(ErrorKind::NotComplete, "clutter is not the complete " + std::to_string(d) + "-uniform clutter on the partition");
  BoundsReport rep;
  rep.d = d;
  rep.k = static_cast<int>(p.size());
  rep.r = p.sizes();
  rep.edge_count = edge_count(rep.r, d);
  rep.paper_numerator = kpartite_numerator(rep.r, d);
  rep.paper_upper = paper_upper_kpartite(rep.r, d);
  rep.paper_upper_floor = floor_of(rep.paper_upper);
  if (d == 2 && rep.k == 2 && c.vertex_count() >= 4) rep.bipartite_upper = bipartite_upper(c.vertex_count());
  rep.bruteforce_count = count_support_d_plus_1(c);
  rep.corrected_upper = Rational(d) + Rational(rep.bruteforce_count, rep.edge_count);
  rep.lower = d;
  return rep;
}

}  // namespace sdepth
