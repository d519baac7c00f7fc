#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sdepth/bounds.hpp"
#include "sdepth/clutter.hpp"
#include "sdepth/poset.hpp"

namespace sdepth {

/// Size vectors 2 <= r_1 <= ... <= r_k with r_1 + ... + r_k <= max_n.
inline std::vector<std::vector<int>> family_size_vectors(int k, int max_n, int min_part = 2) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int lo, int left) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    const int remaining = k - static_cast<int>(cur.size());
    for (int x = lo; x * remaining <= left; ++x) {
      cur.push_back(x);
      rec(x, left - x);
      cur.pop_back();
    }
  };
  rec(min_part, max_n);
  return out;
}

enum class Verdict { Pass, Flag, Undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Flag: return "FLAG";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

struct FamilyRow {
  BoundsReport report;
  /// Absent when the node budget ran out.
  std::optional<int> exact;
  std::optional<SdepthResult> result;
  Verdict verdict = Verdict::Pass;
};

struct FamilyOptions {
  int d = 2;
  int k = 2;
  int max_n = 9;
  /// Instances evaluated concurrently; each search is single-threaded.
  int threads = 1;
  std::uint64_t max_nodes = 0;
};

/// Exact sdepth against the closed-form bound for every complete k-partite
/// d-uniform instance in the family. Rows come back in size-vector order
/// regardless of the thread count. FLAG marks exact > floor(bound).
inline std::vector<FamilyRow> sweep_family(const FamilyOptions& opts) {
  if (opts.d < 1 || opts.k < opts.d)
    throw Error(ErrorKind::InvalidArgument, "need 1 <= d <= k");
  if (opts.max_n > kMaxSdepthVertices)
    throw Error(ErrorKind::CapExceeded, "max n " + std::to_string(opts.max_n) + " exceeds " + std::to_string(kMaxSdepthVertices));
  if (opts.threads < 1) throw Error(ErrorKind::InvalidArgument, "thread count must be at least 1");
  const auto sizes = family_size_vectors(opts.k, opts.max_n);
  std::vector<FamilyRow> rows(sizes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < sizes.size(); i = next.fetch_add(1)) {
      const auto inst = complete_kpartite(opts.d, sizes[i]);
      FamilyRow row{bounds_report(inst.clutter, inst.partition, opts.d), std::nullopt, std::nullopt, Verdict::Pass};
      try {
        auto res = exact_sdepth(build_poset(inst.clutter), {.threads = 1, .max_nodes = opts.max_nodes});
        row.exact = res.value;
        row.result = std::move(res);
        row.verdict = *row.exact > row.report.paper_upper_floor ? Verdict::Flag : Verdict::Pass;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchBudgetExceeded) throw;
        row.verdict = Verdict::Undecided;
      }
      rows[i] = std::move(row);
    }
  };
  const int workers = std::clamp<int>(opts.threads, 1, std::max<int>(1, static_cast<int>(sizes.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  return rows;
}

inline constexpr const char* kFamilyCsvHeader = "d,k,r,|E|,lower,paper_upper,paper_upper_floor,bruteforce_count,exact_sdepth,verdict";

inline std::string format_rational(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::vector<std::string> family_fields(const FamilyRow& row) {
  std::string r;
  for (std::size_t i = 0; i < row.report.r.size(); ++i) r += (i ? ";" : "") + std::to_string(row.report.r[i]);
  return {std::to_string(row.report.d),
          std::to_string(row.report.k),
          r,
          std::to_string(row.report.edge_count),
          std::to_string(row.report.lower),
          format_rational(row.report.paper_upper),
          std::to_string(row.report.paper_upper_floor),
          std::to_string(row.report.bruteforce_count),
          row.exact ? std::to_string(*row.exact) : std::string("?"),
          to_string(row.verdict)};
}

inline std::string family_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream out;
  out << kFamilyCsvHeader << '\n';
  for (const auto& row : rows) {
    const auto fields = family_fields(row);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace sdepth
