#pragma once

// JSON interchange. All vertex lists are 1-based and sorted.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdepth/bounds.hpp"
#include "sdepth/clutter.hpp"
#include "sdepth/decomposition.hpp"
#include "sdepth/error.hpp"
#include "sdepth/poset.hpp"

namespace sdepth::io {

using nlohmann::json;

inline json set_to_json(Mask m) { return labels(m); }

inline Mask set_from_json(const json& j, int n) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "vertex list must be an array");
  Mask m = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "vertex labels must be integers");
    const auto label = v.get<long long>();
    if (label < 1 || label > n)
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(label) + " outside [1," + std::to_string(n) + "]");
    m |= bit(static_cast<int>(label - 1));
  }
  return m;
}

/// Lexicographic order on sorted 1-based label lists.
inline bool lex_less(Mask a, Mask b) { return labels(a) < labels(b); }

inline json to_json(const Clutter& c) {
  std::vector<Mask> edges(c.edges().begin(), c.edges().end());
  std::sort(edges.begin(), edges.end(), lex_less);
  json out;
  out["n"] = c.vertex_count();
  out["edges"] = json::array();
  for (Mask e : edges) out["edges"].push_back(set_to_json(e));
  return out;
}

inline Clutter clutter_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorKind::Parse, "clutter JSON needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw Error(ErrorKind::Parse, "\"n\" must be an integer");
  const auto n = j["n"].get<long long>();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "\"n\" must be at least 1");
  if (n > kMaxVertices) throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " exceeds cap");
  if (!j["edges"].is_array()) throw Error(ErrorKind::Parse, "\"edges\" must be an array");
  std::vector<Mask> edges;
  for (const auto& e : j["edges"]) edges.push_back(set_from_json(e, static_cast<int>(n)));
  return Clutter(static_cast<int>(n), std::move(edges));
}

inline Clutter parse_clutter(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return clutter_from_json(j);
}

inline json to_json(const VertexPartition& p) {
  json out;
  out["blocks"] = json::array();
  for (Mask b : p.blocks) out["blocks"].push_back(set_to_json(b));
  out["sizes"] = p.sizes();
  return out;
}

inline VertexPartition partition_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("blocks")) throw Error(ErrorKind::Parse, "partition JSON needs \"blocks\"");
  VertexPartition p;
  for (const auto& b : j["blocks"]) p.blocks.push_back(set_from_json(b, n));
  return p;
}

/// Generator output: the clutter plus its partition metadata.
inline json to_json(const KPartiteInstance& inst) {
  json out = to_json(inst.clutter);
  out["d"] = inst.degree;
  out["partition"] = to_json(inst.partition);
  out["partition"]["permutation"] = inst.permutation;
  return out;
}

inline json to_json(const IntervalPartition& part, int k) {
  json out;
  out["k"] = k;
  out["intervals"] = json::array();
  for (const auto& iv : part.intervals)
    out["intervals"].push_back({{"bottom", set_to_json(iv.bottom)}, {"top", set_to_json(iv.top)}});
  return out;
}

/// Returns the certificate and its declared level k.
inline std::pair<IntervalPartition, int> certificate_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("k") || !j.contains("intervals"))
    throw Error(ErrorKind::Parse, "certificate JSON needs \"k\" and \"intervals\"");
  IntervalPartition part;
  for (const auto& iv : j["intervals"]) {
    if (!iv.contains("bottom") || !iv.contains("top")) throw Error(ErrorKind::Parse, "interval needs bottom and top");
    part.intervals.push_back({set_from_json(iv["bottom"], n), set_from_json(iv["top"], n)});
  }
  return {std::move(part), j["k"].get<int>()};
}

inline json to_json(const SdepthResult& r) {
  json out;
  out["value"] = r.value;
  out["refutation_level"] = r.refutation_level ? json(*r.refutation_level) : json(nullptr);
  out["certificate"] = to_json(r.certificate, r.value);
  return out;
}

inline json to_json(const Rational& q) { return {{"num", q.numerator()}, {"den", q.denominator()}}; }

inline Rational rational_from_json(const json& j) { return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()); }

inline json to_json(const BoundsReport& b) {
  json out;
  out["d"] = b.d;
  out["k"] = b.k;
  out["r"] = b.r;
  out["edge_count"] = b.edge_count;
  out["lower"] = b.lower;
  out["paper_numerator"] = b.paper_numerator;
  out["paper_upper"] = to_json(b.paper_upper);
  out["paper_upper_floor"] = b.paper_upper_floor;
  out["bipartite_upper"] = b.bipartite_upper ? to_json(*b.bipartite_upper) : json(nullptr);
  out["bruteforce_count"] = b.bruteforce_count;
  out["corrected_upper"] = to_json(b.corrected_upper);
  out["count_discrepancy"] = b.count_discrepancy();
  return out;
}

inline json to_json(const DPartition& p) {
  json out;
  out["parts"] = json::array();
  for (Mask m : p.parts) out["parts"].push_back(set_to_json(m));
  return out;
}

inline DPartition dpartition_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("parts")) throw Error(ErrorKind::Parse, "d-partition JSON needs \"parts\"");
  DPartition p;
  for (const auto& m : j["parts"]) p.parts.push_back(set_from_json(m, n));
  return p;
}

}  // namespace sdepth::io
