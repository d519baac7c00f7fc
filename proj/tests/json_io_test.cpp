#include <gtest/gtest.h>

#include "sdepth/json_io.hpp"
#include "support/instances.hpp"

namespace sdepth {
namespace {

using io::json;

TEST(ClutterJson, CanonicalLayout) {
  const auto c = make_clutter(4, {{2, 4}, {1, 3}, {2, 3}, {1, 4}});
  EXPECT_EQ(io::to_json(c).dump(), R"({"edges":[[1,3],[1,4],[2,3],[2,4]],"n":4})");
}

TEST(ClutterJson, EdgesSortedLexicographically) {
  // Mask order would put {3} (mask 4) before {1,4} (mask 9); lexicographic
  // order on label lists does the opposite.
  const auto c = make_clutter(4, {{3}, {1, 4}, {1, 2}});
  EXPECT_EQ(io::to_json(c)["edges"].dump(), "[[1,2],[1,4],[3]]");
}

TEST(ClutterJson, RoundTripOnRandomClutters) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& family : testing::random_antichains(n, 40, n)) {
      Mask support = 0;
      for (Mask e : family) support |= e;
      if (support != full_mask(n)) continue;
      const Clutter c(n, family);
      EXPECT_EQ(io::parse_clutter(io::to_json(c).dump()), c);
    }
}

TEST(ClutterJson, Errors) {
  auto kind = [](const std::string& text) {
    try {
      io::parse_clutter(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind(R"({"n":2,)"), ErrorKind::Parse);
  EXPECT_EQ(kind(R"({"edges":[[1]]})"), ErrorKind::Parse);
  EXPECT_EQ(kind(R"({"n":2,"edges":[[1,3]]})"), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind(R"({"n":2,"edges":[[0,1]]})"), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind(R"({"n":2,"edges":[["a"]]})"), ErrorKind::Parse);
  EXPECT_EQ(kind(R"({"n":3,"edges":[[1,2],[1,2,3]]})"), ErrorKind::ContainedEdge);
  EXPECT_EQ(kind(R"({"n":30,"edges":[[1]]})"), ErrorKind::CapExceeded);
}

TEST(CertificateJson, RoundTripKeepsValidity) {
  const auto inst = complete_kpartite(2, {2, 3});
  const auto poset = build_poset(inst.clutter);
  const auto res = exact_sdepth(poset);
  const json j = io::to_json(res);
  EXPECT_EQ(j["value"], res.value);
  EXPECT_EQ(j["certificate"]["k"], res.value);
  const auto [part, k] = io::certificate_from_json(json::parse(j.dump())["certificate"], 5);
  EXPECT_EQ(part, res.certificate);
  EXPECT_TRUE(validate_partition(poset, part, k));
}

TEST(CertificateJson, Layout) {
  const IntervalPartition part{{{bit(0), bit(0) | bit(1)}, {bit(1), bit(1)}}};
  EXPECT_EQ(io::to_json(part, 1).dump(), R"({"intervals":[{"bottom":[1],"top":[1,2]},{"bottom":[2],"top":[2]}],"k":1})");
}

TEST(ReportJson, RationalsAsNumDen) {
  const auto inst = complete_kpartite(2, {3, 4});
  const json j = io::to_json(bounds_report(inst.clutter, inst.partition, 2));
  EXPECT_EQ(j["paper_upper"], (json{{"num", 9}, {"den", 2}}));
  EXPECT_EQ(io::rational_from_json(j["bipartite_upper"]), Rational(9, 2));
  EXPECT_EQ(j["paper_upper_floor"], 4);
}

TEST(DPartitionJson, RoundTrip) {
  const DPartition p{{bit(0) | bit(1), bit(2) | bit(3)}};
  const json j = io::to_json(p);
  EXPECT_EQ(j.dump(), R"({"parts":[[1,2],[3,4]]})");
  EXPECT_EQ(io::dpartition_from_json(j, 4), p);
}

TEST(GeneratorJson, CarriesPartition) {
  const auto inst = complete_kpartite(2, {3, 2});
  const json j = io::to_json(inst);
  EXPECT_EQ(j["partition"]["sizes"], (json{2, 3}));
  EXPECT_EQ(j["partition"]["permutation"], (json{1, 0}));
  EXPECT_EQ(io::partition_from_json(j["partition"], 5), inst.partition);
  EXPECT_EQ(io::clutter_from_json(j), inst.clutter);
}

}  // namespace
}  // namespace sdepth
