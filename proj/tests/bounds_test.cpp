#include <gtest/gtest.h>

#include <set>

#include "sdepth/bounds.hpp"
#include "support/instances.hpp"

namespace sdepth {
namespace {

using R = Rational;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

TEST(Bounds, EdgeCount) {
  EXPECT_EQ(edge_count(v({2, 2}), 2), 4);
  EXPECT_EQ(edge_count(v({2, 2, 2}), 2), 12);
  EXPECT_EQ(edge_count(v({2, 3, 4}), 3), 24);
  EXPECT_EQ(kind_of([] { edge_count(v({2, 2}), 3); }), ErrorKind::DegreeExceedsParts);
}

TEST(Bounds, KPartiteUpper) {
  EXPECT_EQ(paper_upper_kpartite(v({2, 2, 2}), 2), R(3));
  EXPECT_EQ(kpartite_numerator(v({2, 2, 2}), 2), 12);
  EXPECT_EQ(paper_upper_kpartite(v({2, 2}), 2), R(3));
  EXPECT_EQ(paper_upper_kpartite(v({3, 4}), 2), R(9, 2));
  EXPECT_EQ(kind_of([] { paper_upper_kpartite(v({3}), 2); }), ErrorKind::DegreeExceedsParts);
}

TEST(Bounds, DPartiteUpper) {
  EXPECT_EQ(paper_upper_dpartite(v({2, 2, 2})), R(9, 2));
  EXPECT_EQ(paper_upper_dpartite(v({2, 2})), R(3));
  EXPECT_EQ(paper_upper_dpartite(v({1, 1})), R(2));
}

TEST(Bounds, IntegralUpper) {
  EXPECT_EQ(paper_upper_integral(v({2, 2}), 4), R(3));
  EXPECT_EQ(paper_upper_integral(v({2, 2}), 2), R(4));
  EXPECT_EQ(paper_upper_integral(v({1, 1}), 1), R(2));
  EXPECT_EQ(kind_of([] { paper_upper_integral(v({2, 2}), 5); }), ErrorKind::EdgeCountOutOfRange);
  EXPECT_EQ(kind_of([] { paper_upper_integral(v({2, 2}), 0); }), ErrorKind::EdgeCountOutOfRange);
}

TEST(Bounds, BipartiteUpper) {
  EXPECT_EQ(bipartite_upper(4), R(3));
  EXPECT_EQ(bipartite_upper(7), R(9, 2));
  EXPECT_EQ(kind_of([] { bipartite_upper(3); }), ErrorKind::TooFewVertices);
}

TEST(Bounds, FloorOfRationals) {
  EXPECT_EQ(floor_of(R(9, 2)), 4);
  EXPECT_EQ(floor_of(R(3)), 3);
  EXPECT_EQ(floor_of(R(-1, 2)), -1);
  EXPECT_EQ(floor_of(R(2) + R(20, 12)), 3);
}

TEST(CountSupport, Examples) {
  EXPECT_EQ(count_support_d_plus_1(complete_kpartite(2, {2, 2}).clutter), 4);
  EXPECT_EQ(count_support_d_plus_1(complete_kpartite(2, {2, 2, 2}).clutter), 20);
  EXPECT_EQ(count_support_d_plus_1(complete_kpartite(3, {2, 2, 2}).clutter), 12);
  EXPECT_EQ(kind_of([] { count_support_d_plus_1(make_clutter(4, {{1, 2}, {1, 3}, {4}})); }), ErrorKind::NotUniform);
}

// Independent route: collect {e ∪ {i} : e ∈ E, i ∉ e} as a set.
std::int64_t products_with_extra_variable(const Clutter& c) {
  std::set<Mask> seen;
  for (Mask e : c.edges())
    for (int i = 0; i < c.vertex_count(); ++i)
      if ((e & bit(i)) == 0) seen.insert(e | bit(i));
  return static_cast<std::int64_t>(seen.size());
}

TEST(CountSupport, AgreesWithProductsOfEdgesAndVariables) {
  for (int k = 2; k <= 4; ++k)
    for (const auto& r : testing::size_vectors(k, 9))
      for (int d = 1; d <= k; ++d) {
        const auto inst = complete_kpartite(d, r);
        EXPECT_EQ(count_support_d_plus_1(inst.clutter), products_with_extra_variable(inst.clutter));
      }
}

TEST(CountSupport, ClosedFormWhenPartsEqualDegree) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& r : testing::size_vectors(d, 10)) {
      std::int64_t prod = 1;
      for (int x : r) prod *= x;
      std::int64_t formula = 0;
      for (int x : r) formula += binomial(x, 2) * (prod / x);
      EXPECT_EQ(count_support_d_plus_1(complete_kpartite(d, r).clutter), formula);
      EXPECT_EQ(kpartite_numerator(r, d), formula);
    }
}

TEST(Bounds, DPartiteIsKPartiteWithKEqualD) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& r : testing::size_vectors(d, 12)) EXPECT_EQ(paper_upper_dpartite(r), paper_upper_kpartite(r, d));
}

TEST(Bounds, BipartiteIdentityForEverySplit) {
  for (int n = 4; n <= 24; ++n)
    for (int a = 1; a < n; ++a) EXPECT_EQ(bipartite_upper(n), paper_upper_dpartite(v({a, n - a})));
}

TEST(Bounds, IntegralReducesToDPartiteWhenComplete) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& r : testing::size_vectors(d, 10)) EXPECT_EQ(paper_upper_integral(r, edge_count(r, d)), paper_upper_dpartite(r));
}

TEST(Report, Examples) {
  const auto k22 = complete_kpartite(2, {2, 2});
  const auto a = bounds_report(k22.clutter, k22.partition, 2);
  EXPECT_EQ(a.lower, 2);
  EXPECT_EQ(a.paper_upper, R(3));
  EXPECT_EQ(a.bipartite_upper, R(3));
  EXPECT_EQ(a.bruteforce_count, 4);
  EXPECT_FALSE(a.count_discrepancy());

  const auto tri = complete_kpartite(2, {2, 2, 2});
  const auto b = bounds_report(tri.clutter, tri.partition, 2);
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.edge_count, 12);
  EXPECT_EQ(b.paper_upper, R(3));
  EXPECT_EQ(b.paper_upper_floor, 3);
  EXPECT_EQ(b.paper_numerator, 12);
  EXPECT_EQ(b.bruteforce_count, 20);
  EXPECT_EQ(b.corrected_upper, R(2) + R(20, 12));
  EXPECT_EQ(b.bipartite_upper, std::nullopt);
  EXPECT_TRUE(b.count_discrepancy());

  const auto cube = complete_kpartite(3, {2, 2, 2});
  const auto c = bounds_report(cube.clutter, cube.partition, 3);
  EXPECT_EQ(c.lower, 3);
  EXPECT_EQ(c.paper_upper, R(9, 2));
  EXPECT_EQ(c.paper_upper_floor, 4);
  EXPECT_LE(R(c.lower), c.paper_upper);
}

TEST(Report, RejectsIncompleteClutter) {
  const auto matching = make_clutter(4, {{1, 3}, {2, 4}});
  const VertexPartition p{{bit(0) | bit(1), bit(2) | bit(3)}};
  EXPECT_EQ(kind_of([&] { bounds_report(matching, p, 2); }), ErrorKind::NotComplete);
}

}  // namespace
}  // namespace sdepth
