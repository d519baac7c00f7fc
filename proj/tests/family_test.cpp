#include <gtest/gtest.h>

#include "sdepth/family.hpp"

namespace sdepth {
namespace {

TEST(Family, SizeVectors) {
  EXPECT_EQ(family_size_vectors(2, 9).size(), 12u);
  EXPECT_EQ(family_size_vectors(3, 7), (std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 3}}));
  EXPECT_TRUE(family_size_vectors(3, 5).empty());
}

TEST(Family, BipartiteSweepPasses) {
  const auto rows = sweep_family({.d = 2, .k = 2, .max_n = 9});
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.exact);
    EXPECT_EQ(row.verdict, Verdict::Pass);
    EXPECT_LE(Rational(*row.exact), *row.report.bipartite_upper);
  }
}

TEST(Family, TripartiteGraphsFlagTheUndercount) {
  const auto rows = sweep_family({.d = 2, .k = 3, .max_n = 7});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].verdict, Verdict::Pass);
  EXPECT_EQ(rows[0].report.paper_upper, Rational(3));
  // K_{2,2,3}: the certificate at level 4 beats floor(2 + 54/16) = 3.
  EXPECT_EQ(rows[1].report.r, (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(rows[1].exact, 4);
  EXPECT_EQ(rows[1].report.paper_upper_floor, 3);
  EXPECT_EQ(rows[1].verdict, Verdict::Flag);
  EXPECT_TRUE(rows[1].report.count_discrepancy());
  EXPECT_GE(floor_of(rows[1].report.corrected_upper), 4);
  const auto p = build_poset(complete_kpartite(2, {2, 2, 3}).clutter);
  EXPECT_TRUE(validate_partition(p, rows[1].result->certificate, 4));
}

TEST(Family, CsvIsStableAcrossThreadCounts) {
  const auto one = family_csv(sweep_family({.d = 2, .k = 2, .max_n = 8, .threads = 1}));
  const auto four = family_csv(sweep_family({.d = 2, .k = 2, .max_n = 8, .threads = 4}));
  EXPECT_EQ(one, four);
  EXPECT_EQ(one.substr(0, one.find('\n')), kFamilyCsvHeader);
  EXPECT_NE(one.find("\n2,2,2;2,4,2,3,3,4,3,PASS\n"), std::string::npos);
}

TEST(Family, BadParameters) {
  EXPECT_THROW(sweep_family({.d = 3, .k = 2, .max_n = 9}), Error);
  EXPECT_THROW(sweep_family({.d = 2, .k = 2, .max_n = 21}), Error);
  EXPECT_THROW(sweep_family({.d = 2, .k = 2, .max_n = 9, .threads = 0}), Error);
}

TEST(Family, BudgetMarksRowsUndecided) {
  const auto rows = sweep_family({.d = 3, .k = 3, .max_n = 9, .max_nodes = 50});
  bool undecided = false;
  for (const auto& row : rows) undecided |= row.verdict == Verdict::Undecided;
  EXPECT_TRUE(undecided);
}

}  // namespace
}  // namespace sdepth
