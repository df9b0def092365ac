#include <gtest/gtest.h>

#include <bit>

#include "symforge/constructions.hpp"
#include "symforge/fixing.hpp"

namespace symforge {
namespace {

TEST(FamilyTest, StructureK3) {
  Graph g = build_family_graph(3);
  // 2^3 - 2 = 6 leaves plus w_1, w_2: two copies of K_{1,3}.
  EXPECT_EQ(g.order(), 8U);
  EXPECT_EQ(g.edge_count(), 6U);
  EXPECT_EQ(g.degree(family_w(3, 1)), 3U);
  EXPECT_EQ(g.degree(family_w(3, 2)), 3U);
  EXPECT_EQ(g.components().size(), 2U);
}

TEST(FamilyTest, EdgesFollowBinaryWeight) {
  for (int k = 3; k <= 6; ++k) {
    Graph g = build_family_graph(k);
    EXPECT_EQ(g.order(), (std::size_t{1} << k) + k - 3);
    for (std::uint32_t j = 1; j <= (1U << k) - 2; ++j)
      for (int i = 1; i <= k - 1; ++i)
        EXPECT_EQ(g.adjacent(family_u(k, j), family_w(k, i)), std::popcount(j) == i);
  }
}

TEST(FamilyTest, RejectsSmallK) {
  EXPECT_THROW(build_family_graph(2), std::invalid_argument);
}

TEST(FamilyTest, ParametersForGap) {
  EXPECT_EQ(FamilyParams::for_gap(3).k, 3);
  EXPECT_EQ(FamilyParams::for_gap(5).k, 4);
  EXPECT_EQ(FamilyParams::for_gap(1).k, 3);
  for (int gap = 1; gap <= 20; ++gap) EXPECT_GE(FamilyParams::for_gap(gap).gap(), gap);
  EXPECT_EQ(predicted_fix(3), 4);
  EXPECT_EQ(predicted_fxd(3), 7);
  EXPECT_EQ(predicted_fix(4), 11);
  EXPECT_EQ(predicted_fxd(4), 16);
}

TEST(FamilyTest, SolversAgreeWithPredictionK3) {
  AutGroup group = automorphism_group(build_family_graph(3));
  EXPECT_EQ(group.order(), 72U);
  EXPECT_EQ(static_cast<std::int64_t>(fixing_number(group).value), predicted_fix(3));
  EXPECT_EQ(static_cast<std::int64_t>(fixed_number(group).value), predicted_fxd(3));
}

}  // namespace
}  // namespace symforge
