#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symforge/autgroup.hpp"
#include "symforge/constructions.hpp"
#include "symforge/vecspace.hpp"

namespace symforge {
namespace {

std::vector<std::vector<Vertex>> elements_of(const AutGroup& group) {
  std::vector<std::vector<Vertex>> out;
  for (auto g : group.elements()) out.emplace_back(g.begin(), g.end());
  return out;
}

void expect_matches_oracle(const Graph& g) {
  auto expected = oracle::automorphisms(g);  // lexicographic by construction
  AutGroup group = automorphism_group(g);
  EXPECT_EQ(elements_of(group), expected);
}

TEST(PermTest, Basics) {
  Perm p({1, 2, 0});
  EXPECT_EQ(p(0), 1U);
  EXPECT_FALSE(p.is_identity());
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_EQ(compose(p, p)(0), 2U);
  EXPECT_THROW(Perm({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Perm({0, 3}), std::invalid_argument);
}

TEST(AutGroupTest, OrdersOfNamedGraphs) {
  EXPECT_EQ(automorphism_group(cycle_graph(5)).order(), 10U);
  EXPECT_EQ(automorphism_group(star_graph(3)).order(), 6U);
  EXPECT_EQ(automorphism_group(complete_graph(4)).order(), 24U);
  EXPECT_EQ(automorphism_group(asymmetric_tree()).order(), 1U);
  EXPECT_EQ(automorphism_group(build_nzc_graph(Space(3, 2))).order(), 6U);
}

TEST(AutGroupTest, MatchesBruteForceOnCorpus) {
  for (std::size_t n = 3; n <= 8; ++n) expect_matches_oracle(cycle_graph(n));
  for (std::size_t n = 2; n <= 8; ++n) expect_matches_oracle(path_graph(n));
  for (std::size_t k = 2; k <= 5; ++k) expect_matches_oracle(star_graph(k));
  expect_matches_oracle(asymmetric_tree());
  expect_matches_oracle(build_nzc_graph(Space(3, 2)));
  expect_matches_oracle(build_nzc_graph(Space(2, 3)));
  expect_matches_oracle(build_family_graph(3));
}

TEST(AutGroupTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 7;
    std::bernoulli_distribution edge(0.2 + 0.1 * (trial % 6));
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (edge(rng)) g.add_edge(u, v);
    expect_matches_oracle(g);
  }
}

TEST(AutGroupTest, EmptyAndEdgelessGraphs) {
  EXPECT_EQ(automorphism_group(Graph(0)).order(), 1U);
  EXPECT_EQ(automorphism_group(Graph(5)).order(), 120U);
}

TEST(AutGroupTest, IdentityFirstAndClosed) {
  AutGroup group = automorphism_group(build_nzc_graph(Space(4, 2)));
  ASSERT_EQ(group.order(), 24U);
  EXPECT_TRUE(group.perm(0).is_identity());
  for (std::size_t i = 0; i < group.order(); ++i)
    for (std::size_t j = 0; j < group.order(); ++j)
      EXPECT_TRUE(group.contains(compose(group.perm(i), group.perm(j)).images()));
}

TEST(AutGroupTest, NzcOrderIsFactorial) {
  std::size_t f = 2;
  for (int n = 3; n <= 5; ++n) {
    f *= static_cast<std::size_t>(n);
    EXPECT_EQ(automorphism_group(build_nzc_graph(Space(n, 2))).order(), f) << n;
  }
}

TEST(AutGroupTest, BasisPermutationsLiftToAutomorphisms) {
  Space s(4, 2);
  Graph g = build_nzc_graph(s);
  AutGroup group = automorphism_group(g);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    Perm lifted = lift_basis_perm(s, perm);
    EXPECT_TRUE(is_automorphism(g, lifted));
    EXPECT_TRUE(group.contains(lifted.images()));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(AutGroupTest, BasisSwapFixedPoints) {
  Space s(3, 2);
  Perm swap = lift_basis_perm(s, {0, 2, 1});
  std::vector<std::string> fixed;
  for (Vertex v : to_vector(fixed_points(swap))) fixed.push_back(enumerate_vectors(s)[v].to_string());
  EXPECT_EQ(fixed, (std::vector<std::string>{"011", "100", "111"}));
}

TEST(AutGroupTest, ScaledBasisMapsOverOddField) {
  Space s(2, 3);
  Graph g = build_nzc_graph(s);
  EXPECT_TRUE(is_automorphism(g, lift_basis_map(s, {1, 0}, {2, 1})));
}

TEST(AutGroupTest, GroupCapRaises) {
  Limits tight;
  tight.max_group_order = 100;
  EXPECT_THROW(automorphism_group(complete_graph(6), tight), ResourceError);
  EXPECT_THROW(automorphism_group(build_nzc_graph(Space(3, 3))), ResourceError);
  Limits small;
  small.max_order = 10;
  EXPECT_THROW(automorphism_group(cycle_graph(11), small), ResourceError);
}

TEST(AutGroupTest, IsAutomorphismRejectsLengthMismatch) {
  std::vector<Vertex> images{0, 1};
  EXPECT_THROW(is_automorphism(cycle_graph(3), images), std::invalid_argument);
}

TEST(OrbitTest, OrbitsAndStabilizers) {
  AutGroup group = automorphism_group(path_graph(5));
  EXPECT_EQ(orbits(group), (std::vector<std::vector<Vertex>>{{0, 4}, {1, 3}, {2}}));
  EXPECT_EQ(orbit_ids(group), (std::vector<std::uint32_t>{0, 1, 2, 1, 0}));
  EXPECT_EQ(stabilizer(group, Vertex{0}).order(), 1U);
  EXPECT_EQ(stabilizer(group, Vertex{2}).order(), 2U);
  EXPECT_EQ(orbit(group, 1).members.count(), 2U);
}

TEST(OrbitTest, StabilizerOrbitsMatchOracle) {
  Graph g = cycle_graph(6);
  AutGroup group = automorphism_group(g);
  auto all = oracle::automorphisms(g);
  for (Vertex w = 0; w < 6; ++w) {
    auto stab = oracle::stabilizer(all, {w});
    for (Vertex u = 0; u < 6; ++u) {
      auto expected = oracle::orbit(stab, u);
      auto got = to_vector(orbit_under_stabilizer(group, w, u));
      EXPECT_EQ(std::vector<Vertex>(expected.begin(), expected.end()), got);
    }
  }
}

TEST(RefinementTest, EquitableAndIsomorphismInvariant) {
  Graph g = path_graph(5);
  auto colours = equitable_refinement(g, std::vector<std::uint32_t>(5, 0));
  EXPECT_EQ(colours[0], colours[4]);
  EXPECT_EQ(colours[1], colours[3]);
  EXPECT_NE(colours[0], colours[2]);
  // Equitable: same-coloured vertices see the same number of each colour.
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v) {
      if (colours[u] != colours[v]) continue;
      for (std::uint32_t c = 0; c < 5; ++c) {
        auto count = [&](Vertex x) {
          std::size_t k = 0;
          for (Vertex y = 0; y < 5; ++y)
            if (g.adjacent(x, y) && colours[y] == c) ++k;
          return k;
        };
        EXPECT_EQ(count(u), count(v));
      }
    }
}

TEST(PointsTest, FixedAndMoved) {
  std::vector<Vertex> p{0, 2, 1, 3};
  EXPECT_EQ(to_vector(fixed_points(p)), (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(to_vector(moved_points(p)), (std::vector<Vertex>{1, 2}));
}

}  // namespace
}  // namespace symforge
