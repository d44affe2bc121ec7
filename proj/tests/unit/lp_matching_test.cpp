#include <random>

#include <gtest/gtest.h>

#include "graphstab/checks/checks.hpp"
#include "graphstab/error.hpp"
#include "graphstab/lp_matching.hpp"
#include "graphstab/oracle.hpp"
#include "test_support.hpp"

namespace graphstab {
namespace {

using testing::eid;
using testing::fixture;
using testing::make_graph;
using testing::vid;

TEST(Bipartite, EmptyGraph) {
  const auto sol = bipartite_max_weight_matching(BipartiteDuplicate::of(WeightedGraph(3)));
  EXPECT_TRUE(sol.matching.arcs.empty());
  EXPECT_EQ(sol.potentials.total(), 0);
}

TEST(Bipartite, SingleEdge) {
  const WeightedGraph g = make_graph(2, {{0, 1, 7}});
  const auto dup = BipartiteDuplicate::of(g);
  EXPECT_EQ(dup.arcs.size(), 2u);
  const auto sol = bipartite_max_weight_matching(dup);
  // both copies of the edge fit: 2·7 on the duplicate
  EXPECT_EQ(sol.matching.weight, 14);
  EXPECT_EQ(sol.potentials.total(), sol.matching.weight);
  EXPECT_EQ(symmetrize(dup, sol.matching), (EdgeValues{1}));
}

TEST(Bipartite, TrianglePendantDuplicateIsTwiceNuF) {
  const auto dup = BipartiteDuplicate::of(fixture("triangle_pendant").graph);
  const auto sol = bipartite_max_weight_matching(dup);
  EXPECT_EQ(sol.matching.weight, 12);
  EXPECT_EQ(sol.potentials.total(), 12);
}

TEST(Bipartite, PotentialsCertifyOptimality) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const WeightedGraph g = checks::random_graph(rng, 1 + rng() % 9, 0.5, 5);
    const auto dup = BipartiteDuplicate::of(g);
    const auto sol = bipartite_max_weight_matching(dup);
    const auto& p = sol.potentials;
    ASSERT_EQ(p.total(), sol.matching.weight);
    for (std::size_t a = 0; a < dup.arcs.size(); ++a) {
      const auto& arc = dup.arcs[a];
      ASSERT_GE(p.left[arc.left] + p.right[arc.right], arc.weight);
      if (sol.matching.left_mate[arc.left] == arc.right) {
        ASSERT_EQ(p.left[arc.left] + p.right[arc.right], arc.weight);
      }
    }
    for (std::size_t v = 0; v < dup.side_size; ++v) {
      ASSERT_GE(p.left[v], 0);
      ASSERT_GE(p.right[v], 0);
      if (sol.matching.left_mate[v] == kNoVertex) {
        ASSERT_EQ(p.left[v], 0);
      }
      if (sol.matching.right_mate[v] == kNoVertex) {
        ASSERT_EQ(p.right[v], 0);
      }
    }
  }
}

TEST(Symmetrize, UnitTriangleIsAllHalves) {
  const WeightedGraph g = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const auto dup = BipartiteDuplicate::of(g);
  const auto x = symmetrize(dup, bipartite_max_weight_matching(dup).matching);
  EXPECT_EQ(x, EdgeValues(3, half()));
  EXPECT_EQ(g.dot(x), Rational(3, 2));
}

TEST(NormalizeToBasic, IdentityOnBasic) {
  const WeightedGraph g = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_EQ(normalize_to_basic(g, EdgeValues(3, half())).x, EdgeValues(3, half()));
}

TEST(NormalizeToBasic, EvenCyclePicksLowestEdgeAlternation) {
  const WeightedGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  const auto b = normalize_to_basic(g, EdgeValues(4, half()));
  EXPECT_EQ(b.value(g), 2);
  EXPECT_TRUE(b.cycles.empty());
  EXPECT_EQ(b.x[0], 1);
}

TEST(NormalizeToBasic, HalfPath) {
  const WeightedGraph g = make_graph(3, {{0, 1, 3}, {1, 2, 3}});
  const auto b = normalize_to_basic(g, EdgeValues{half(), half()});
  EXPECT_EQ(b.value(g), 3);
  EXPECT_EQ(b.x, (EdgeValues{1, 0}));
}

TEST(NormalizeToBasic, KeepsTheHeavierAlternation) {
  // The two alternations average to the half solution, so the heavier one
  // never loses weight; on a non-optimal input it may gain some.
  const WeightedGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 5}, {2, 3, 1}});
  const auto b = normalize_to_basic(g, EdgeValues{half(), half(), half()});
  EXPECT_EQ(b.x, (EdgeValues{0, 1, 0}));
}

TEST(NormalizeToBasic, PreservesWeightOfOptima) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 150; ++round) {
    const WeightedGraph g = checks::random_graph(rng, 2 + rng() % 8, 0.5, 4);
    const auto dup = BipartiteDuplicate::of(g);
    const EdgeValues x = symmetrize(dup, bipartite_max_weight_matching(dup).matching);
    const auto b = normalize_to_basic(g, x);
    ASSERT_EQ(b.value(g), g.dot(x)) << checks::describe(g);
  }
}

TEST(SolveFractional, TrianglePendant) {
  const WeightedGraph g = fixture("triangle_pendant").graph;
  const auto s = solve_fractional(g);
  EXPECT_EQ(s.x.value(g), 6);
  ASSERT_EQ(s.x.cycle_count(), 1u);
  EXPECT_EQ(testing::names(g, s.x.cycles[0].vertices), (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_EQ(s.y.y, (std::vector<Rational>{2, 2, 2, 0}));
}

TEST(SolveFractional, PentagonChordsAndTwinTriangles) {
  const WeightedGraph g8 = fixture("pentagon_chords").graph;
  EXPECT_EQ(solve_fractional(g8).y.total(), 9);
  const WeightedGraph g6 = fixture("twin_triangles").graph;
  const auto s = solve_fractional(g6);
  EXPECT_EQ(s.x.value(g6), Rational(13, 2));
  EXPECT_TRUE(is_optimal_pair(g6, s.x.x, s.y));
}

TEST(SolveFractional, EmptyAndEdgeless) {
  const auto s = solve_fractional(WeightedGraph(4));
  EXPECT_EQ(s.y.total(), 0);
  EXPECT_TRUE(s.x.matched.empty());
  const auto z = solve_fractional(WeightedGraph());
  EXPECT_EQ(z.y.total(), 0);
}

TEST(SolveFractional, ZeroWeightEdges) {
  const WeightedGraph g = make_graph(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
  const auto s = solve_fractional(g);
  EXPECT_EQ(s.x.value(g), 0);
  EXPECT_TRUE(is_optimal_pair(g, s.x.x, s.y));
}

TEST(SolveFractional, MatchesOracleAndCertifies) {
  for (int max_weight : {5, 1}) {
    const auto suite = checks::random_suite({17, 200, 1, 8, max_weight});
    for (const WeightedGraph& g : suite) {
      const auto s = solve_fractional(g);
      ASSERT_EQ(s.x.value(g), exact_nu_f(g)) << checks::describe(g);
      ASSERT_EQ(s.x.value(g), s.y.total());
      ASSERT_TRUE(is_optimal_pair(g, s.x.x, s.y)) << checks::describe(g);
      ASSERT_EQ(decompose(g, s.x.x), s.x);
    }
  }
}

TEST(SolveFractional, RejectsForeignPairs) {
  const WeightedGraph g = fixture("triangle_pendant").graph;
  const auto s = solve_fractional(g);
  FractionalVertexCover loose = s.y;
  loose.y[vid(g, "s")] = 1;
  EXPECT_FALSE(is_optimal_pair(g, s.x.x, loose));
  EXPECT_THROW(require_optimal_pair(g, s.x.x, loose, "test"), Error);
  (void)eid;
}

}  // namespace
}  // namespace graphstab
