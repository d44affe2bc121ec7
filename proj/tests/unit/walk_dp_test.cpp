#include <random>

#include <gtest/gtest.h>

#include "graphstab/checks/checks.hpp"
#include "graphstab/error.hpp"
#include "graphstab/oracle.hpp"
#include "graphstab/walk_dp.hpp"
#include "test_support.hpp"

namespace graphstab {
namespace {

using testing::make_graph;
using testing::matching_of;

WeightedGraph triangle() { return make_graph(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}}); }

TEST(OptimalWalks, EmptyWalkOnly) {
  const WeightedGraph g = triangle();
  const auto t = optimal_walks(g, Matching(3), 0, 0);
  EXPECT_EQ(t.final_y1(0), Rational(0));
  EXPECT_EQ(t.final_y2(0), Rational(0));
  EXPECT_FALSE(t.final_y1(1).has_value());
  EXPECT_FALSE(t.final_y2(2).has_value());
}

TEST(OptimalWalks, CoveredSourceStartsOnTableOne) {
  const WeightedGraph g = triangle();
  const auto t = optimal_walks(g, matching_of(g, {{0, 1}}), 0, 0);
  EXPECT_EQ(t.final_y1(0), Rational(0));
  EXPECT_FALSE(t.final_y2(0).has_value());
}

TEST(OptimalWalks, SingleEdge) {
  const WeightedGraph g = make_graph(2, {{0, 1, 5}});
  const auto t = optimal_walks(g, Matching(2), 0, 1);
  EXPECT_EQ(t.final_y1(1), Rational(5));
  EXPECT_EQ(reconstruct_walk(t, 1, WalkTable::Unmatched), (AlternatingWalk{{0, 1}}));
}

TEST(OptimalWalks, TriangleFlower) {
  const WeightedGraph g = triangle();
  const Matching m = matching_of(g, {{1, 2}});
  const auto t = optimal_walks(g, m, 0, 3);
  EXPECT_EQ(t.final_y1(0), Rational(2));
  const auto w = reconstruct_walk(t, 0, WalkTable::Unmatched);
  EXPECT_TRUE(w == (AlternatingWalk{{0, 1, 2, 0}}) || w == (AlternatingWalk{{0, 2, 1, 0}}));
  EXPECT_EQ(walk_value(g, m, w), 2);
  EXPECT_EQ(reconstruct_walk(optimal_walks(g, m, 0, 0), 0, WalkTable::Unmatched),
            (AlternatingWalk{{0}}));
}

TEST(OptimalWalks, SynchronousUpdates) {
  // In-place updates would reach the far end of the path in one round.
  const WeightedGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const Matching m = matching_of(g, {{1, 2}});
  const auto t = optimal_walks(g, m, 0, 1);
  EXPECT_TRUE(t.final_y1(1).has_value());
  EXPECT_FALSE(t.final_y2(2).has_value());
  EXPECT_FALSE(t.final_y1(3).has_value());
}

TEST(ReconstructWalk, MinusInfinityIsAnError) {
  const WeightedGraph g = make_graph(3, {{0, 1, 1}});
  const auto t = optimal_walks(g, Matching(3), 0, 4);
  try {
    reconstruct_walk(t, 2, WalkTable::Unmatched);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EntryIsMinusInfinity);
  }
}

TEST(OptimalWalks, TablesAreMonotoneAndReconstructible) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 150; ++round) {
    const WeightedGraph g = checks::random_graph(rng, 2 + rng() % 6, 0.5, 4);
    const Matching m = checks::random_matching(rng, g);
    const std::size_t k = 1 + rng() % 7;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      const auto t = optimal_walks(g, m, s, k);
      for (std::size_t i = 1; i <= k; ++i) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          for (WalkTable tab : {WalkTable::Unmatched, WalkTable::Matched}) {
            const auto& before = t.entry(tab, i - 1, v);
            const auto& after = t.entry(tab, i, v);
            if (before) {
              ASSERT_TRUE(after && *after >= *before);
            }
          }
        }
      }
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (WalkTable tab : {WalkTable::Unmatched, WalkTable::Matched}) {
          const auto& entry = t.entry(tab, k, v);
          if (!entry) continue;
          const auto w = reconstruct_walk(t, v, tab);
          ASSERT_EQ(w.front(), s);
          ASSERT_EQ(w.back(), v);
          ASSERT_LE(w.length(), k);
          ASSERT_TRUE(is_alternating(g, m, w));
          ASSERT_EQ(walk_value(g, m, w), *entry) << checks::describe(g, m);
        }
        if (t.best_valid(m, v)) {
          const WalkTable tab = m.is_exposed(v) ? WalkTable::Unmatched : WalkTable::Matched;
          ASSERT_TRUE(is_valid_walk(g, m, reconstruct_walk(t, v, tab)));
        }
      }
    }
  }
}

TEST(OptimalWalks, MatchesEnumerationExhaustivelyOnFourVertices) {
  const auto report = checks::check_walk_dp_exhaustive(4, 5);
  EXPECT_TRUE(report.passed()) << report.failures.front();
  EXPECT_GT(report.cases, 0u);
}

TEST(DetectStructures, Examples) {
  const WeightedGraph tri = triangle();
  const auto flower = detect_structures(tri, matching_of(tri, {{1, 2}}), 0);
  EXPECT_TRUE(flower.flower_at_u);
  ASSERT_TRUE(flower.flower_walk.has_value());
  EXPECT_EQ(flower.flower_walk->front(), 0u);
  EXPECT_EQ(flower.flower_walk->back(), 0u);

  const WeightedGraph edge = make_graph(2, {{0, 1, 3}});
  const auto path = detect_structures(edge, Matching(2), 0);
  EXPECT_FALSE(path.flower_at_u);
  EXPECT_EQ(path.aug_path_to_exposed, std::optional<VertexId>(1));

  const WeightedGraph stem = make_graph(3, {{0, 1, 3}, {1, 2, 2}});
  const auto covered = detect_structures(stem, matching_of(stem, {{1, 2}}), 0);
  EXPECT_EQ(covered.aug_path_to_covered, std::optional<VertexId>(2));
  EXPECT_FALSE(covered.aug_path_to_exposed.has_value());
}

TEST(DetectStructures, CoveredVertexIsRejected) {
  const WeightedGraph g = triangle();
  try {
    detect_structures(g, matching_of(g, {{1, 2}}), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VertexNotExposed);
  }
}

TEST(SplitWalk, FirstRepeatedVertex) {
  const auto pieces = split_walk(AlternatingWalk{{0, 1, 2, 3, 1, 4}});
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_EQ(pieces[0], (AlternatingWalk{{0, 1}}));
  EXPECT_EQ(pieces[1], (AlternatingWalk{{1, 2, 3, 1}}));
  EXPECT_EQ(pieces[2], (AlternatingWalk{{1, 4}}));
  EXPECT_EQ(split_walk(AlternatingWalk{{5}}).size(), 1u);
}

TEST(ExtractStructure, PathAndNonAugmenting) {
  const WeightedGraph g = make_graph(2, {{0, 1, 3}});
  const auto s = extract_structure(g, Matching(2), AlternatingWalk{{0, 1}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, WalkStructure::Kind::AugmentingPath);
  EXPECT_EQ(s->gain, 3);
  EXPECT_FALSE(extract_structure(g, Matching(2), AlternatingWalk{{0}}).has_value());
}

TEST(ExtractStructure, AugmentingEvenCycle) {
  const WeightedGraph sq = make_graph(4, {{0, 1, 1}, {1, 2, 3}, {2, 3, 1}, {0, 3, 3}});
  const Matching ms = matching_of(sq, {{0, 1}, {2, 3}});
  const auto s = extract_structure(sq, ms, AlternatingWalk{{0, 1, 2, 3, 0}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, WalkStructure::Kind::AugmentingCycle);
  EXPECT_EQ(s->gain, 4);
}

TEST(ExtractStructure, FlowerRootedAtStart) {
  const WeightedGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 3}, {2, 3, 3}, {1, 3, 3}});
  const Matching m = matching_of(g, {{0, 1}, {2, 3}});
  // matched stem 0-1, blossom 1-2-3-1 with base 1
  const auto s = extract_structure(g, m, AlternatingWalk{{0, 1, 2, 3, 1, 0}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, WalkStructure::Kind::Flower);
  EXPECT_EQ(s->root, 0u);
}

TEST(ExtractStructure, BiCycle) {
  // u=0 a=1 b=2 c=3 d=4 e=5 f=6 g=7 h=8; blossoms at b and f joined by b-a-e-f.
  const WeightedGraph g = make_graph(9, {{0, 1, 1},
                                         {1, 2, 2},
                                         {2, 3, 1},
                                         {3, 4, 1},
                                         {2, 4, 1},
                                         {1, 5, 4},
                                         {5, 6, 1},
                                         {6, 7, 1},
                                         {7, 8, 1},
                                         {6, 8, 1}});
  const Matching m = matching_of(g, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  const AlternatingWalk walk{{0, 1, 2, 3, 4, 2, 1, 5, 6, 7, 8, 6, 5}};
  ASSERT_TRUE(is_valid_walk(g, m, walk));
  ASSERT_EQ(walk_value(g, m, walk), 1);
  const auto s = extract_structure(g, m, walk);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, WalkStructure::Kind::BiCycle);
  EXPECT_EQ(s->gain, 4);
  ASSERT_EQ(s->parts.size(), 3u);
  EXPECT_EQ(s->parts[0], (AlternatingWalk{{2, 3, 4, 2}}));
  EXPECT_EQ(s->parts[1], (AlternatingWalk{{2, 1, 5, 6}}));
  EXPECT_EQ(s->parts[2], (AlternatingWalk{{6, 7, 8, 6}}));
}

}  // namespace
}  // namespace graphstab
