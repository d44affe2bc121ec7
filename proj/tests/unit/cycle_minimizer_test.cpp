#include <variant>

#include <gtest/gtest.h>

#include "graphstab/cycle_minimizer.hpp"
#include "graphstab/error.hpp"
#include "graphstab/oracle.hpp"
#include "test_support.hpp"

namespace graphstab {
namespace {

using testing::eid;
using testing::fixture;
using testing::make_graph;
using testing::vid;

/// Two unit triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
WeightedGraph bridged_triangles() {
  return make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
}

FractionalSolution both_triangles_half(const WeightedGraph& g) {
  EdgeValues x(g.edge_count(), half());
  x[*g.find_edge(2, 3)] = 0;
  return {decompose(g, x), FractionalVertexCover{std::vector<Rational>(6, half())}};
}

TEST(BuildAuxiliary, StableGraphHasIsolatedHelper) {
  const WeightedGraph g = make_graph(2, {{0, 1, 3}});
  const auto s = solve_fractional(g);
  ASSERT_GT(s.y.y[0], 0);
  ASSERT_GT(s.y.y[1], 0);
  const auto aux = build_auxiliary(g, s.x, s.y);
  EXPECT_TRUE(aux.graph.has_edge(0, 1));
  EXPECT_TRUE(aux.graph.neighbors(aux.helper()).empty());
  EXPECT_EQ(aux.mate[0], 1u);
  EXPECT_EQ(aux.mate[aux.helper()], kNoNode);
  EXPECT_EQ(aux.pseudonode_count, 0u);
}

TEST(BuildAuxiliary, TrianglePendantShadowGadgetAndNoSlackEdge) {
  const WeightedGraph g = fixture("triangle_pendant").graph;
  const auto s = solve_fractional(g);
  const auto aux = build_auxiliary(g, s.x, s.y);
  const VertexId sv = vid(g, "s");
  ASSERT_EQ(aux.pseudonode_count, 1u);
  const NodeId pseudo = aux.pseudonode(0);
  EXPECT_TRUE(aux.graph.has_edge(sv, aux.shadow(sv)));
  EXPECT_TRUE(aux.graph.has_edge(aux.shadow(sv), aux.helper()));
  EXPECT_EQ(aux.mate[sv], aux.shadow(sv));
  EXPECT_FALSE(aux.graph.has_edge(pseudo, sv));
  EXPECT_EQ(aux.mate[pseudo], kNoNode);
  EXPECT_EQ(aux.kind(pseudo), AuxiliaryGraph::Kind::Pseudonode);
  EXPECT_EQ(aux.kind(aux.shadow(sv)), AuxiliaryGraph::Kind::Shadow);
  EXPECT_EQ(aux.original(aux.shadow(sv)), sv);
}

TEST(BuildAuxiliary, TwinTrianglesHelperEdgeAtFive) {
  const WeightedGraph g = fixture("twin_triangles").graph;
  EdgeValues x(g.edge_count(), Rational(0));
  for (auto [a, b] : {std::pair{"1", "2"}, {"1", "3"}, {"2", "3"}, {"6", "7"}, {"6", "8"}, {"7", "8"}}) {
    x[eid(g, a, b)] = half();
  }
  x[eid(g, "4", "5")] = 1;
  FractionalVertexCover y{{1, 1, 1, half(), 0, 1, 1, 1}};
  const auto aux = build_auxiliary(g, decompose(g, x), y);
  const VertexId five = vid(g, "5"), four = vid(g, "4");
  EXPECT_EQ(aux.pseudonode_count, 2u);
  EXPECT_TRUE(aux.graph.has_edge(five, aux.helper()));
  EXPECT_FALSE(aux.graph.has_edge(four, aux.helper()));
  EXPECT_EQ(aux.mate[five], four);
  // 56 is tight (0 + 1 = 1), so 5 sees the second pseudonode; 14 is slack.
  EXPECT_TRUE(aux.graph.has_edge(five, aux.pseudonode(1)));
  EXPECT_FALSE(aux.graph.has_edge(four, aux.pseudonode(0)));
  EXPECT_EQ(aux.witness_of(five, aux.pseudonode(1)), (std::pair{five, vid(g, "6")}));
}

TEST(BuildAuxiliary, DeletedNodesStayOut) {
  const WeightedGraph g = fixture("triangle_pendant").graph;
  const auto s = solve_fractional(g);
  DeletedNodes gone(g.vertex_count());
  for (VertexId v : s.x.cycles[0].vertices) gone.vertex[v] = true;
  gone.helper = true;
  const auto aux = build_auxiliary(g, s.x, s.y, gone);
  EXPECT_FALSE(aux.present[aux.pseudonode(0)]);
  EXPECT_FALSE(aux.present[aux.helper()]);
  EXPECT_TRUE(aux.graph.neighbors(aux.pseudonode(0)).empty());
  EXPECT_TRUE(aux.graph.neighbors(aux.helper()).empty());
}

TEST(BuildAuxiliary, RejectsNonOptimalPair) {
  const WeightedGraph g = fixture("triangle_pendant").graph;
  auto s = solve_fractional(g);
  s.y.y[0] += 1;
  try {
    build_auxiliary(g, s.x, s.y);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotOptimalPair);
  }
}

TEST(ApplyAugmentation, CycleToCycleThroughBridge) {
  const WeightedGraph g = bridged_triangles();
  const auto start = both_triangles_half(g);
  ASSERT_TRUE(is_optimal_pair(g, start.x.x, start.y));
  const auto aux = build_auxiliary(g, start.x, start.y);
  const auto grown = grow_tree(aux.graph, aux.mate, aux.pseudonode(0));
  ASSERT_TRUE(std::holds_alternative<AugmentingPath>(grown));
  const auto step = apply_augmentation(g, start.x, start.y, aux, std::get<AugmentingPath>(grown));
  EXPECT_EQ(step.event.kind, AugmentationEvent::Kind::CycleToCycle);
  EXPECT_EQ(step.event.path, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(step.x.cycle_count(), 0u);
  EXPECT_EQ(step.x.value(g), 3);
  EXPECT_EQ(step.x.matched, (std::vector<EdgeId>{*g.find_edge(0, 1), *g.find_edge(4, 5),
                                                 *g.find_edge(2, 3)}));
}

TEST(ApplyAugmentation, RejectsNonAugmentingPath) {
  const WeightedGraph g = bridged_triangles();
  const auto start = both_triangles_half(g);
  const auto aux = build_auxiliary(g, start.x, start.y);
  try {
    apply_augmentation(g, start.x, start.y, aux, AugmentingPath{{aux.pseudonode(0)}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PathNotAugmenting);
  }
}

TEST(ReduceCycles, BridgedTrianglesBecomeIntegral) {
  const WeightedGraph g = bridged_triangles();
  const auto r = reduce_cycles(g, both_triangles_half(g));
  EXPECT_EQ(r.initial_cycles, 2u);
  EXPECT_EQ(r.gamma, 0u);
  EXPECT_EQ(r.x.value(g), 3);
  EXPECT_EQ(r.events.size(), 1u);
  EXPECT_EQ(r.trajectory.size(), 2u);
}

TEST(ReduceCycles, TwinTrianglesKeepsBothTriangles) {
  const WeightedGraph g = fixture("twin_triangles").graph;
  const auto r = reduce_cycles(g);
  EXPECT_EQ(r.gamma, 2u);
  EXPECT_EQ(r.x.value(g), Rational(13, 2));
  EXPECT_TRUE(is_optimal_pair(g, r.x.x, r.y));
}

TEST(ReduceCycles, TrianglePendantHasNoAugmentation) {
  const WeightedGraph g = fixture("triangle_pendant").graph;
  const auto r = reduce_cycles(g);
  EXPECT_EQ(r.gamma, 1u);
  EXPECT_TRUE(r.events.empty());
  EXPECT_EQ(r.trajectory.size(), 1u);
  EXPECT_EQ(r.x, solve_fractional(g).x);
}

TEST(ReduceCycles, HelperEdgeRoundsAtZeroCoverVertex) {
  // Pendant zero-weight edge does not matter; a triangle whose vertex has
  // y = 0 is rounded away directly.
  const WeightedGraph g = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  FractionalSolution start{decompose(g, EdgeValues(3, half())),
                           FractionalVertexCover{{half(), half(), half()}}};
  EXPECT_EQ(reduce_cycles(g, start).gamma, 1u);
  // a triangle with a heavy pendant: the optimum rounds the triangle
  const WeightedGraph h = make_graph(4, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}, {2, 3, 2}});
  const auto r = reduce_cycles(h, {brute_basic_optimum(h, CyclePreference::Most), solve_fractional(h).y});
  EXPECT_EQ(r.gamma, brute_gamma(h));
  EXPECT_EQ(r.x.value(h), exact_nu_f(h));
}

TEST(ReduceCycles, EmptyGraph) {
  const auto r = reduce_cycles(WeightedGraph(0));
  EXPECT_EQ(r.gamma, 0u);
  EXPECT_EQ(r.frustrated_trees, 0u);
}

}  // namespace
}  // namespace graphstab
