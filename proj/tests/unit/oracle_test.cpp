#include <functional>

#include <gtest/gtest.h>

#include "graphstab/checks/checks.hpp"
#include "graphstab/error.hpp"
#include "graphstab/oracle.hpp"
#include "test_support.hpp"

namespace graphstab {
namespace {

using testing::eid;
using testing::fixture;
using testing::make_graph;
using testing::names;
using testing::vid;

TEST(Oracle, Nu) {
  EXPECT_EQ(exact_nu(fixture("pentagon_chords").graph).value, 8);
  const WeightedGraph g9 = fixture("triangle_pendant").graph;
  const auto r = exact_nu(g9);
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.matching.weight(g9), 5);
  EXPECT_EQ(exact_nu(WeightedGraph(0)).value, 0);
}

TEST(Oracle, NuF) {
  EXPECT_EQ(exact_nu_f(fixture("pentagon_chords").graph), 9);
  EXPECT_EQ(exact_nu_f(fixture("twin_triangles").graph), Rational(13, 2));
  EXPECT_EQ(exact_nu_f(make_graph(2, {{0, 1, 7}})), 7);
}

TEST(Oracle, Gamma) {
  EXPECT_EQ(brute_gamma(make_graph(2, {{0, 1, 7}})), 0u);
  EXPECT_EQ(brute_gamma(fixture("twin_triangles").graph), 2u);
  EXPECT_EQ(brute_gamma(fixture("triangle_pendant").graph), 1u);
}

TEST(Oracle, BasicOptimaByCyclePreference) {
  const WeightedGraph g = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
  EXPECT_EQ(brute_basic_optimum(g, CyclePreference::Fewest).cycle_count(), 0u);
  EXPECT_EQ(brute_basic_optimum(g, CyclePreference::Most).cycle_count(), 2u);
}

TEST(Oracle, MinimumStabilizers) {
  const WeightedGraph g6 = fixture("twin_triangles").graph;
  const auto f6 = brute_min_edge_stabilizer(g6);
  ASSERT_EQ(f6.size(), 1u);
  // lexicographic tie-break: 12 comes before the weight-1/2 edge 45
  EXPECT_EQ(f6.front(), eid(g6, "1", "2"));

  const WeightedGraph g8 = fixture("pentagon_chords").graph;
  EXPECT_EQ(brute_min_edge_stabilizer(g8), (std::vector<EdgeId>{eid(g8, "q", "r")}));

  const WeightedGraph g9 = fixture("triangle_pendant").graph;
  EXPECT_EQ(names(g9, brute_min_vertex_stabilizer(g9)), (std::vector<std::string>{"p"}));
  for (const char* v : {"p", "q", "r"}) {
    const VertexId drop[] = {vid(g9, v)};
    EXPECT_TRUE(is_stable(g9.without_vertices(drop))) << v;
  }
  const VertexId s[] = {vid(g9, "s")};
  EXPECT_FALSE(is_stable(g9.without_vertices(s)));
}

TEST(Oracle, Stability) {
  const WeightedGraph g8 = fixture("pentagon_chords").graph;
  EXPECT_FALSE(is_stable(g8));
  const EdgeId qr[] = {eid(g8, "q", "r")};
  const WeightedGraph cut = g8.without_edges(qr);
  EXPECT_TRUE(is_stable(cut));
  EXPECT_EQ(exact_nu(cut).value, 7);
  EXPECT_TRUE(is_stable(make_graph(2, {{0, 1, 1}})));
}

TEST(Oracle, PentagonChordsOnlyQrStabilizes) {
  const WeightedGraph g = fixture("pentagon_chords").graph;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == eid(g, "q", "r")) continue;
    const EdgeId drop[] = {e};
    EXPECT_FALSE(is_stable(g.without_edges(drop))) << "edge " << e;
  }
  for (auto [a, b] : {std::pair{"p", "r"}, {"p", "q"}}) {
    const EdgeId drop[] = {eid(g, a, b)};
    EXPECT_EQ(exact_nu_f(g.without_edges(drop)), Rational(17, 2));
  }
}

TEST(Oracle, TrianglePendantVertexDeletions) {
  const WeightedGraph g = fixture("triangle_pendant").graph;
  for (const char* v : {"p", "q", "r"}) {
    const VertexId drop[] = {vid(g, v)};
    EXPECT_EQ(exact_nu(g.without_vertices(drop)).value, 4) << v;
  }
}

TEST(Oracle, EnumerateWalks) {
  const WeightedGraph edge = make_graph(2, {{0, 1, 5}});
  const auto zero = enumerate_valid_walks(edge, Matching(2), 0, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].endpoint, 0u);
  EXPECT_EQ(zero[0].value, 0);
  EXPECT_EQ(zero[0].walk, (AlternatingWalk{{0}}));

  const auto one = enumerate_valid_walks(edge, Matching(2), 0, 1);
  bool found = false;
  for (const auto& w : one) found = found || (w.endpoint == 1 && w.value == 5);
  EXPECT_TRUE(found);

  const WeightedGraph tri = make_graph(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}});
  const auto best = best_valid_walks(tri, testing::matching_of(tri, {{1, 2}}), 0, 3);
  EXPECT_EQ(best[0], std::optional<Rational>(2));
}

TEST(Oracle, WalkMaximaByLength) {
  const WeightedGraph tri = make_graph(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}});
  const Matching m = testing::matching_of(tri, {{1, 2}});
  const auto maxima = valid_walk_maxima(tri, m, 0, 4);
  ASSERT_EQ(maxima.size(), 5u);
  for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(maxima[i], best_valid_walks(tri, m, 0, i));
}

TEST(Oracle, BudgetsFailLoudly) {
  OracleBudget tiny;
  tiny.max_vertices = 3;
  tiny.max_subset_vertices = 3;
  tiny.max_walk_length = 2;
  const WeightedGraph g = fixture("triangle_pendant").graph;
  for (const auto& call : std::vector<std::function<void()>>{
           [&] { exact_nu(g, tiny); }, [&] { exact_nu_f(g, tiny); }, [&] { brute_gamma(g, tiny); },
           [&] { is_stable(g, tiny); }, [&] { brute_min_vertex_stabilizer(g, tiny); },
           [&] { brute_min_edge_stabilizer(g, tiny); },
           [&] { enumerate_valid_walks(g, Matching(4), 0, 3, tiny); }}) {
    try {
      call();
      ADD_FAILURE() << "budget ignored";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    }
  }
}

TEST(Oracle, WeakDuality) {
  for (const WeightedGraph& g : checks::random_suite({31, 200, 1, 9, 5})) {
    const Rational nu = exact_nu(g).value;
    const Rational nu_f = exact_nu_f(g);
    ASSERT_LE(nu, nu_f) << checks::describe(g);
    ASSERT_EQ(nu == nu_f, brute_gamma(g) == 0) << checks::describe(g);
  }
}

}  // namespace
}  // namespace graphstab
