#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "graphstab/graph.hpp"

namespace graphstab::checks {

/// Outcome of one property suite: how many cases ran and what broke.
struct Report {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  /// Coverage tallies, e.g. how many cases exercised a particular branch.
  std::map<std::string, std::size_t> counters;

  bool passed() const noexcept { return failures.empty(); }
  void fail(std::string what);
  void merge(const Report& other);
};

/// G(n, p) with integer weights drawn uniformly from [1, max_weight].
WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, int max_weight);
/// A random (not necessarily maximal) matching of g.
Matching random_matching(std::mt19937_64& rng, const WeightedGraph& g);

struct SuiteSpec {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 8;
  int max_weight = 5;  // 1 gives the unit-weight setting
};

std::vector<WeightedGraph> random_suite(const SuiteSpec& spec);

/// Compact one-line rendering for failure messages.
std::string describe(const WeightedGraph& g);
std::string describe(const WeightedGraph& g, const Matching& m);

/// Cycle count and value of the reduced solution against exhaustive search;
/// every intermediate solution basic and complementary-slack with y. Runs
/// from the LP solution and from the optimum with the most odd cycles.
Report check_cycle_reduction(const std::vector<WeightedGraph>& suite);
/// Vertex-stabilizer size, stability of the residual graph and the 2/3 bound.
Report check_vertex_stabilizer(const std::vector<WeightedGraph>& suite);
/// γ(G∖v) ≥ γ(G)−1 and γ(G∖e) ≥ γ(G)−2.
Report check_monotonicity(const std::vector<WeightedGraph>& suite);
/// ceil(γ/2) ≤ OPT ≤ |F| ≤ γΔ for the edge-stabilizer.
Report check_edge_sandwich(const std::vector<WeightedGraph>& suite);
/// w·x = Σy and complementary slackness for every pair any solver emits.
Report check_duality(const std::vector<WeightedGraph>& suite);

/// Walk tables against enumeration on every graph with up to `max_vertices`
/// vertices, weights in {1, 2}, every matching and source, lengths ≤ k.
Report check_walk_dp_exhaustive(std::size_t max_vertices, std::size_t max_length);
Report check_walk_dp_random(const SuiteSpec& spec, std::size_t max_length);
/// Compares one graph/matching/source against enumeration for lengths ≤ k.
void check_walk_dp_case(Report& report, const WeightedGraph& g, const Matching& m, VertexId s,
                        std::size_t max_length);

/// Approximation ratio, exactness without a second loop, infeasibility
/// agreement with the oracle and order independence of the first loop.
Report check_m_stabilizer(const SuiteSpec& spec);

}  // namespace graphstab::checks
