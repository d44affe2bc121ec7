#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphstab/fractional.hpp"
#include "graphstab/graph.hpp"
#include "graphstab/walk.hpp"

namespace graphstab {

/// Exhaustive reference computations for small graphs. Everything here is
/// exponential and refuses inputs beyond its budget (BudgetExceeded).
struct OracleBudget {
  std::size_t max_vertices = 12;        // ν, ν_f, γ, stability
  std::size_t max_subset_vertices = 8;  // stabilizer searches
  std::size_t max_walk_length = 12;
  std::size_t max_walks = 5'000'000;
};

struct NuResult {
  Rational value;
  Matching matching;
};

NuResult exact_nu(const WeightedGraph& g, const OracleBudget& budget = {});

/// Maximum of w·x over basic fractional matchings (matchings plus
/// vertex-disjoint odd cycles at 1/2).
Rational exact_nu_f(const WeightedGraph& g, const OracleBudget& budget = {});

/// Fewest odd cycles among basic fractional matchings of value ν_f.
std::size_t brute_gamma(const WeightedGraph& g, const OracleBudget& budget = {});

enum class CyclePreference { Fewest, Most };

/// An optimal basic fractional matching with the fewest (γ) or the most odd
/// cycles among all optima.
BasicFractionalMatching brute_basic_optimum(const WeightedGraph& g, CyclePreference preference,
                                            const OracleBudget& budget = {});

bool is_stable(const WeightedGraph& g, const OracleBudget& budget = {});

/// Smallest removal sets, ties broken lexicographically by id.
std::vector<VertexId> brute_min_vertex_stabilizer(const WeightedGraph& g,
                                                  const OracleBudget& budget = {});
std::vector<EdgeId> brute_min_edge_stabilizer(const WeightedGraph& g,
                                              const OracleBudget& budget = {});
/// Smallest set of M-exposed vertices whose removal leaves a stable graph in
/// which M is maximum-weight; nullopt when no such set exists.
std::optional<std::vector<VertexId>> brute_min_m_stabilizer(const WeightedGraph& g,
                                                            const Matching& m,
                                                            const OracleBudget& budget = {});

struct EnumeratedWalk {
  VertexId endpoint;
  Rational value;
  AlternatingWalk walk;
};

/// Every valid M-alternating walk from s with at most k edges.
std::vector<EnumeratedWalk> enumerate_valid_walks(const WeightedGraph& g, const Matching& m,
                                                  VertexId s, std::size_t k,
                                                  const OracleBudget& budget = {});

/// Per-vertex maximum over enumerate_valid_walks; nullopt where no valid
/// walk ends.
std::vector<std::optional<Rational>> best_valid_walks(const WeightedGraph& g, const Matching& m,
                                                      VertexId s, std::size_t k,
                                                      const OracleBudget& budget = {});

/// The same maxima for every length bound at once: entry [i][v] is the best
/// value of a valid walk from s to v with at most i edges, for i = 0..k.
std::vector<std::vector<std::optional<Rational>>> valid_walk_maxima(
    const WeightedGraph& g, const Matching& m, VertexId s, std::size_t k,
    const OracleBudget& budget = {});

}  // namespace graphstab
