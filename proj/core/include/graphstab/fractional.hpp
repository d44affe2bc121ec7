#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/rational.hpp"

namespace graphstab {

/// One value per edge id.
using EdgeValues = std::vector<Rational>;

/// An odd cycle of half-valued edges. edges[i] joins vertices[i] and
/// vertices[(i + 1) % size]. Canonical form starts at the smallest vertex and
/// continues toward its smaller cycle neighbor.
struct OddCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool contains(VertexId v) const;
  friend bool operator==(const OddCycle&, const OddCycle&) = default;
};

/// A vertex of the fractional matching polytope: x in {0, 1/2, 1}, the
/// 1-edges form `matched`, the 1/2-edges form vertex-disjoint odd `cycles`.
struct BasicFractionalMatching {
  EdgeValues x;
  std::vector<EdgeId> matched;
  std::vector<OddCycle> cycles;

  Rational value(const WeightedGraph& g) const { return g.dot(x); }
  std::size_t cycle_count() const noexcept { return cycles.size(); }
  /// The integral part as a mate array.
  Matching matching(const WeightedGraph& g) const { return Matching::from_edges(g, matched); }

  friend bool operator==(const BasicFractionalMatching&, const BasicFractionalMatching&) = default;
};

struct FractionalVertexCover {
  std::vector<Rational> y;

  Rational total() const;
  friend bool operator==(const FractionalVertexCover&, const FractionalVertexCover&) = default;
};

/// x(delta(v)).
Rational vertex_load(const WeightedGraph& g, std::span<const Rational> x, VertexId v);

/// Splits x into its matching part and odd cycles.
/// Errors: NotHalfIntegral, DegreeConstraintViolated, NotBasic.
BasicFractionalMatching decompose(const WeightedGraph& g, std::span<const Rational> x);

/// Rounds cycle `cycle_index` so that `v` becomes exposed on it and the other
/// cycle vertices are perfectly matched along the cycle.
/// Errors: CycleNotInSupport, VertexNotOnCycle.
BasicFractionalMatching alternate_round(const WeightedGraph& g, const BasicFractionalMatching& x,
                                        std::size_t cycle_index, VertexId v);

/// Flips x_e to 1 - x_e on every edge of `edges`. The result is returned raw;
/// callers re-validate it through decompose(). Errors: HalfValueOnPath.
EdgeValues complement(const BasicFractionalMatching& x, std::span<const EdgeId> edges);

/// Replaces x by x2 on K, which must be the full edge set of one connected
/// component of supp(x + x2). Errors: NotAComponent, plus decompose() errors.
BasicFractionalMatching switch_component(const WeightedGraph& g, const BasicFractionalMatching& x,
                                         const BasicFractionalMatching& x2,
                                         std::span<const EdgeId> component);

/// Edge sets of the connected components of supp(x + x2), each sorted.
std::vector<std::vector<EdgeId>> support_components(const WeightedGraph& g,
                                                    std::span<const Rational> x,
                                                    std::span<const Rational> x2);

bool is_cover(const WeightedGraph& g, const FractionalVertexCover& y);

/// Edges with y_u + y_v = w_uv. Errors: InfeasibleCover.
std::vector<EdgeId> tight_edges(const WeightedGraph& g, const FractionalVertexCover& y);

/// Checks primal feasibility, dual feasibility, w.x = sum(y) and both
/// complementary slackness conditions, all exactly.
bool is_optimal_pair(const WeightedGraph& g, std::span<const Rational> x,
                     const FractionalVertexCover& y);

}  // namespace graphstab
