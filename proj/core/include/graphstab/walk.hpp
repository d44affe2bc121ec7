#pragma once

#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/rational.hpp"

namespace graphstab {

/// A walk given by its vertex sequence; repeated vertices are allowed. The
/// empty walk at s is {s}; a default-constructed walk has no vertices.
struct AlternatingWalk {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  friend bool operator==(const AlternatingWalk&, const AlternatingWalk&) = default;
};

/// Edge ids along the walk. Throws Error{Errc::NotAlternating} if two
/// consecutive vertices are not adjacent.
std::vector<EdgeId> walk_edges(const WeightedGraph& g, const AlternatingWalk& walk);

/// Consecutive edges alternate between M and E \ M.
bool is_alternating(const WeightedGraph& g, const Matching& m, const AlternatingWalk& walk);

/// Alternating, and each end is an M-exposed vertex or a matched edge.
bool is_valid_walk(const WeightedGraph& g, const Matching& m, const AlternatingWalk& walk);

/// w(W \ M) - w(W ∩ M), repeated edges counted with multiplicity.
/// Throws Error{Errc::NotAlternating}.
Rational walk_value(const WeightedGraph& g, const Matching& m, const AlternatingWalk& walk);

}  // namespace graphstab
