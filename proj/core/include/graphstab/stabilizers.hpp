#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphstab/cycle_minimizer.hpp"
#include "graphstab/fractional.hpp"
#include "graphstab/graph.hpp"

namespace graphstab {

struct VertexStabilizerResult {
  std::vector<VertexId> S;  // sorted
  /// Maximum-weight matching of G \ S; its weight equals the surviving
  /// cover's total, which certifies stability of G \ S.
  Matching surviving;
  /// y with the entries of S zeroed: a fractional w-vertex cover of G \ S.
  FractionalVertexCover surviving_cover;
  /// ν(G) when the graph is small enough to compute it exactly.
  std::optional<Rational> nu_before;
  Rational nu_after;
  CycleReduction reduction;
};

/// Removes one minimum-y vertex from every odd cycle of a cycle-minimal
/// optimal fractional matching. |S| = γ(G), which no vertex-stabilizer beats.
VertexStabilizerResult min_vertex_stabilizer(const WeightedGraph& g);

struct EdgeStabilizerResult {
  std::vector<EdgeId> F;  // sorted edge ids of G
  std::size_t gamma = 0;
  std::size_t lower_bound = 0;  // ceil(γ/2)
  std::size_t upper_bound = 0;  // γ·Δ
  /// Certificate for G \ F, in edge ids of G.
  Matching surviving;
  FractionalVertexCover surviving_cover;
};

/// Deletes every edge incident to the vertex-stabilizer.
EdgeStabilizerResult edge_stabilizer_approx(const WeightedGraph& g);

struct GammaBounds {
  std::size_t gamma = 0;
  std::size_t vertex_lb = 0;
  std::size_t edge_lb = 0;
};

GammaBounds gamma_lower_bounds(const WeightedGraph& g);

}  // namespace graphstab
