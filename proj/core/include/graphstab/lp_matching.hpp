#pragma once

#include <vector>

#include "graphstab/fractional.hpp"
#include "graphstab/graph.hpp"

namespace graphstab {

/// Bipartite double cover of G: a left copy v and a right copy v' of every
/// vertex, and for each edge uv the two edges (u, v') and (v, u'), both of
/// weight w_uv.
struct BipartiteDuplicate {
  struct Arc {
    VertexId left;
    VertexId right;
    Rational weight;
    EdgeId original;
  };

  std::size_t side_size = 0;
  std::vector<Arc> arcs;
  /// Arc ids leaving each left node, sorted by right endpoint.
  std::vector<std::vector<std::size_t>> left_arcs;

  static BipartiteDuplicate of(const WeightedGraph& g);
};

struct BipartiteMatching {
  std::vector<VertexId> left_mate;   // right node or kNoVertex
  std::vector<VertexId> right_mate;  // left node or kNoVertex
  std::vector<std::size_t> arcs;     // matched arc ids, sorted
  Rational weight;
};

/// Dual certificate for the bipartite problem.
struct DualPotentials {
  std::vector<Rational> left;
  std::vector<Rational> right;

  Rational total() const;
};

struct BipartiteSolution {
  BipartiteMatching matching;
  DualPotentials potentials;
};

/// Maximum-weight (not necessarily perfect) bipartite matching by the
/// primal-dual Hungarian method. Potentials are nonnegative, feasible, tight on
/// matched arcs and zero on exposed nodes, so sum(potentials) = weight.
BipartiteSolution bipartite_max_weight_matching(const BipartiteDuplicate& dup);

/// x_uv = ([u matched to v'] + [v matched to u']) / 2.
EdgeValues symmetrize(const BipartiteDuplicate& dup, const BipartiteMatching& matching);

/// Turns a half-integral optimum into a basic one with the same weight. Each
/// half-valued path or even cycle is replaced by its heavier 0/1 alternation;
/// on ties the alternation giving value 1 to the component's lowest edge id
/// wins. Errors: WeightLoss, plus decompose() errors.
BasicFractionalMatching normalize_to_basic(const WeightedGraph& g, std::span<const Rational> x);

struct FractionalSolution {
  BasicFractionalMatching x;
  FractionalVertexCover y;
};

/// Basic maximum-weight fractional matching and minimum fractional w-vertex
/// cover, with w.x = sum(y) and complementary slackness holding exactly.
FractionalSolution solve_fractional(const WeightedGraph& g);

/// Throws Error{Errc::NotOptimalPair} unless is_optimal_pair(g, x, y).
void require_optimal_pair(const WeightedGraph& g, std::span<const Rational> x,
                          const FractionalVertexCover& y, const char* where);

}  // namespace graphstab
