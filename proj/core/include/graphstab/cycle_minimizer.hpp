#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "graphstab/cardinality_matching.hpp"
#include "graphstab/fractional.hpp"
#include "graphstab/graph.hpp"
#include "graphstab/lp_matching.hpp"

namespace graphstab {

/// Nodes of G' that were removed as parts of frustrated trees, recorded in
/// terms of G so that the auxiliary graph can be rebuilt around them.
struct DeletedNodes {
  std::vector<bool> vertex;  // original vertex, or a vertex of a deleted pseudonode
  std::vector<bool> shadow;  // shadow copy v'
  bool helper = false;       // z

  explicit DeletedNodes(std::size_t n = 0) : vertex(n, false), shadow(n, false) {}
};

/// The unweighted auxiliary graph G' and its matching M'.
///
/// Node layout: [0, n) original vertices, n is the helper z, [n+1, 2n+1) the
/// shadow copies v', and [2n+1, 2n+1+q) one pseudonode per odd cycle of x.
/// Vertices lying on a cycle and absent shadows are isolated nodes.
struct AuxiliaryGraph {
  enum class Kind { Vertex, Helper, Shadow, Pseudonode };

  std::size_t vertex_count = 0;
  std::size_t pseudonode_count = 0;
  UnweightedGraph graph;
  NodeMatching mate;
  /// Cycle index per original vertex, or npos.
  std::vector<std::size_t> cycle_of;
  /// Per pseudonode: smallest cycle vertex with y_v = 0, or kNoVertex.
  std::vector<VertexId> zero_cover_vertex;
  /// For G' edges with a pseudonode end: the tight G edge they stand for, as
  /// (G end on the key's first node, G end on the key's second node).
  std::map<std::pair<NodeId, NodeId>, std::pair<VertexId, VertexId>> witness;
  std::vector<bool> present;

  NodeId helper() const noexcept { return static_cast<NodeId>(vertex_count); }
  NodeId shadow(VertexId v) const noexcept { return static_cast<NodeId>(vertex_count + 1 + v); }
  NodeId pseudonode(std::size_t i) const noexcept {
    return static_cast<NodeId>(2 * vertex_count + 1 + i);
  }
  Kind kind(NodeId node) const noexcept;
  /// Original vertex behind a Vertex or Shadow node.
  VertexId original(NodeId node) const noexcept;
  std::size_t cycle_index(NodeId pseudo) const noexcept { return pseudo - pseudonode(0); }
  /// The G edge behind the G' edge (a, b), oriented as (end at a, end at b).
  std::pair<VertexId, VertexId> witness_of(NodeId a, NodeId b) const;
};

/// Builds G' from a complementary-slack pair (x, y), leaving out every node
/// recorded in `deleted`. Errors: NotOptimalPair.
AuxiliaryGraph build_auxiliary(const WeightedGraph& g, const BasicFractionalMatching& x,
                               const FractionalVertexCover& y,
                               const DeletedNodes& deleted = DeletedNodes{});

struct AugmentationEvent {
  enum class Kind {
    CycleToHelper,        // pseudonode adjacent to z: a cycle vertex has y = 0
    CycleToCycle,         // tight alternating path between two cycles
    CycleToZeroCovered,   // path to a covered vertex with y = 0 (via vz)
    CycleToZeroExposed,   // path to an exposed vertex with y = 0 (via v'z)
  };
  Kind kind;
  /// Tight M(x)-alternating path in G from the first cycle; a single vertex
  /// for CycleToHelper.
  std::vector<VertexId> path;
  /// Vertices at which cycles were alternately rounded.
  std::vector<VertexId> rounded_at;
};

struct AugmentationResult {
  BasicFractionalMatching x;
  AugmentationEvent event;
};

/// Maps an M'-augmenting path of G' back to G, alternately rounds the cycles
/// at its ends and complements the path. Errors: PathNotAugmenting,
/// EndpointNotRecognized, NotOptimalPair.
AugmentationResult apply_augmentation(const WeightedGraph& g, const BasicFractionalMatching& x,
                                      const FractionalVertexCover& y, const AuxiliaryGraph& aux,
                                      const AugmentingPath& path);

struct CycleReduction {
  BasicFractionalMatching x;
  FractionalVertexCover y;
  std::size_t gamma = 0;
  std::size_t initial_cycles = 0;
  std::size_t frustrated_trees = 0;
  std::vector<AugmentationEvent> events;
  /// Every fractional matching the loop passed through, initial one first.
  std::vector<BasicFractionalMatching> trajectory;
};

/// Basic maximum-weight fractional matching with the minimum possible number
/// of odd cycles, together with the fixed minimum cover y used throughout.
CycleReduction reduce_cycles(const WeightedGraph& g);
/// Same, starting from any optimal pair (x, y). Errors: NotOptimalPair.
CycleReduction reduce_cycles(const WeightedGraph& g, FractionalSolution start);

}  // namespace graphstab
