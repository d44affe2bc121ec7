#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "graphstab/graph.hpp"

namespace graphstab {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = kNoVertex;

/// Plain undirected graph for cardinality matching. Neighbor lists stay
/// sorted so scans go lowest index first.
class UnweightedGraph {
 public:
  UnweightedGraph() = default;
  explicit UnweightedGraph(std::size_t node_count) : adj_(node_count) {}

  std::size_t node_count() const noexcept { return adj_.size(); }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(v); }
  bool has_edge(NodeId u, NodeId v) const;
  /// Ignores duplicates and loops.
  void add_edge(NodeId u, NodeId v);
  /// Drops every edge at v; v stays as an isolated node.
  void isolate(NodeId v);

 private:
  std::vector<std::vector<NodeId>> adj_;
};

/// mate[v] is v's partner or kNoNode.
using NodeMatching = std::vector<NodeId>;

/// Simple path root -> ... -> other exposed node, alternating unmatched /
/// matched and starting with an unmatched edge.
struct AugmentingPath {
  std::vector<NodeId> nodes;
};

/// Alternating tree that cannot be grown further. `even` holds B(T) (outer
/// nodes, including every node absorbed into a blossom), `odd` holds A(T).
/// `base[v]` is the blossom base of an even node at the end of the search.
struct FrustratedTree {
  NodeId root = kNoNode;
  std::vector<NodeId> nodes;
  std::vector<NodeId> even;
  std::vector<NodeId> odd;
  std::vector<NodeId> base;  // indexed by node id; kNoNode outside the tree
};

using GrowResult = std::variant<AugmentingPath, FrustratedTree>;

/// Edmonds' search from the exposed node `root`: grows an alternating tree,
/// shrinks blossoms as they close, and either returns an augmenting path
/// expanded back to a simple path of g, or the frustrated tree.
/// Throws Error{Errc::InvalidMatching} if root is covered.
GrowResult grow_tree(const UnweightedGraph& g, const NodeMatching& mate, NodeId root);

/// mate xor E(path). Errors: NotAugmenting.
NodeMatching augment(const UnweightedGraph& g, NodeMatching mate, const AugmentingPath& path);

/// Repeated grow_tree/augment from exposed nodes in ascending order.
NodeMatching maximum_cardinality_matching(const UnweightedGraph& g, NodeMatching mate = {});

std::size_t matching_size(const NodeMatching& mate);

}  // namespace graphstab
