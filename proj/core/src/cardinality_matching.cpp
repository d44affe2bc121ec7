#include "graphstab/cardinality_matching.hpp"

#include <algorithm>

#include "graphstab/error.hpp"

namespace graphstab {

bool UnweightedGraph::has_edge(NodeId u, NodeId v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

void UnweightedGraph::add_edge(NodeId u, NodeId v) {
  if (u == v || has_edge(u, v)) return;
  auto& a = adj_.at(u);
  a.insert(std::lower_bound(a.begin(), a.end(), v), v);
  auto& b = adj_.at(v);
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
}

void UnweightedGraph::isolate(NodeId v) {
  for (NodeId u : adj_.at(v)) {
    auto& list = adj_[u];
    list.erase(std::lower_bound(list.begin(), list.end(), v));
  }
  adj_[v].clear();
}

std::size_t matching_size(const NodeMatching& mate) {
  std::size_t count = 0;
  for (NodeId v = 0; v < mate.size(); ++v) {
    if (mate[v] != kNoNode && v < mate[v]) ++count;
  }
  return count;
}

namespace {

class BlossomSearch {
 public:
  BlossomSearch(const UnweightedGraph& g, const NodeMatching& mate, NodeId root)
      : g_(g), mate_(mate), root_(root), n_(g.node_count()),
        used_(n_, false), parent_(n_, kNoNode), base_(n_) {
    for (NodeId v = 0; v < n_; ++v) base_[v] = v;
  }

  GrowResult run() {
    used_[root_] = true;
    queue_.push_back(root_);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      NodeId v = queue_[head];
      for (NodeId to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root_ || (mate_[to] != kNoNode && parent_[mate_[to]] != kNoNode)) {
          shrink(v, to);
        } else if (parent_[to] == kNoNode) {
          parent_[to] = v;
          if (mate_[to] == kNoNode) return extract_path(to);
          NodeId next = mate_[to];
          used_[next] = true;
          queue_.push_back(next);
        }
      }
    }
    return frustrated();
  }

 private:
  NodeId lca(NodeId a, NodeId b) const {
    std::vector<bool> on_path(n_, false);
    while (true) {
      a = base_[a];
      on_path[a] = true;
      if (mate_[a] == kNoNode) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(NodeId v, NodeId b, NodeId child, std::vector<bool>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void shrink(NodeId v, NodeId to) {
    NodeId b = lca(v, to);
    std::vector<bool> in_blossom(n_, false);
    mark_path(v, b, to, in_blossom);
    mark_path(to, b, v, in_blossom);
    for (NodeId i = 0; i < n_; ++i) {
      if (!in_blossom[base_[i]]) continue;
      base_[i] = b;
      if (!used_[i]) {
        used_[i] = true;
        queue_.push_back(i);
      }
    }
  }

  AugmentingPath extract_path(NodeId target) const {
    AugmentingPath path;
    NodeId cur = target;
    path.nodes.push_back(cur);
    while (true) {
      NodeId prev = parent_[cur];
      path.nodes.push_back(prev);
      NodeId next = mate_[prev];
      if (next == kNoNode) break;
      path.nodes.push_back(next);
      cur = next;
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    return path;
  }

  FrustratedTree frustrated() const {
    FrustratedTree tree;
    tree.root = root_;
    tree.base.assign(n_, kNoNode);
    for (NodeId v = 0; v < n_; ++v) {
      if (used_[v]) {
        tree.nodes.push_back(v);
        tree.even.push_back(v);
        tree.base[v] = base_[v];
      } else if (parent_[v] != kNoNode) {
        tree.nodes.push_back(v);
        tree.odd.push_back(v);
      }
    }
    return tree;
  }

  const UnweightedGraph& g_;
  const NodeMatching& mate_;
  NodeId root_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> base_;
  std::vector<NodeId> queue_;
};

}  // namespace

GrowResult grow_tree(const UnweightedGraph& g, const NodeMatching& mate, NodeId root) {
  if (mate.size() != g.node_count() || mate.at(root) != kNoNode) {
    throw Error(Errc::InvalidMatching, "tree root must be exposed");
  }
  return BlossomSearch(g, mate, root).run();
}

NodeMatching augment(const UnweightedGraph& g, NodeMatching mate, const AugmentingPath& path) {
  const auto& p = path.nodes;
  if (p.size() < 2 || p.size() % 2 != 0 || mate.at(p.front()) != kNoNode ||
      mate.at(p.back()) != kNoNode) {
    throw Error(Errc::NotAugmenting, "path endpoints must be two distinct exposed nodes");
  }
  std::vector<NodeId> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::NotAugmenting, "path is not simple");
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p[i], p[i + 1])) throw Error(Errc::NotAugmenting, "path uses a non-edge");
    bool matched = mate[p[i]] == p[i + 1];
    if (matched != (i % 2 == 1)) throw Error(Errc::NotAugmenting, "path does not alternate");
  }
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
    mate[p[i]] = p[i + 1];
    mate[p[i + 1]] = p[i];
  }
  return mate;
}

NodeMatching maximum_cardinality_matching(const UnweightedGraph& g, NodeMatching mate) {
  if (mate.empty()) mate.assign(g.node_count(), kNoNode);
  for (NodeId r = 0; r < g.node_count(); ++r) {
    if (mate[r] != kNoNode) continue;
    auto result = grow_tree(g, mate, r);
    if (auto* path = std::get_if<AugmentingPath>(&result)) mate = augment(g, mate, *path);
  }
  return mate;
}

}  // namespace graphstab
