#include "graphstab/cycle_minimizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphstab/error.hpp"
#include "graphstab/lp_matching.hpp"

namespace graphstab {

namespace {
constexpr std::size_t kNoCycle = static_cast<std::size_t>(-1);
}

AuxiliaryGraph::Kind AuxiliaryGraph::kind(NodeId node) const noexcept {
  if (node < vertex_count) return Kind::Vertex;
  if (node == helper()) return Kind::Helper;
  if (node < pseudonode(0)) return Kind::Shadow;
  return Kind::Pseudonode;
}

VertexId AuxiliaryGraph::original(NodeId node) const noexcept {
  if (node < vertex_count) return node;
  if (kind(node) == Kind::Shadow) return node - shadow(0);
  return kNoVertex;
}

std::pair<VertexId, VertexId> AuxiliaryGraph::witness_of(NodeId a, NodeId b) const {
  if (a > b) {
    auto [first, second] = witness_of(b, a);
    return {second, first};
  }
  auto it = witness.find({a, b});
  if (it != witness.end()) return it->second;
  return {original(a), original(b)};
}

AuxiliaryGraph build_auxiliary(const WeightedGraph& g, const BasicFractionalMatching& x,
                               const FractionalVertexCover& y, const DeletedNodes& deleted) {
  if (!is_optimal_pair(g, x.x, y)) {
    throw Error(Errc::NotOptimalPair, "auxiliary graph needs a complementary-slack pair");
  }
  const std::size_t n = g.vertex_count();
  const DeletedNodes none(n);
  const DeletedNodes& gone = deleted.vertex.empty() ? none : deleted;

  AuxiliaryGraph aux;
  aux.vertex_count = n;
  aux.pseudonode_count = x.cycles.size();
  const std::size_t total = 2 * n + 1 + x.cycles.size();
  aux.graph = UnweightedGraph(total);
  aux.mate.assign(total, kNoNode);
  aux.present.assign(total, false);
  aux.cycle_of.assign(n, kNoCycle);
  aux.zero_cover_vertex.assign(x.cycles.size(), kNoVertex);

  for (std::size_t i = 0; i < x.cycles.size(); ++i) {
    const OddCycle& cycle = x.cycles[i];
    std::size_t removed = 0;
    for (VertexId v : cycle.vertices) {
      aux.cycle_of[v] = i;
      if (gone.vertex[v]) ++removed;
    }
    if (removed != 0 && removed != cycle.vertices.size()) {
      throw std::logic_error("frustrated tree split an odd cycle of the support");
    }
    aux.present[aux.pseudonode(i)] = removed == 0;
    for (VertexId v : cycle.vertices) {
      if (y.y[v] == 0) aux.zero_cover_vertex[i] = std::min(aux.zero_cover_vertex[i], v);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    aux.present[v] = aux.cycle_of[v] == kNoCycle && !gone.vertex[v];
  }
  aux.present[aux.helper()] = !gone.helper;

  auto node_of = [&](VertexId v) -> NodeId {
    return aux.cycle_of[v] == kNoCycle ? v : aux.pseudonode(aux.cycle_of[v]);
  };
  auto link = [&](NodeId a, NodeId b, VertexId ga, VertexId gb) {
    if (a == b || !aux.present[a] || !aux.present[b] || aux.graph.has_edge(a, b)) return;
    aux.graph.add_edge(a, b);
    if (aux.kind(a) == AuxiliaryGraph::Kind::Pseudonode ||
        aux.kind(b) == AuxiliaryGraph::Kind::Pseudonode) {
      if (a < b) {
        aux.witness[{a, b}] = {ga, gb};
      } else {
        aux.witness[{b, a}] = {gb, ga};
      }
    }
  };

  // (a) tight edges only, (e) with cycles shrunk.
  for (EdgeId e : tight_edges(g, y)) {
    const Edge& edge = g.edge(e);
    link(node_of(edge.u), node_of(edge.v), edge.u, edge.v);
  }
  // (b)-(d)
  for (VertexId v = 0; v < n; ++v) {
    if (y.y[v] != 0) continue;
    const Rational load = vertex_load(g, x.x, v);
    if (load == 1) {
      link(node_of(v), aux.helper(), v, kNoVertex);
    } else if (load == 0) {
      NodeId sv = aux.shadow(v);
      aux.present[sv] = !gone.shadow[v];
      link(v, sv, v, v);
      link(sv, aux.helper(), v, kNoVertex);
      if (aux.present[v] && aux.present[sv]) {
        aux.mate[v] = sv;
        aux.mate[sv] = v;
      }
    }
  }
  for (EdgeId e : x.matched) {
    const Edge& edge = g.edge(e);
    if (aux.present[edge.u] && aux.present[edge.v]) {
      aux.mate[edge.u] = edge.v;
      aux.mate[edge.v] = edge.u;
    }
  }
  return aux;
}

namespace {

std::size_t cycle_containing(const BasicFractionalMatching& x, VertexId v) {
  for (std::size_t i = 0; i < x.cycles.size(); ++i) {
    if (x.cycles[i].contains(v)) return i;
  }
  return kNoCycle;
}

void check_augmenting(const AuxiliaryGraph& aux, const std::vector<NodeId>& p) {
  if (p.size() < 2 || aux.mate.at(p.front()) != kNoNode || aux.mate.at(p.back()) != kNoNode) {
    throw Error(Errc::PathNotAugmenting, "endpoints of P' must be M'-exposed");
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!aux.graph.has_edge(p[i], p[i + 1])) {
      throw Error(Errc::PathNotAugmenting, "P' uses a non-edge of G'");
    }
    if ((aux.mate[p[i]] == p[i + 1]) != (i % 2 == 1)) {
      throw Error(Errc::PathNotAugmenting, "P' does not alternate with respect to M'");
    }
  }
}

}  // namespace

AugmentationResult apply_augmentation(const WeightedGraph& g, const BasicFractionalMatching& x,
                                      const FractionalVertexCover& y, const AuxiliaryGraph& aux,
                                      const AugmentingPath& path) {
  using Kind = AuxiliaryGraph::Kind;
  std::vector<NodeId> p = path.nodes;
  check_augmenting(aux, p);
  if (aux.kind(p.front()) != Kind::Pseudonode) std::reverse(p.begin(), p.end());
  if (aux.kind(p.front()) != Kind::Pseudonode ||
      (aux.kind(p.back()) != Kind::Pseudonode && aux.kind(p.back()) != Kind::Helper)) {
    throw Error(Errc::EndpointNotRecognized, "P' must start at a pseudonode and end at a pseudonode or z");
  }

  const std::size_t first_cycle = aux.cycle_index(p.front());
  AugmentationEvent event{};
  std::vector<VertexId> g_path;
  VertexId far_cycle_vertex = kNoVertex;

  if (p.size() == 2 && aux.kind(p.back()) == Kind::Helper) {
    event.kind = AugmentationEvent::Kind::CycleToHelper;
    VertexId v = aux.zero_cover_vertex[first_cycle];
    g_path.push_back(v);
  } else {
    std::size_t end = p.size();  // nodes [0, end) map into G
    if (aux.kind(p.back()) == Kind::Helper) {
      if (aux.kind(p[p.size() - 2]) == Kind::Shadow) {
        event.kind = AugmentationEvent::Kind::CycleToZeroExposed;
        end = p.size() - 2;  // strip vv' and v'z
      } else {
        event.kind = AugmentationEvent::Kind::CycleToZeroCovered;
        end = p.size() - 1;  // strip vz
      }
    } else {
      event.kind = AugmentationEvent::Kind::CycleToCycle;
    }
    g_path.push_back(aux.witness_of(p[0], p[1]).first);
    for (std::size_t i = 1; i < end; ++i) {
      if (aux.kind(p[i]) == Kind::Pseudonode) {
        if (i != end - 1) {
          throw Error(Errc::EndpointNotRecognized, "pseudonode inside an augmenting path");
        }
        far_cycle_vertex = aux.witness_of(p[i - 1], p[i]).second;
        g_path.push_back(far_cycle_vertex);
      } else {
        VertexId v = aux.original(p[i]);
        if (aux.kind(p[i]) != Kind::Vertex) {
          throw Error(Errc::EndpointNotRecognized, "unexpected gadget node inside P'");
        }
        g_path.push_back(v);
      }
    }
  }

  BasicFractionalMatching next = alternate_round(g, x, first_cycle, g_path.front());
  event.rounded_at.push_back(g_path.front());
  if (far_cycle_vertex != kNoVertex) {
    next = alternate_round(g, next, cycle_containing(next, far_cycle_vertex), far_cycle_vertex);
    event.rounded_at.push_back(far_cycle_vertex);
  }
  std::vector<EdgeId> path_edges;
  for (std::size_t i = 0; i + 1 < g_path.size(); ++i) {
    auto e = g.find_edge(g_path[i], g_path[i + 1]);
    if (!e) throw Error(Errc::PathNotAugmenting, "mapped path leaves G");
    path_edges.push_back(*e);
  }
  next = decompose(g, complement(next, path_edges));
  require_optimal_pair(g, next.x, y, "apply_augmentation");
  event.path = std::move(g_path);
  return AugmentationResult{std::move(next), std::move(event)};
}

CycleReduction reduce_cycles(const WeightedGraph& g) { return reduce_cycles(g, solve_fractional(g)); }

CycleReduction reduce_cycles(const WeightedGraph& g, FractionalSolution start) {
  require_optimal_pair(g, start.x.x, start.y, "reduce_cycles");
  BasicFractionalMatching x = decompose(g, start.x.x);
  const FractionalVertexCover y = std::move(start.y);
  CycleReduction out;
  out.initial_cycles = x.cycles.size();
  out.trajectory.push_back(x);
  const Rational value = x.value(g);
  DeletedNodes deleted(g.vertex_count());

  while (true) {
    AuxiliaryGraph aux = build_auxiliary(g, x, y, deleted);
    NodeId root = kNoNode;
    for (std::size_t i = 0; i < aux.pseudonode_count; ++i) {
      NodeId node = aux.pseudonode(i);
      if (aux.present[node] && aux.mate[node] == kNoNode) {
        root = node;
        break;
      }
    }
    if (root == kNoNode) break;

    GrowResult grown = grow_tree(aux.graph, aux.mate, root);
    if (const auto* found = std::get_if<AugmentingPath>(&grown)) {
      const std::size_t before = x.cycles.size();
      AugmentationResult step = apply_augmentation(g, x, y, aux, *found);
      const std::size_t removed = before - step.x.cycles.size();
      if (step.x.value(g) != value || step.x.cycles.size() >= before || removed > 2) {
        throw std::logic_error("augmentation did not remove one or two cycles at equal weight");
      }
      x = std::move(step.x);
      out.events.push_back(std::move(step.event));
      out.trajectory.push_back(x);
      continue;
    }

    const auto& tree = std::get<FrustratedTree>(grown);
    ++out.frustrated_trees;
    for (NodeId node : tree.nodes) {
      switch (aux.kind(node)) {
        case AuxiliaryGraph::Kind::Vertex: deleted.vertex[node] = true; break;
        case AuxiliaryGraph::Kind::Shadow: deleted.shadow[aux.original(node)] = true; break;
        case AuxiliaryGraph::Kind::Helper: deleted.helper = true; break;
        case AuxiliaryGraph::Kind::Pseudonode:
          for (VertexId v : x.cycles[aux.cycle_index(node)].vertices) deleted.vertex[v] = true;
          break;
      }
    }
  }

  out.gamma = x.cycles.size();
  out.x = std::move(x);
  out.y = y;
  return out;
}

}  // namespace graphstab
