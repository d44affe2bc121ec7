#include "graphstab/graph.hpp"

#include <algorithm>

#include "graphstab/error.hpp"

namespace graphstab {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<std::string> labels)
    : labels_(std::move(labels)), adjacency_(vertex_count) {
  if (labels_.empty()) {
    labels_.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != vertex_count) {
    throw Error(Errc::InvalidGraph, "label count does not match vertex count");
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::InvalidGraph, "duplicate vertex label");
  }
}

EdgeId WeightedGraph::add_edge(VertexId u, VertexId v, Rational weight) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(Errc::InvalidGraph, "edge endpoint out of range");
  }
  if (u == v) throw Error(Errc::InvalidGraph, "loop at vertex " + labels_[u]);
  if (weight < 0) throw Error(Errc::InvalidGraph, "negative weight on edge " + labels_[u] + "-" + labels_[v]);
  if (find_edge(u, v)) {
    throw Error(Errc::InvalidGraph, "parallel edge " + labels_[u] + "-" + labels_[v]);
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, weight});
  auto insert = [](std::vector<Incidence>& list, Incidence inc) {
    auto pos = std::lower_bound(list.begin(), list.end(), inc.neighbor,
                                [](const Incidence& a, VertexId b) { return a.neighbor < b; });
    list.insert(pos, inc);
  };
  insert(adjacency_[u], Incidence{v, id});
  insert(adjacency_[v], Incidence{u, id});
  return id;
}

std::size_t WeightedGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::optional<EdgeId> WeightedGraph::find_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& list = adjacency_[u];
  auto pos = std::lower_bound(list.begin(), list.end(), v,
                              [](const Incidence& a, VertexId b) { return a.neighbor < b; });
  if (pos != list.end() && pos->neighbor == v) return pos->edge;
  return std::nullopt;
}

std::optional<VertexId> WeightedGraph::find_vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

WeightedGraph WeightedGraph::without_vertices(std::span<const VertexId> removed) const {
  std::vector<bool> gone(vertex_count(), false);
  for (VertexId v : removed) gone.at(v) = true;
  WeightedGraph result(vertex_count(), labels_);
  for (const Edge& e : edges_) {
    if (!gone[e.u] && !gone[e.v]) result.add_edge(e.u, e.v, e.weight);
  }
  return result;
}

WeightedGraph WeightedGraph::without_edges(std::span<const EdgeId> removed) const {
  std::vector<bool> gone(edge_count(), false);
  for (EdgeId e : removed) gone.at(e) = true;
  WeightedGraph result(vertex_count(), labels_);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (!gone[e]) result.add_edge(edges_[e].u, edges_[e].v, edges_[e].weight);
  }
  return result;
}

Rational WeightedGraph::dot(std::span<const Rational> values) const {
  Rational total;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (values[e] != 0) total += edges_[e].weight * values[e];
  }
  return total;
}

Matching Matching::from_edges(const WeightedGraph& g, std::span<const EdgeId> edges) {
  Matching m(g.vertex_count());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (!m.is_exposed(e.u) || !m.is_exposed(e.v)) {
      throw Error(Errc::InvalidMatching, "edges share vertex " +
                                             g.label(m.is_exposed(e.u) ? e.v : e.u));
    }
    m.match(e.u, e.v);
  }
  return m;
}

std::size_t Matching::size() const noexcept {
  std::size_t count = 0;
  for (VertexId v = 0; v < mate_.size(); ++v) {
    if (mate_[v] != kNoVertex && v < mate_[v]) ++count;
  }
  return count;
}

void Matching::match(VertexId u, VertexId v) {
  mate_.at(u) = v;
  mate_.at(v) = u;
}

void Matching::unmatch(VertexId v) {
  VertexId u = mate_.at(v);
  if (u == kNoVertex) return;
  mate_[u] = kNoVertex;
  mate_[v] = kNoVertex;
}

std::vector<EdgeId> Matching::edges(const WeightedGraph& g) const {
  std::vector<EdgeId> result;
  for (VertexId v = 0; v < mate_.size(); ++v) {
    if (mate_[v] == kNoVertex || mate_[v] < v) continue;
    auto e = g.find_edge(v, mate_[v]);
    if (!e) throw Error(Errc::InvalidMatching, "mate pair is not an edge");
    result.push_back(*e);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Rational Matching::weight(const WeightedGraph& g) const {
  Rational total;
  for (EdgeId e : edges(g)) total += g.edge(e).weight;
  return total;
}

bool is_matching_of(const WeightedGraph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count()) return false;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    VertexId u = m.mate(v);
    if (u == kNoVertex) continue;
    if (u >= m.vertex_count() || u == v || m.mate(u) != v || !g.find_edge(u, v)) return false;
  }
  return true;
}

}  // namespace graphstab
