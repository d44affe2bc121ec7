#include "graphstab/walk.hpp"

#include "graphstab/error.hpp"

namespace graphstab {

std::vector<EdgeId> walk_edges(const WeightedGraph& g, const AlternatingWalk& walk) {
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
    auto e = g.find_edge(walk.vertices[i], walk.vertices[i + 1]);
    if (!e) throw Error(Errc::NotAlternating, "walk uses a non-edge");
    edges.push_back(*e);
  }
  return edges;
}

bool is_alternating(const WeightedGraph& g, const Matching& m, const AlternatingWalk& walk) {
  for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
    if (!g.find_edge(walk.vertices[i], walk.vertices[i + 1])) return false;
    if (i == 0) continue;
    bool prev = m.contains(walk.vertices[i - 1], walk.vertices[i]);
    bool cur = m.contains(walk.vertices[i], walk.vertices[i + 1]);
    if (prev == cur) return false;
  }
  return true;
}

bool is_valid_walk(const WeightedGraph& g, const Matching& m, const AlternatingWalk& walk) {
  if (walk.vertices.empty() || !is_alternating(g, m, walk)) return false;
  const auto& vs = walk.vertices;
  const std::size_t k = vs.size();
  bool start_ok = m.is_exposed(vs[0]) || (k > 1 && m.contains(vs[0], vs[1]));
  bool end_ok = m.is_exposed(vs[k - 1]) || (k > 1 && m.contains(vs[k - 2], vs[k - 1]));
  return start_ok && end_ok;
}

Rational walk_value(const WeightedGraph& g, const Matching& m, const AlternatingWalk& walk) {
  if (!is_alternating(g, m, walk)) throw Error(Errc::NotAlternating, "walk does not alternate");
  Rational value;
  for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
    VertexId a = walk.vertices[i];
    VertexId b = walk.vertices[i + 1];
    const Rational& w = g.edge(*g.find_edge(a, b)).weight;
    value += m.contains(a, b) ? -w : w;
  }
  return value;
}

}  // namespace graphstab
