#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/io/instance.hpp"

namespace graphstab::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(GRAPHSTAB_FIXTURE_DIR) + "/" + name + ".json";
}

inline io::Instance fixture(const std::string& name) { return io::load_instance(fixture_path(name)); }

struct E {
  VertexId u;
  VertexId v;
  Rational w;
};

inline WeightedGraph make_graph(std::size_t n, std::initializer_list<E> edges) {
  WeightedGraph g(n);
  for (const E& e : edges) g.add_edge(e.u, e.v, e.w);
  return g;
}

inline VertexId vid(const WeightedGraph& g, const std::string& label) {
  return g.find_vertex(label).value();
}

inline EdgeId eid(const WeightedGraph& g, const std::string& a, const std::string& b) {
  return g.find_edge(vid(g, a), vid(g, b)).value();
}

inline std::vector<std::string> names(const WeightedGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

inline Matching matching_of(const WeightedGraph& g,
                            std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<EdgeId> edges;
  for (auto [u, v] : pairs) edges.push_back(g.find_edge(u, v).value());
  return Matching::from_edges(g, edges);
}

}  // namespace graphstab::testing
