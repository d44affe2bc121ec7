#include "graphstab/fractional.hpp"

#include <algorithm>
#include <numeric>

#include "graphstab/error.hpp"

namespace graphstab {

bool OddCycle::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Rational FractionalVertexCover::total() const {
  return std::accumulate(y.begin(), y.end(), Rational(0));
}

Rational vertex_load(const WeightedGraph& g, std::span<const Rational> x, VertexId v) {
  Rational load;
  for (const Incidence& inc : g.incident(v)) load += x[inc.edge];
  return load;
}

namespace {

void check_size(const WeightedGraph& g, std::span<const Rational> x) {
  if (x.size() != g.edge_count()) {
    throw Error(Errc::NotHalfIntegral, "value vector length does not match edge count");
  }
}

std::vector<Incidence> half_incidences(const WeightedGraph& g, std::span<const Rational> x,
                                       VertexId v) {
  std::vector<Incidence> out;
  for (const Incidence& inc : g.incident(v)) {
    if (x[inc.edge] == half()) out.push_back(inc);
  }
  return out;
}

// Traces the half-edge component containing `start`, in which every vertex
// has half degree exactly 2, and returns it in canonical order.
OddCycle trace_cycle(const WeightedGraph& g, std::span<const Rational> x, VertexId start,
                     std::vector<bool>& seen) {
  VertexId first = start;
  std::vector<VertexId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    first = std::min(first, v);
    for (const Incidence& inc : half_incidences(g, x, v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        stack.push_back(inc.neighbor);
      }
    }
  }
  OddCycle cycle;
  // Incidence lists are sorted, so [0] is the smaller neighbor.
  Incidence step = half_incidences(g, x, first)[0];
  VertexId prev = first;
  cycle.vertices.push_back(first);
  cycle.edges.push_back(step.edge);
  for (VertexId cur = step.neighbor; cur != first;) {
    cycle.vertices.push_back(cur);
    auto next = half_incidences(g, x, cur);
    step = next[0].neighbor != prev ? next[0] : next[1];
    cycle.edges.push_back(step.edge);
    prev = cur;
    cur = step.neighbor;
  }
  return cycle;
}

}  // namespace

BasicFractionalMatching decompose(const WeightedGraph& g, std::span<const Rational> x) {
  check_size(g, x);
  BasicFractionalMatching result;
  result.x.assign(x.begin(), x.end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (x[e] != 0 && x[e] != half() && x[e] != 1) {
      throw Error(Errc::NotHalfIntegral, "x on edge " + g.label(g.edge(e).u) + "-" +
                                             g.label(g.edge(e).v) + " is " + to_string(x[e]));
    }
    if (x[e] == 1) result.matched.push_back(e);
  }
  const std::size_t n = g.vertex_count();
  std::vector<int> half_degree(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (vertex_load(g, x, v) > 1) {
      throw Error(Errc::DegreeConstraintViolated, "x(delta(" + g.label(v) + ")) exceeds 1");
    }
    for (const Incidence& inc : g.incident(v)) {
      if (x[inc.edge] == half()) ++half_degree[v];
    }
  }
  // Half-edges induce a graph of max degree 2; it is basic iff every
  // component is an odd cycle, i.e. every touched vertex has half degree 2
  // and each cycle is odd.
  for (VertexId v = 0; v < n; ++v) {
    if (half_degree[v] == 1) {
      throw Error(Errc::NotBasic, "half-valued edges form a path ending at " + g.label(v));
    }
  }
  std::vector<bool> seen(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (half_degree[v] != 2 || seen[v]) continue;
    OddCycle cycle = trace_cycle(g, x, v, seen);
    if (cycle.vertices.size() % 2 == 0) {
      throw Error(Errc::NotBasic, "half-valued edges form an even cycle through " + g.label(v));
    }
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

BasicFractionalMatching alternate_round(const WeightedGraph& g, const BasicFractionalMatching& x,
                                        std::size_t cycle_index, VertexId v) {
  if (cycle_index >= x.cycles.size()) {
    throw Error(Errc::CycleNotInSupport, "no cycle with index " + std::to_string(cycle_index));
  }
  const OddCycle& cycle = x.cycles[cycle_index];
  auto pos = std::find(cycle.vertices.begin(), cycle.vertices.end(), v);
  if (pos == cycle.vertices.end()) {
    throw Error(Errc::VertexNotOnCycle, "vertex " + g.label(v) + " is not on the cycle");
  }
  const std::size_t len = cycle.vertices.size();
  const auto start = static_cast<std::size_t>(pos - cycle.vertices.begin());
  EdgeValues values = x.x;
  // edges[start] leaves v; edges at even offsets from it (the ones touching v
  // included) go to 0, the rest to 1.
  for (std::size_t offset = 0; offset < len; ++offset) {
    values[cycle.edges[(start + offset) % len]] = offset % 2 == 0 ? Rational(0) : Rational(1);
  }
  return decompose(g, values);
}

EdgeValues complement(const BasicFractionalMatching& x, std::span<const EdgeId> edges) {
  EdgeValues values = x.x;
  for (EdgeId e : edges) {
    if (values.at(e) == half()) {
      throw Error(Errc::HalfValueOnPath, "cannot complement a half-valued edge");
    }
    values[e] = 1 - values[e];
  }
  return values;
}

std::vector<std::vector<EdgeId>> support_components(const WeightedGraph& g,
                                                    std::span<const Rational> x,
                                                    std::span<const Rational> x2) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<EdgeId> support;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (x[e] + x2[e] == 0) continue;
    support.push_back(e);
    VertexId a = find(g.edge(e).u);
    VertexId b = find(g.edge(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<EdgeId>> by_root(n);
  for (EdgeId e : support) by_root[find(g.edge(e).u)].push_back(e);
  std::vector<std::vector<EdgeId>> result;
  for (auto& comp : by_root) {
    if (!comp.empty()) result.push_back(std::move(comp));
  }
  return result;
}

BasicFractionalMatching switch_component(const WeightedGraph& g, const BasicFractionalMatching& x,
                                         const BasicFractionalMatching& x2,
                                         std::span<const EdgeId> component) {
  std::vector<EdgeId> wanted(component.begin(), component.end());
  std::sort(wanted.begin(), wanted.end());
  bool found = false;
  for (const auto& comp : support_components(g, x.x, x2.x)) {
    if (comp == wanted) {
      found = true;
      break;
    }
  }
  if (!found) throw Error(Errc::NotAComponent, "edge set is not a component of supp(x + x2)");
  EdgeValues values = x.x;
  for (EdgeId e : wanted) values[e] = x2.x[e];
  return decompose(g, values);
}

bool is_cover(const WeightedGraph& g, const FractionalVertexCover& y) {
  if (y.y.size() != g.vertex_count()) return false;
  for (const Rational& value : y.y) {
    if (value < 0) return false;
  }
  for (const Edge& e : g.edges()) {
    if (y.y[e.u] + y.y[e.v] < e.weight) return false;
  }
  return true;
}

std::vector<EdgeId> tight_edges(const WeightedGraph& g, const FractionalVertexCover& y) {
  if (!is_cover(g, y)) throw Error(Errc::InfeasibleCover, "y is not a fractional w-vertex cover");
  std::vector<EdgeId> tight;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (y.y[edge.u] + y.y[edge.v] == edge.weight) tight.push_back(e);
  }
  return tight;
}

bool is_optimal_pair(const WeightedGraph& g, std::span<const Rational> x,
                     const FractionalVertexCover& y) {
  if (x.size() != g.edge_count() || !is_cover(g, y)) return false;
  for (const Rational& value : x) {
    if (value < 0) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Rational load = vertex_load(g, x, v);
    if (load > 1) return false;
    if (y.y[v] > 0 && load != 1) return false;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (x[e] > 0 && y.y[edge.u] + y.y[edge.v] != edge.weight) return false;
  }
  return g.dot(x) == y.total();
}

}  // namespace graphstab
