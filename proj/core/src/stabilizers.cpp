#include "graphstab/stabilizers.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphstab/lp_matching.hpp"
#include "graphstab/oracle.hpp"

namespace graphstab {

VertexStabilizerResult min_vertex_stabilizer(const WeightedGraph& g) {
  VertexStabilizerResult out;
  out.reduction = reduce_cycles(g);
  const FractionalVertexCover& y = out.reduction.y;

  BasicFractionalMatching x = out.reduction.x;
  std::vector<VertexId> chosen;
  for (const OddCycle& cycle : out.reduction.x.cycles) {
    VertexId best = cycle.vertices.front();
    for (VertexId v : cycle.vertices) {
      if (y.y[v] < y.y[best] || (y.y[v] == y.y[best] && v < best)) best = v;
    }
    chosen.push_back(best);
  }
  for (VertexId v : chosen) {
    auto it = std::find_if(x.cycles.begin(), x.cycles.end(),
                           [v](const OddCycle& c) { return c.contains(v); });
    x = alternate_round(g, x, static_cast<std::size_t>(it - x.cycles.begin()), v);
  }
  std::sort(chosen.begin(), chosen.end());
  out.S = chosen;

  out.surviving = x.matching(g);
  out.surviving_cover = y;
  for (VertexId v : out.S) {
    if (!out.surviving.is_exposed(v)) throw std::logic_error("removed vertex is still matched");
    out.surviving_cover.y[v] = 0;
  }
  out.nu_after = out.surviving.weight(g);
  if (out.nu_after != out.surviving_cover.total()) {
    throw std::logic_error("surviving matching does not certify stability");
  }
  if (g.vertex_count() <= OracleBudget{}.max_vertices) out.nu_before = exact_nu(g).value;
  return out;
}

EdgeStabilizerResult edge_stabilizer_approx(const WeightedGraph& g) {
  VertexStabilizerResult vertex = min_vertex_stabilizer(g);
  EdgeStabilizerResult out;
  for (VertexId v : vertex.S) {
    for (const Incidence& inc : g.incident(v)) out.F.push_back(inc.edge);
  }
  std::sort(out.F.begin(), out.F.end());
  out.F.erase(std::unique(out.F.begin(), out.F.end()), out.F.end());
  out.gamma = vertex.S.size();
  out.lower_bound = (out.gamma + 1) / 2;
  out.upper_bound = out.gamma * g.max_degree();
  out.surviving = std::move(vertex.surviving);
  out.surviving_cover = std::move(vertex.surviving_cover);
  return out;
}

GammaBounds gamma_lower_bounds(const WeightedGraph& g) {
  const std::size_t gamma = reduce_cycles(g).gamma;
  return GammaBounds{gamma, gamma, (gamma + 1) / 2};
}

}  // namespace graphstab
