#include "graphstab/m_stabilizer.hpp"

#include <algorithm>
#include <numeric>

#include "graphstab/error.hpp"
#include "graphstab/lp_matching.hpp"

namespace graphstab {

MStabilizerResult m_vertex_stabilizer(const WeightedGraph& g, const Matching& m,
                                      const MStabilizerOptions& options) {
  if (!is_matching_of(g, m)) throw Error(Errc::MNotAMatching, "M is not a matching of G");
  const std::size_t n = g.vertex_count();
  MStabilizerResult out;
  std::vector<bool> removed(n, false);
  WeightedGraph current = g;

  auto scan_order = [&] {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    if (options.descending) std::reverse(order.begin(), order.end());
    return order;
  };
  auto alive = [&] { return static_cast<std::size_t>(std::count(removed.begin(), removed.end(), false)); };
  auto remove = [&](VertexId v) {
    removed[v] = true;
    std::vector<VertexId> gone;
    for (VertexId x = 0; x < n; ++x) {
      if (removed[x]) gone.push_back(x);
    }
    current = g.without_vertices(gone);
  };

  for (VertexId u : scan_order()) {
    if (removed[u] || !m.is_exposed(u)) continue;
    StructureReport report = detect_structures(current, m, u, alive());
    if (report.flower_at_u || report.aug_path_to_covered) {
      const bool flower = report.flower_at_u;
      out.removals.push_back({u, false, flower ? *report.flower_walk : *report.covered_walk, flower});
      out.S1.push_back(u);
      remove(u);
    }
  }
  for (VertexId u : scan_order()) {
    if (removed[u] || !m.is_exposed(u)) continue;
    StructureReport report = detect_structures(current, m, u, alive());
    if (report.aug_path_to_exposed) {
      const VertexId v = *report.aug_path_to_exposed;
      out.removals.push_back({u, true, *report.exposed_walk, false});
      out.removals.push_back({v, true, *report.exposed_walk, false});
      out.S2.push_back(u);
      out.S2.push_back(v);
      remove(u);
      remove(v);
    }
  }

  std::sort(out.S1.begin(), out.S1.end());
  std::sort(out.S2.begin(), out.S2.end());
  std::merge(out.S1.begin(), out.S1.end(), out.S2.begin(), out.S2.end(), std::back_inserter(out.S));
  out.residual_nu_f = solve_fractional(current).x.value(current);
  if (m.weight(g) < out.residual_nu_f) out.status = MStabilizerResult::Status::Infeasible;
  return out;
}

}  // namespace graphstab
