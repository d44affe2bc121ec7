#include "graphstab/walk_dp.hpp"

#include <algorithm>

#include "graphstab/error.hpp"

namespace graphstab {

namespace {

bool improves(const WalkValue& candidate, const WalkValue& current) {
  return candidate && (!current || *candidate > *current);
}

}  // namespace

WalkTables optimal_walks(const WeightedGraph& g, const Matching& m, VertexId s, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (s >= n) throw Error(Errc::InvalidGraph, "source vertex out of range");
  WalkTables t;
  t.source = s;
  t.k = k;
  t.n = n;
  t.table1.resize((k + 1) * n);
  t.table2.resize((k + 1) * n);
  t.pred1.resize((k + 1) * n);
  t.pred2.resize((k + 1) * n);
  t.table1[s] = Rational(0);
  if (m.is_exposed(s)) t.table2[s] = Rational(0);

  // Row i is computed from row i-1 only, so both inner loops of an
  // iteration see the same y (the z-buffer of the textbook formulation).
  for (std::size_t i = 1; i <= k; ++i) {
    const WalkValue* y1 = &t.table1[(i - 1) * n];
    const WalkValue* y2 = &t.table2[(i - 1) * n];
    WalkValue* z1 = &t.table1[i * n];
    WalkValue* z2 = &t.table2[i * n];
    std::copy(y1, y1 + n, z1);
    std::copy(y2, y2 + n, z2);
    for (VertexId v = 0; v < n; ++v) {
      for (const Incidence& inc : g.incident(v)) {
        const Rational& w = g.edge(inc.edge).weight;
        const VertexId u = inc.neighbor;
        if (m.contains(u, v)) {
          if (y1[u] && improves(*y1[u] - w, z2[v])) {
            z2[v] = *y1[u] - w;
            t.pred2[i * n + v] = WalkTables::Predecessor{u, WalkTable::Unmatched, i - 1};
          }
        } else if (y2[u] && improves(*y2[u] + w, z1[v])) {
          z1[v] = *y2[u] + w;
          t.pred1[i * n + v] = WalkTables::Predecessor{u, WalkTable::Matched, i - 1};
        }
      }
    }
  }
  return t;
}

AlternatingWalk reconstruct_walk(const WalkTables& t, VertexId v, WalkTable table) {
  if (!t.entry(table, t.k, v)) {
    throw Error(Errc::EntryIsMinusInfinity, "no walk reaches this entry");
  }
  std::vector<VertexId> reversed{v};
  std::size_t i = t.k;
  while (true) {
    // The entry at snapshot i was last set by the latest improving iteration.
    std::size_t j = i;
    while (j > 0 && !t.predecessor(table, j, v)) --j;
    if (j == 0) break;  // initial value: the empty walk at the source
    const WalkTables::Predecessor& p = *t.predecessor(table, j, v);
    v = p.neighbor;
    table = p.source;
    i = p.iteration;
    reversed.push_back(v);
  }
  std::reverse(reversed.begin(), reversed.end());
  return AlternatingWalk{std::move(reversed)};
}

StructureReport detect_structures(const WeightedGraph& g, const Matching& m, VertexId u,
                                  std::optional<std::size_t> n) {
  if (u >= g.vertex_count() || !m.is_exposed(u)) {
    throw Error(Errc::VertexNotExposed, "walk search needs an M-exposed start vertex");
  }
  const std::size_t size = n.value_or(g.vertex_count());
  StructureReport report;

  const WalkTables long_walks = optimal_walks(g, m, u, 3 * size);
  if (const auto& value = long_walks.final_y1(u); value && *value > 0) {
    report.flower_at_u = true;
    report.flower_walk = reconstruct_walk(long_walks, u, WalkTable::Unmatched);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (m.is_exposed(v)) continue;
    if (const auto& value = long_walks.final_y2(v); value && *value > 0) {
      report.aug_path_to_covered = v;
      report.covered_walk = reconstruct_walk(long_walks, v, WalkTable::Matched);
      break;
    }
  }

  const WalkTables short_walks = optimal_walks(g, m, u, size);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == u || !m.is_exposed(v)) continue;
    if (const auto& value = short_walks.final_y1(v); value && *value > 0) {
      report.aug_path_to_exposed = v;
      report.exposed_walk = reconstruct_walk(short_walks, v, WalkTable::Unmatched);
      break;
    }
  }
  return report;
}

}  // namespace graphstab
