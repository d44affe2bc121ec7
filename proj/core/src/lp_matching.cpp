#include "graphstab/lp_matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "graphstab/error.hpp"

namespace graphstab {

BipartiteDuplicate BipartiteDuplicate::of(const WeightedGraph& g) {
  BipartiteDuplicate dup;
  dup.side_size = g.vertex_count();
  dup.left_arcs.resize(dup.side_size);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    dup.arcs.push_back(Arc{edge.u, edge.v, edge.weight, e});
    dup.arcs.push_back(Arc{edge.v, edge.u, edge.weight, e});
  }
  for (std::size_t a = 0; a < dup.arcs.size(); ++a) dup.left_arcs[dup.arcs[a].left].push_back(a);
  for (auto& list : dup.left_arcs) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return dup.arcs[a].right < dup.arcs[b].right;
    });
  }
  return dup;
}

Rational DualPotentials::total() const {
  return std::accumulate(left.begin(), left.end(), Rational(0)) +
         std::accumulate(right.begin(), right.end(), Rational(0));
}

BipartiteSolution bipartite_max_weight_matching(const BipartiteDuplicate& dup) {
  const std::size_t n = dup.side_size;
  BipartiteSolution sol;
  auto& lm = sol.matching.left_mate;
  auto& rm = sol.matching.right_mate;
  lm.assign(n, kNoVertex);
  rm.assign(n, kNoVertex);
  std::vector<std::size_t> left_arc(n, 0);  // arc used by the left node's match

  Rational max_weight;
  for (const auto& arc : dup.arcs) max_weight = std::max(max_weight, arc.weight);
  auto& pl = sol.potentials.left;
  auto& pr = sol.potentials.right;
  pl.assign(n, max_weight);
  pr.assign(n, Rational(0));

  auto slack = [&](const BipartiteDuplicate::Arc& arc) {
    return pl[arc.left] + pr[arc.right] - arc.weight;
  };

  // Invariants: pl + pr >= w on every arc, equality on matched arcs, exposed
  // right nodes have potential 0 and exposed left nodes share the minimum
  // left potential. The loop ends once that common value reaches 0.
  while (true) {
    std::vector<VertexId> roots;
    for (VertexId i = 0; i < n; ++i) {
      if (lm[i] == kNoVertex && pl[i] > 0) roots.push_back(i);
    }
    if (roots.empty()) break;

    std::vector<bool> in_s(n, false), in_t(n, false);
    std::vector<std::size_t> right_pred(n, 0);  // arc that reached the right node
    std::vector<VertexId> queue;
    for (VertexId r : roots) {
      in_s[r] = true;
      queue.push_back(r);
    }
    std::optional<VertexId> exposed_right;
    for (std::size_t head = 0; head < queue.size() && !exposed_right; ++head) {
      VertexId i = queue[head];
      for (std::size_t a : dup.left_arcs[i]) {
        const auto& arc = dup.arcs[a];
        if (in_t[arc.right] || slack(arc) != 0) continue;
        in_t[arc.right] = true;
        right_pred[arc.right] = a;
        if (rm[arc.right] == kNoVertex) {
          exposed_right = arc.right;
          break;
        }
        VertexId next = rm[arc.right];
        if (!in_s[next]) {
          in_s[next] = true;
          queue.push_back(next);
        }
      }
    }

    if (exposed_right) {
      VertexId j = *exposed_right;
      while (true) {
        std::size_t a = right_pred[j];
        VertexId i = dup.arcs[a].left;
        VertexId previous = lm[i];
        lm[i] = j;
        rm[j] = i;
        left_arc[i] = a;
        if (previous == kNoVertex) break;
        j = previous;
      }
      continue;
    }

    std::optional<Rational> delta;
    for (VertexId i = 0; i < n; ++i) {
      if (!in_s[i]) continue;
      if (!delta || pl[i] < *delta) delta = pl[i];
      for (std::size_t a : dup.left_arcs[i]) {
        const auto& arc = dup.arcs[a];
        if (in_t[arc.right]) continue;
        Rational s = slack(arc);
        if (s < *delta) delta = s;
      }
    }
    for (VertexId i = 0; i < n; ++i) {
      if (in_s[i]) pl[i] -= *delta;
      if (in_t[i]) pr[i] += *delta;
    }
  }

  for (VertexId i = 0; i < n; ++i) {
    if (lm[i] == kNoVertex) continue;
    sol.matching.arcs.push_back(left_arc[i]);
    sol.matching.weight += dup.arcs[left_arc[i]].weight;
  }
  std::sort(sol.matching.arcs.begin(), sol.matching.arcs.end());
  return sol;
}

EdgeValues symmetrize(const BipartiteDuplicate& dup, const BipartiteMatching& matching) {
  EdgeValues x(dup.arcs.size() / 2, Rational(0));
  for (std::size_t a : matching.arcs) x[dup.arcs[a].original] += half();
  return x;
}

namespace {

// Orders the edges of a half-valued path or cycle component along it.
std::vector<EdgeId> order_component(const WeightedGraph& g, std::span<const Rational> x,
                                    VertexId start, std::vector<bool>& seen) {
  std::vector<EdgeId> order;
  VertexId cur = start;
  EdgeId last = std::numeric_limits<EdgeId>::max();
  seen[cur] = true;
  while (true) {
    std::optional<Incidence> step;
    for (const Incidence& inc : g.incident(cur)) {
      if (x[inc.edge] == half() && inc.edge != last) {
        step = inc;
        break;
      }
    }
    if (!step) break;
    order.push_back(step->edge);
    last = step->edge;
    cur = step->neighbor;
    if (seen[cur]) break;
    seen[cur] = true;
  }
  return order;
}

}  // namespace

BasicFractionalMatching normalize_to_basic(const WeightedGraph& g, std::span<const Rational> x) {
  const std::size_t n = g.vertex_count();
  EdgeValues values(x.begin(), x.end());
  std::vector<int> half_degree(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (x[e] == half()) {
      ++half_degree[g.edge(e).u];
      ++half_degree[g.edge(e).v];
    }
  }
  std::vector<bool> seen(n, false);
  auto round_component = [&](const std::vector<EdgeId>& order, bool odd_cycle) {
    if (odd_cycle) return;
    Rational even_weight, odd_weight;
    for (std::size_t i = 0; i < order.size(); ++i) {
      (i % 2 == 0 ? even_weight : odd_weight) += g.edge(order[i]).weight;
    }
    const Rational original = (even_weight + odd_weight) / 2;
    const auto lowest = std::min_element(order.begin(), order.end()) - order.begin();
    bool keep_even;
    if (even_weight != odd_weight) {
      keep_even = even_weight > odd_weight;
    } else {
      keep_even = lowest % 2 == 0;
    }
    if (std::max(even_weight, odd_weight) < original) {
      throw Error(Errc::WeightLoss, "both alternations are lighter than the half solution");
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      values[order[i]] = ((i % 2 == 0) == keep_even) ? Rational(1) : Rational(0);
    }
  };
  // Paths first, starting from their endpoints.
  for (VertexId v = 0; v < n; ++v) {
    if (half_degree[v] == 1 && !seen[v]) round_component(order_component(g, x, v, seen), false);
  }
  // Remaining components are cycles.
  for (VertexId v = 0; v < n; ++v) {
    if (half_degree[v] == 2 && !seen[v]) {
      auto order = order_component(g, x, v, seen);
      round_component(order, order.size() % 2 == 1);
    }
  }
  return decompose(g, values);
}

void require_optimal_pair(const WeightedGraph& g, std::span<const Rational> x,
                          const FractionalVertexCover& y, const char* where) {
  if (!is_optimal_pair(g, x, y)) {
    throw Error(Errc::NotOptimalPair, std::string("duality certificate failed in ") + where);
  }
}

FractionalSolution solve_fractional(const WeightedGraph& g) {
  const auto dup = BipartiteDuplicate::of(g);
  const auto bip = bipartite_max_weight_matching(dup);
  FractionalSolution sol;
  sol.x = normalize_to_basic(g, symmetrize(dup, bip.matching));
  sol.y.y.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sol.y.y[v] = (bip.potentials.left[v] + bip.potentials.right[v]) / 2;
  }
  require_optimal_pair(g, sol.x.x, sol.y, "solve_fractional");
  return sol;
}

}  // namespace graphstab
