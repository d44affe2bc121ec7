#include "graphstab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

#include "graphstab/error.hpp"

namespace graphstab {

namespace {

using Mask = std::uint32_t;

void check_size(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(Errc::BudgetExceeded, std::string(what) + ": " + std::to_string(n) +
                                          " exceeds the budget of " + std::to_string(limit));
  }
}

struct Best {
  Rational value;
  std::size_t cycles = 0;
};

struct CycleOption {
  Mask vertices;
  Rational half_weight;
  std::vector<VertexId> order;
  friend bool operator<(const CycleOption& a, const CycleOption& b) { return a.vertices < b.vertices; }
};

/// Heaviest odd cycle on each vertex set, grouped by the set's lowest vertex.
std::vector<std::vector<CycleOption>> odd_cycles_by_min(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::unordered_map<Mask, std::pair<Rational, std::vector<VertexId>>> heaviest;
  std::vector<VertexId> path;
  // Cycles start at their lowest vertex s and only visit larger vertices;
  // each is found twice (once per direction), which is harmless.
  for (VertexId s = 0; s < n; ++s) {
    auto dfs = [&](auto&& self, VertexId v, Mask seen, Rational weight) -> void {
      for (const Incidence& inc : g.incident(v)) {
        const VertexId u = inc.neighbor;
        const Rational& w = g.edge(inc.edge).weight;
        if (u == s && path.size() >= 3 && path.size() % 2 == 1) {
          auto [it, fresh] = heaviest.try_emplace(seen, weight + w, path);
          if (!fresh && it->second.first < weight + w) it->second = {weight + w, path};
        }
        if (u <= s || (seen >> u & 1U)) continue;
        path.push_back(u);
        self(self, u, seen | Mask{1} << u, weight + w);
        path.pop_back();
      }
    };
    path.assign(1, s);
    dfs(dfs, s, Mask{1} << s, Rational(0));
  }
  std::vector<std::vector<CycleOption>> out(n);
  for (const auto& [mask, cycle] : heaviest) {
    out[std::countr_zero(mask)].push_back({mask, cycle.first / 2, cycle.second});
  }
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

/// Memoized optimum over basic solutions on the vertex subsets of g.
class BasicSolver {
 public:
  BasicSolver(const WeightedGraph& g, bool with_cycles, bool most_cycles = false)
      : g_(g), most_cycles_(most_cycles), memo_(std::size_t{1} << g.vertex_count()),
        done_(memo_.size(), false) {
    if (with_cycles) cycles_ = odd_cycles_by_min(g);
  }

  Best solve(Mask mask) {
    if (mask == 0) return {};
    if (done_[mask]) return memo_[mask];
    const VertexId v = static_cast<VertexId>(std::countr_zero(mask));
    const Mask rest = mask & ~(Mask{1} << v);
    Best best = solve(rest);
    for (const Incidence& inc : g_.incident(v)) {
      if (!(rest >> inc.neighbor & 1U)) continue;
      Best option = solve(rest & ~(Mask{1} << inc.neighbor));
      option.value += g_.edge(inc.edge).weight;
      if (better(option, best)) best = option;
    }
    if (!cycles_.empty()) {
      for (const CycleOption& c : cycles_[v]) {
        if ((c.vertices & mask) != c.vertices) continue;
        Best option = solve(mask & ~c.vertices);
        option.value += c.half_weight;
        option.cycles += 1;
        if (better(option, best)) best = option;
      }
    }
    done_[mask] = true;
    return memo_[mask] = best;
  }

  Best solve_all() { return solve(all()); }
  Mask all() const { return static_cast<Mask>((std::size_t{1} << g_.vertex_count()) - 1); }

  /// Edge values of an optimum realizing solve(mask), by walking the memo.
  EdgeValues witness() {
    EdgeValues x(g_.edge_count(), Rational(0));
    Mask mask = all();
    while (mask != 0) {
      const Best target = solve(mask);
      const VertexId v = static_cast<VertexId>(std::countr_zero(mask));
      const Mask rest = mask & ~(Mask{1} << v);
      if (same(solve(rest), target)) {
        mask = rest;
        continue;
      }
      bool found = false;
      for (const Incidence& inc : g_.incident(v)) {
        if (!(rest >> inc.neighbor & 1U)) continue;
        const Mask next = rest & ~(Mask{1} << inc.neighbor);
        Best option = solve(next);
        option.value += g_.edge(inc.edge).weight;
        if (same(option, target)) {
          x[inc.edge] = 1;
          mask = next;
          found = true;
          break;
        }
      }
      if (found || cycles_.empty()) continue;
      for (const CycleOption& c : cycles_[v]) {
        if ((c.vertices & mask) != c.vertices) continue;
        Best option = solve(mask & ~c.vertices);
        option.value += c.half_weight;
        option.cycles += 1;
        if (!same(option, target)) continue;
        for (std::size_t i = 0; i < c.order.size(); ++i) {
          x[*g_.find_edge(c.order[i], c.order[(i + 1) % c.order.size()])] = half();
        }
        mask &= ~c.vertices;
        break;
      }
    }
    return x;
  }

 private:
  static bool same(const Best& a, const Best& b) { return a.value == b.value && a.cycles == b.cycles; }
  bool better(const Best& a, const Best& b) const {
    if (a.value != b.value) return a.value > b.value;
    return most_cycles_ ? a.cycles > b.cycles : a.cycles < b.cycles;
  }

  const WeightedGraph& g_;
  bool most_cycles_;
  std::vector<std::vector<CycleOption>> cycles_;
  std::vector<Best> memo_;
  std::vector<bool> done_;
};

template <typename Id, typename Test>
std::optional<std::vector<Id>> smallest_subset(const std::vector<Id>& universe, Test works) {
  const std::size_t size = universe.size();
  for (std::size_t r = 0; r <= size; ++r) {
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
      std::vector<Id> chosen;
      for (std::size_t i : pick) chosen.push_back(universe[i]);
      if (works(chosen)) return chosen;
      // next combination in lexicographic order
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == size - r + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

NuResult exact_nu(const WeightedGraph& g, const OracleBudget& budget) {
  const std::size_t n = g.vertex_count();
  check_size(n, budget.max_vertices, "exact_nu");
  BasicSolver solver(g, false);
  const Mask all = static_cast<Mask>((std::size_t{1} << n) - 1);
  NuResult out{solver.solve(all).value, Matching(n)};
  // Walk the memo back down to recover one optimal matching.
  Mask mask = all;
  while (mask != 0) {
    const VertexId v = static_cast<VertexId>(std::countr_zero(mask));
    const Mask rest = mask & ~(Mask{1} << v);
    const Rational target = solver.solve(mask).value;
    if (solver.solve(rest).value == target) {
      mask = rest;
      continue;
    }
    for (const Incidence& inc : g.incident(v)) {
      if (!(rest >> inc.neighbor & 1U)) continue;
      const Mask next = rest & ~(Mask{1} << inc.neighbor);
      if (solver.solve(next).value + g.edge(inc.edge).weight == target) {
        out.matching.match(v, inc.neighbor);
        mask = next;
        break;
      }
    }
  }
  return out;
}

Rational exact_nu_f(const WeightedGraph& g, const OracleBudget& budget) {
  check_size(g.vertex_count(), budget.max_vertices, "exact_nu_f");
  return BasicSolver(g, true).solve_all().value;
}

std::size_t brute_gamma(const WeightedGraph& g, const OracleBudget& budget) {
  check_size(g.vertex_count(), budget.max_vertices, "brute_gamma");
  return BasicSolver(g, true).solve_all().cycles;
}

BasicFractionalMatching brute_basic_optimum(const WeightedGraph& g, CyclePreference preference,
                                            const OracleBudget& budget) {
  check_size(g.vertex_count(), budget.max_vertices, "brute_basic_optimum");
  BasicSolver solver(g, true, preference == CyclePreference::Most);
  return decompose(g, solver.witness());
}

bool is_stable(const WeightedGraph& g, const OracleBudget& budget) {
  return exact_nu(g, budget).value == exact_nu_f(g, budget);
}

std::vector<VertexId> brute_min_vertex_stabilizer(const WeightedGraph& g,
                                                  const OracleBudget& budget) {
  check_size(g.vertex_count(), budget.max_subset_vertices, "brute_min_vertex_stabilizer");
  std::vector<VertexId> vertices(g.vertex_count());
  for (VertexId v = 0; v < vertices.size(); ++v) vertices[v] = v;
  return *smallest_subset(vertices, [&](const std::vector<VertexId>& s) {
    return is_stable(g.without_vertices(s), budget);
  });
}

std::vector<EdgeId> brute_min_edge_stabilizer(const WeightedGraph& g, const OracleBudget& budget) {
  check_size(g.vertex_count(), budget.max_subset_vertices, "brute_min_edge_stabilizer");
  std::vector<EdgeId> edges(g.edge_count());
  for (EdgeId e = 0; e < edges.size(); ++e) edges[e] = e;
  return *smallest_subset(edges, [&](const std::vector<EdgeId>& f) {
    return is_stable(g.without_edges(f), budget);
  });
}

std::optional<std::vector<VertexId>> brute_min_m_stabilizer(const WeightedGraph& g,
                                                            const Matching& m,
                                                            const OracleBudget& budget) {
  check_size(g.vertex_count(), budget.max_subset_vertices, "brute_min_m_stabilizer");
  if (!is_matching_of(g, m)) throw Error(Errc::MNotAMatching, "M is not a matching of G");
  std::vector<VertexId> exposed;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (m.is_exposed(v)) exposed.push_back(v);
  }
  const Rational weight = m.weight(g);
  return smallest_subset(exposed, [&](const std::vector<VertexId>& s) {
    const WeightedGraph rest = g.without_vertices(s);
    const Rational nu = exact_nu(rest, budget).value;
    return nu == weight && nu == exact_nu_f(rest, budget);
  });
}

namespace {

/// Depth-first search over valid M-alternating walks from s with at most k
/// edges; calls visit(walk, value) for each one.
template <typename Visit>
void for_each_valid_walk(const WeightedGraph& g, const Matching& m, VertexId s, std::size_t k,
                         const OracleBudget& budget, Visit&& visit) {
  if (k > budget.max_walk_length) {
    throw Error(Errc::BudgetExceeded, "walk length " + std::to_string(k) + " exceeds the budget");
  }
  if (s >= g.vertex_count()) throw Error(Errc::InvalidGraph, "source vertex out of range");
  std::vector<VertexId> walk{s};
  std::size_t visited = 0;

  // `matched_next`: whether the next edge must be in M.
  auto dfs = [&](auto&& self, const Rational& value, bool matched_next) -> void {
    if (++visited > budget.max_walks) throw Error(Errc::BudgetExceeded, "too many walks");
    const VertexId v = walk.back();
    const bool last_matched = walk.size() > 1 && !matched_next;
    if (m.is_exposed(v) ? (walk.size() > 1 || m.is_exposed(s)) : last_matched) {
      visit(walk, value);
    }
    if (walk.size() > k) return;
    for (const Incidence& inc : g.incident(v)) {
      if (m.contains(v, inc.neighbor) != matched_next) continue;
      const Rational& w = g.edge(inc.edge).weight;
      walk.push_back(inc.neighbor);
      self(self, matched_next ? value - w : value + w, !matched_next);
      walk.pop_back();
    }
  };
  dfs(dfs, Rational(0), !m.is_exposed(s));
}

}  // namespace

std::vector<EnumeratedWalk> enumerate_valid_walks(const WeightedGraph& g, const Matching& m,
                                                  VertexId s, std::size_t k,
                                                  const OracleBudget& budget) {
  std::vector<EnumeratedWalk> out;
  for_each_valid_walk(g, m, s, k, budget, [&](const std::vector<VertexId>& walk, const Rational& value) {
    out.push_back({walk.back(), value, AlternatingWalk{walk}});
  });
  return out;
}

std::vector<std::vector<std::optional<Rational>>> valid_walk_maxima(
    const WeightedGraph& g, const Matching& m, VertexId s, std::size_t k,
    const OracleBudget& budget) {
  std::vector<std::vector<std::optional<Rational>>> best(
      k + 1, std::vector<std::optional<Rational>>(g.vertex_count()));
  for_each_valid_walk(g, m, s, k, budget, [&](const std::vector<VertexId>& walk, const Rational& value) {
    auto& slot = best[walk.size() - 1][walk.back()];
    if (!slot || value > *slot) slot = value;
  });
  for (std::size_t i = 1; i <= k; ++i) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto& shorter = best[i - 1][v];
      if (shorter && (!best[i][v] || *shorter > *best[i][v])) best[i][v] = shorter;
    }
  }
  return best;
}

std::vector<std::optional<Rational>> best_valid_walks(const WeightedGraph& g, const Matching& m,
                                                      VertexId s, std::size_t k,
                                                      const OracleBudget& budget) {
  std::vector<std::optional<Rational>> best(g.vertex_count());
  for (const EnumeratedWalk& w : enumerate_valid_walks(g, m, s, k, budget)) {
    if (!best[w.endpoint] || w.value > *best[w.endpoint]) best[w.endpoint] = w.value;
  }
  return best;
}

}  // namespace graphstab
