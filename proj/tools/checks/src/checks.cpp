#include "graphstab/checks/checks.hpp"

#include <algorithm>
#include <sstream>

#include "graphstab/cycle_minimizer.hpp"
#include "graphstab/error.hpp"
#include "graphstab/lp_matching.hpp"
#include "graphstab/m_stabilizer.hpp"
#include "graphstab/oracle.hpp"
#include "graphstab/stabilizers.hpp"
#include "graphstab/walk_dp.hpp"

namespace graphstab::checks {

namespace {

constexpr std::size_t kMaxFailures = 20;

// Exceptions inside one case become failures instead of aborting the suite.
template <typename F>
void guarded(Report& report, const WeightedGraph& g, F&& body) {
  ++report.cases;
  try {
    body();
  } catch (const std::exception& e) {
    report.fail(describe(g) + ": threw " + e.what());
  }
}

bool certifies(const WeightedGraph& g, const Matching& m, const FractionalVertexCover& y) {
  return is_matching_of(g, m) && is_cover(g, y) && m.weight(g) == y.total();
}

}  // namespace

void Report::fail(std::string what) {
  if (failures.size() < kMaxFailures) failures.push_back(std::move(what));
  else if (failures.size() == kMaxFailures) failures.push_back("... further failures omitted");
}

void Report::merge(const Report& other) {
  cases += other.cases;
  for (const auto& f : other.failures) fail(f);
  for (const auto& [key, count] : other.counters) counters[key] += count;
}

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, int max_weight) {
  WeightedGraph g(n);
  std::bernoulli_distribution keep(p);
  std::uniform_int_distribution<int> weight(1, max_weight);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (keep(rng)) g.add_edge(u, v, Rational(weight(rng)));
    }
  }
  return g;
}

Matching random_matching(std::mt19937_64& rng, const WeightedGraph& g) {
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution take(0.6);
  Matching m(g.vertex_count());
  for (EdgeId e : order) {
    const Edge& edge = g.edge(e);
    if (m.is_exposed(edge.u) && m.is_exposed(edge.v) && take(rng)) m.match(edge.u, edge.v);
  }
  return m;
}

std::vector<WeightedGraph> random_suite(const SuiteSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> size(spec.min_vertices, spec.max_vertices);
  std::uniform_real_distribution<double> density(0.3, 0.8);
  std::vector<WeightedGraph> out;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const std::size_t n = size(rng);
    out.push_back(random_graph(rng, n, density(rng), spec.max_weight));
  }
  return out;
}

std::string describe(const WeightedGraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " {";
  for (const Edge& e : g.edges()) out << ' ' << e.u << '-' << e.v << ':' << to_string(e.weight);
  out << " }";
  return out.str();
}

std::string describe(const WeightedGraph& g, const Matching& m) {
  std::ostringstream out;
  out << describe(g) << " M={";
  for (EdgeId e : m.edges(g)) out << ' ' << g.edge(e).u << '-' << g.edge(e).v;
  out << " }";
  return out.str();
}

namespace {

void check_reduction_run(Report& report, const WeightedGraph& g, const CycleReduction& r,
                         std::size_t gamma, const Rational& nu_f) {
  if (r.gamma != gamma || r.x.cycles.size() != gamma) {
    report.fail(describe(g) + ": gamma " + std::to_string(r.gamma) + " vs oracle " +
                std::to_string(gamma));
  }
  if (r.x.value(g) != nu_f) report.fail(describe(g) + ": value differs from oracle nu_f");
  for (std::size_t i = 0; i < r.trajectory.size(); ++i) {
    const BasicFractionalMatching& x = r.trajectory[i];
    if (!(decompose(g, x.x) == x) || x.value(g) != nu_f || !is_optimal_pair(g, x.x, r.y)) {
      report.fail(describe(g) + ": iterate " + std::to_string(i) + " is not basic and optimal");
    }
    if (i > 0) {
      const std::size_t before = r.trajectory[i - 1].cycles.size();
      const std::size_t after = x.cycles.size();
      if (after >= before || before - after > 2) {
        report.fail(describe(g) + ": augmentation changed the cycle count by a wrong amount");
      }
    }
  }
  if (!r.events.empty()) ++report.counters["runs with augmentations"];
  if (r.frustrated_trees > 0) ++report.counters["runs with frustrated trees"];
  for (const AugmentationEvent& e : r.events) {
    switch (e.kind) {
      case AugmentationEvent::Kind::CycleToHelper: ++report.counters["cycle-zero-cover"]; break;
      case AugmentationEvent::Kind::CycleToCycle: ++report.counters["cycle-to-cycle"]; break;
      case AugmentationEvent::Kind::CycleToZeroCovered: ++report.counters["cycle-to-covered-zero"]; break;
      case AugmentationEvent::Kind::CycleToZeroExposed: ++report.counters["cycle-to-exposed-zero"]; break;
    }
  }
}

}  // namespace

Report check_cycle_reduction(const std::vector<WeightedGraph>& suite) {
  Report report{"cycle reduction", 0, {}, {}};
  for (const WeightedGraph& g : suite) {
    guarded(report, g, [&] {
      const std::size_t gamma = brute_gamma(g);
      const Rational nu_f = exact_nu_f(g);
      check_reduction_run(report, g, reduce_cycles(g), gamma, nu_f);
      const FractionalSolution lp = solve_fractional(g);
      FractionalSolution start{brute_basic_optimum(g, CyclePreference::Most), lp.y};
      check_reduction_run(report, g, reduce_cycles(g, std::move(start)), gamma, nu_f);
    });
  }
  return report;
}

Report check_vertex_stabilizer(const std::vector<WeightedGraph>& suite) {
  Report report{"vertex stabilizer", 0, {}, {}};
  for (const WeightedGraph& g : suite) {
    guarded(report, g, [&] {
      const VertexStabilizerResult r = min_vertex_stabilizer(g);
      const std::vector<VertexId> best = brute_min_vertex_stabilizer(g);
      const WeightedGraph rest = g.without_vertices(r.S);
      if (r.S.size() != best.size()) {
        report.fail(describe(g) + ": |S|=" + std::to_string(r.S.size()) + " but optimum is " +
                    std::to_string(best.size()));
      }
      if (!is_stable(rest)) report.fail(describe(g) + ": G\\S is not stable");
      const Rational nu = exact_nu(g).value;
      const Rational nu_rest = exact_nu(rest).value;
      if (!r.nu_before || *r.nu_before != nu || r.nu_after != nu_rest) {
        report.fail(describe(g) + ": reported matching values disagree with the oracle");
      }
      if (3 * nu_rest < 2 * nu) report.fail(describe(g) + ": nu(G\\S) below 2/3 nu(G)");
      if (!certifies(rest, r.surviving, r.surviving_cover)) {
        report.fail(describe(g) + ": stability certificate does not verify");
      }
    });
  }
  return report;
}

Report check_monotonicity(const std::vector<WeightedGraph>& suite) {
  Report report{"gamma monotonicity", 0, {}, {}};
  for (const WeightedGraph& g : suite) {
    guarded(report, g, [&] {
      const std::size_t gamma = brute_gamma(g);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const VertexId removed[] = {v};
        if (brute_gamma(g.without_vertices(removed)) + 1 < gamma) {
          report.fail(describe(g) + ": removing vertex " + std::to_string(v) +
                      " dropped gamma by more than 1");
        }
      }
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeId removed[] = {e};
        if (brute_gamma(g.without_edges(removed)) + 2 < gamma) {
          report.fail(describe(g) + ": removing edge " + std::to_string(e) +
                      " dropped gamma by more than 2");
        }
      }
    });
  }
  return report;
}

Report check_edge_sandwich(const std::vector<WeightedGraph>& suite) {
  Report report{"edge stabilizer bounds", 0, {}, {}};
  for (const WeightedGraph& g : suite) {
    guarded(report, g, [&] {
      const EdgeStabilizerResult r = edge_stabilizer_approx(g);
      const std::size_t opt = brute_min_edge_stabilizer(g).size();
      const WeightedGraph rest = g.without_edges(r.F);
      if (!(r.lower_bound <= opt && opt <= r.F.size() && r.F.size() <= r.upper_bound)) {
        report.fail(describe(g) + ": bounds violated (lb " + std::to_string(r.lower_bound) +
                    ", opt " + std::to_string(opt) + ", |F| " + std::to_string(r.F.size()) +
                    ", ub " + std::to_string(r.upper_bound) + ")");
      }
      if (!is_stable(rest)) report.fail(describe(g) + ": G\\F is not stable");
      const std::vector<EdgeId> kept = r.surviving.edges(g);
      const bool disjoint = std::none_of(kept.begin(), kept.end(), [&](EdgeId e) {
        return std::binary_search(r.F.begin(), r.F.end(), e);
      });
      if (!disjoint || r.surviving.weight(g) != r.surviving_cover.total() ||
          !is_cover(rest, r.surviving_cover)) {
        report.fail(describe(g) + ": edge certificate does not verify");
      }
    });
  }
  return report;
}

Report check_duality(const std::vector<WeightedGraph>& suite) {
  Report report{"duality and complementary slackness", 0, {}, {}};
  for (const WeightedGraph& g : suite) {
    guarded(report, g, [&] {
      const FractionalSolution s = solve_fractional(g);
      if (!is_optimal_pair(g, s.x.x, s.y) || s.x.value(g) != s.y.total()) {
        report.fail(describe(g) + ": solve_fractional pair is not optimal");
      }
      const CycleReduction r = reduce_cycles(g);
      for (const BasicFractionalMatching& x : r.trajectory) {
        if (!is_optimal_pair(g, x.x, r.y) || x.value(g) != r.y.total()) {
          report.fail(describe(g) + ": cycle-reduction iterate is not optimal");
        }
      }
      const VertexStabilizerResult v = min_vertex_stabilizer(g);
      const WeightedGraph rest = g.without_vertices(v.S);
      const std::vector<EdgeId> matched = v.surviving.edges(rest);
      EdgeValues x(rest.edge_count(), Rational(0));
      for (EdgeId e : matched) x[e] = 1;
      if (!is_optimal_pair(rest, x, v.surviving_cover) ||
          rest.dot(x) != v.surviving_cover.total()) {
        report.fail(describe(g) + ": vertex-stabilizer certificate is not optimal");
      }
    });
  }
  return report;
}

void check_walk_dp_case(Report& report, const WeightedGraph& g, const Matching& m, VertexId s,
                        std::size_t max_length) {
  ++report.cases;
  const WalkTables t = optimal_walks(g, m, s, max_length);
  const auto best = valid_walk_maxima(g, m, s, max_length);
  for (std::size_t k = 0; k <= max_length; ++k) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const std::optional<Rational>& dp = m.is_exposed(v) ? t.y1(k, v) : t.y2(k, v);
      if (dp != best[k][v]) {
        report.fail(describe(g, m) + ": source " + std::to_string(s) + ", k=" +
                    std::to_string(k) + ", vertex " + std::to_string(v) + ": table " +
                    (dp ? to_string(*dp) : "-inf") + " vs enumeration " +
                    (best[k][v] ? to_string(*best[k][v]) : "-inf"));
        return;
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const WalkTable table = m.is_exposed(v) ? WalkTable::Unmatched : WalkTable::Matched;
    const std::optional<Rational>& entry = t.best_valid(m, v);
    if (!entry) continue;
    const AlternatingWalk walk = reconstruct_walk(t, v, table);
    if (!is_valid_walk(g, m, walk) || walk.length() > max_length || walk.front() != s ||
        walk.back() != v || walk_value(g, m, walk) != *entry) {
      report.fail(describe(g, m) + ": reconstructed walk does not realize its entry");
      return;
    }
    if (*entry > 0) {
      const auto structure = extract_structure(g, m, walk);
      if (!structure) {
        report.fail(describe(g, m) + ": augmenting walk without an augmenting structure");
        return;
      }
      static const char* const kNames[] = {"augmenting path", "augmenting cycle", "flower",
                                           "bi-cycle"};
      ++report.counters[kNames[static_cast<int>(structure->kind)]];
    }
  }
}

namespace {

// Calls f(m) for every matching of g, built over edges in id order.
template <typename F>
void for_each_matching(const WeightedGraph& g, F&& f) {
  Matching m(g.vertex_count());
  auto rec = [&](auto&& self, EdgeId next) -> void {
    if (next == g.edge_count()) {
      f(m);
      return;
    }
    self(self, next + 1);
    const Edge& e = g.edge(next);
    if (m.is_exposed(e.u) && m.is_exposed(e.v)) {
      m.match(e.u, e.v);
      self(self, next + 1);
      m.unmatch(e.u);
    }
  };
  rec(rec, 0);
}

}  // namespace

Report check_walk_dp_exhaustive(std::size_t max_vertices, std::size_t max_length) {
  Report report{"walk tables (exhaustive)", 0, {}, {}};
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    // Each slot is absent, weight 1 or weight 2: 3^|slots| graphs.
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      WeightedGraph g(n);
      std::size_t rest = code;
      for (const auto& [u, v] : slots) {
        if (rest % 3 != 0) g.add_edge(u, v, Rational(static_cast<std::int64_t>(rest % 3)));
        rest /= 3;
      }
      for_each_matching(g, [&](const Matching& m) {
        for (VertexId s = 0; s < n; ++s) {
          try {
            check_walk_dp_case(report, g, m, s, max_length);
          } catch (const std::exception& e) {
            report.fail(describe(g, m) + ": threw " + e.what());
          }
        }
      });
    }
  }
  return report;
}

Report check_walk_dp_random(const SuiteSpec& spec, std::size_t max_length) {
  Report report{"walk tables (random)", 0, {}, {}};
  std::mt19937_64 rng(spec.seed);
  for (const WeightedGraph& g : random_suite(spec)) {
    const Matching m = random_matching(rng, g);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      try {
        check_walk_dp_case(report, g, m, s, max_length);
      } catch (const std::exception& e) {
        report.fail(describe(g, m) + ": threw " + e.what());
      }
    }
  }
  return report;
}

Report check_m_stabilizer(const SuiteSpec& spec) {
  Report report{"M-vertex-stabilizer", 0, {}, {}};
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  for (const WeightedGraph& g : random_suite(spec)) {
    const Matching m = random_matching(rng, g);
    guarded(report, g, [&] {
      const MStabilizerResult r = m_vertex_stabilizer(g, m);
      const auto opt = brute_min_m_stabilizer(g, m);
      const bool feasible = r.status == MStabilizerResult::Status::Feasible;
      if (feasible != opt.has_value()) {
        report.fail(describe(g, m) + ": feasibility disagrees with the oracle");
        return;
      }
      const MStabilizerResult reversed = m_vertex_stabilizer(g, m, {.descending = true});
      if (reversed.S1 != r.S1) {
        report.fail(describe(g, m) + ": first-loop set depends on the scan order");
      }
      ++report.counters[feasible ? "feasible" : "infeasible"];
      if (!r.S1.empty()) ++report.counters["first loop removed vertices"];
      if (!r.S2.empty()) ++report.counters["second loop removed vertices"];
      if (!feasible) return;
      for (VertexId v : r.S) {
        if (!m.is_exposed(v)) report.fail(describe(g, m) + ": removed a covered vertex");
      }
      if (r.S.size() > 2 * opt->size()) {
        report.fail(describe(g, m) + ": |S| exceeds twice the optimum");
      }
      if (r.S2.empty() && r.S.size() != opt->size()) {
        report.fail(describe(g, m) + ": not optimal although the second loop removed nothing");
      }
      const WeightedGraph rest = g.without_vertices(r.S);
      if (exact_nu(rest).value != m.weight(g) || !is_stable(rest)) {
        report.fail(describe(g, m) + ": M is not maximum or G\\S is unstable");
      }
    });
  }
  return report;
}

}  // namespace graphstab::checks
