#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphstab/checks/checks.hpp"
#include "graphstab/cycle_minimizer.hpp"
#include "graphstab/error.hpp"
#include "graphstab/io/instance.hpp"
#include "graphstab/lp_matching.hpp"
#include "graphstab/m_stabilizer.hpp"
#include "graphstab/oracle.hpp"
#include "graphstab/stabilizers.hpp"
#include "graphstab/walk_dp.hpp"

namespace graphstab::cli {

namespace {

using nlohmann::json;
using io::Instance;

/// A command's JSON body plus its exit code.
struct Outcome {
  json body;
  int exit = kOk;
};

/// Input problems that are not graph errors (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json cycle_lists(const WeightedGraph& g, const std::vector<OddCycle>& cycles) {
  json out = json::array();
  for (const OddCycle& c : cycles) out.push_back(io::labels(g, c.vertices));
  return out;
}

std::string event_kind(AugmentationEvent::Kind kind) {
  switch (kind) {
    case AugmentationEvent::Kind::CycleToHelper: return "cycle-zero-cover";
    case AugmentationEvent::Kind::CycleToCycle: return "cycle-to-cycle";
    case AugmentationEvent::Kind::CycleToZeroCovered: return "cycle-to-covered-zero";
    case AugmentationEvent::Kind::CycleToZeroExposed: return "cycle-to-exposed-zero";
  }
  return "unknown";
}

json fractional_body(const WeightedGraph& g, const BasicFractionalMatching& x,
                     const FractionalVertexCover& y) {
  return {{"nu_f", io::fraction(x.value(g))},
          {"cycles", cycle_lists(g, x.cycles)},
          {"matched", io::edge_pairs(g, x.matched)},
          {"certificate", {{"x", io::edge_values(g, x.x)}, {"cover", io::cover_map(g, y)}}}};
}

const Matching& require_matching(const Instance& inst) {
  if (!inst.matching) throw UsageError("MatchingRequired: instance has no \"matching\" field");
  return *inst.matching;
}

Outcome solve_fractional_cmd(const Instance& inst) {
  const FractionalSolution s = solve_fractional(inst.graph);
  return {fractional_body(inst.graph, s.x, s.y)};
}

Outcome min_cycles_cmd(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  const CycleReduction r = reduce_cycles(g);
  json body = fractional_body(g, r.x, r.y);
  body["gamma"] = r.gamma;
  body["initial_cycles"] = r.initial_cycles;
  body["frustrated_trees"] = r.frustrated_trees;
  json events = json::array();
  for (const AugmentationEvent& e : r.events) {
    events.push_back({{"kind", event_kind(e.kind)},
                      {"path", io::labels(g, e.path)},
                      {"rounded_at", io::labels(g, e.rounded_at)}});
  }
  body["certificate"]["events"] = events;
  return {body};
}

Outcome gamma_cmd(const Instance& inst) {
  const GammaBounds b = gamma_lower_bounds(inst.graph);
  return {{{"gamma", b.gamma}, {"vertex_lb", b.vertex_lb}, {"edge_lb", b.edge_lb}}};
}

Outcome stabilize_vertices_cmd(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  const VertexStabilizerResult r = min_vertex_stabilizer(g);
  json body = {{"S", io::labels(g, r.S)},
               {"gamma", r.reduction.gamma},
               {"nu_after", io::fraction(r.nu_after)},
               {"certificate",
                {{"matching", io::matching_pairs(g, r.surviving)},
                 {"cover", io::cover_map(g, r.surviving_cover)}}}};
  if (r.nu_before) body["nu_before"] = io::fraction(*r.nu_before);
  return {body};
}

Outcome stabilize_edges_cmd(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  const EdgeStabilizerResult r = edge_stabilizer_approx(g);
  return {{{"F", io::edge_pairs(g, r.F)},
           {"gamma", r.gamma},
           {"lower_bound", r.lower_bound},
           {"upper_bound", r.upper_bound},
           {"certificate",
            {{"matching", io::matching_pairs(g, r.surviving)},
             {"cover", io::cover_map(g, r.surviving_cover)}}}}};
}

Outcome m_stabilize_cmd(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  const Matching& m = require_matching(inst);
  const MStabilizerResult r = m_vertex_stabilizer(g, m);
  const bool feasible = r.status == MStabilizerResult::Status::Feasible;
  json removals = json::array();
  for (const auto& step : r.removals) {
    const char* structure = step.second_loop ? "path-to-exposed"
                            : step.flower    ? "flower"
                                             : "path-to-covered";
    removals.push_back({{"vertex", g.label(step.vertex)},
                        {"loop", step.second_loop ? 2 : 1},
                        {"structure", structure},
                        {"walk", io::labels(g, step.walk.vertices)}});
  }
  json body = {{"status", feasible ? "feasible" : "infeasible"},
               {"S", io::labels(g, r.S)},
               {"S1", io::labels(g, r.S1)},
               {"S2", io::labels(g, r.S2)},
               {"weight", io::fraction(m.weight(g))},
               {"residual_nu_f", io::fraction(r.residual_nu_f)},
               {"removals", removals}};
  if (feasible) {
    const FractionalSolution s = solve_fractional(g.without_vertices(r.S));
    body["certificate"] = {{"cover", io::cover_map(g, s.y)}};
  }
  return {body, feasible ? kOk : kNegative};
}

Outcome check_stability_cmd(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  const CycleReduction r = reduce_cycles(g);
  json body = {{"stable", r.gamma == 0}, {"gamma", r.gamma}, {"nu_f", io::fraction(r.x.value(g))}};
  if (r.gamma == 0) {
    body["certificate"] = {{"matching", io::edge_pairs(g, r.x.matched)},
                           {"cover", io::cover_map(g, r.y)}};
  } else {
    body["cycles"] = cycle_lists(g, r.x.cycles);
  }
  return {body};
}

struct WalkQuery {
  std::string source;
  std::size_t k = 0;
};

Outcome oracle_cmd(const std::string& sub, const Instance& inst, const WalkQuery& query) {
  const WeightedGraph& g = inst.graph;
  if (sub == "nu") {
    const NuResult r = exact_nu(g);
    return {{{"nu", io::fraction(r.value)}, {"matching", io::matching_pairs(g, r.matching)}}};
  }
  if (sub == "nu-f") return {{{"nu_f", io::fraction(exact_nu_f(g))}}};
  if (sub == "gamma") return {{{"gamma", brute_gamma(g)}}};
  if (sub == "stable") return {{{"stable", is_stable(g)}}};
  if (sub == "min-vertex-stabilizer") return {{{"S", io::labels(g, brute_min_vertex_stabilizer(g))}}};
  if (sub == "min-edge-stabilizer") return {{{"F", io::edge_pairs(g, brute_min_edge_stabilizer(g))}}};
  if (sub == "min-m-stabilizer") {
    const auto r = brute_min_m_stabilizer(g, require_matching(inst));
    if (!r) return {{{"status", "infeasible"}}, kNegative};
    return {{{"status", "feasible"}, {"S", io::labels(g, *r)}}};
  }
  // walks
  const Matching m = inst.matching.value_or(Matching(g.vertex_count()));
  const auto s = g.find_vertex(query.source);
  if (!s) throw UsageError("unknown source vertex \"" + query.source + "\"");
  json walks = json::array();
  for (const EnumeratedWalk& w : enumerate_valid_walks(g, m, *s, query.k)) {
    walks.push_back({{"endpoint", g.label(w.endpoint)},
                     {"value", io::fraction(w.value)},
                     {"walk", io::labels(g, w.walk.vertices)}});
  }
  json best = json::object();
  const auto maxima = best_valid_walks(g, m, *s, query.k);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    best[g.label(v)] = maxima[v] ? json(io::fraction(*maxima[v])) : json(nullptr);
  }
  return {{{"source", query.source}, {"k", query.k}, {"walks", walks}, {"best", best}}};
}

// --- verify -----------------------------------------------------------------

struct Checklist {
  json items = json::array();
  bool ok = true;
  void check(const std::string& name, bool passed) {
    items.push_back({{"name", name}, {"ok", passed}});
    ok = ok && passed;
  }
};

/// Matching and cover certify that `g` is stable with value w(M) = Σy.
void check_certificate(Checklist& list, const WeightedGraph& g, const Matching& m,
                       const FractionalVertexCover& y) {
  list.check("matching is a matching of the residual graph", is_matching_of(g, m));
  list.check("cover is a fractional w-vertex cover of the residual graph", is_cover(g, y));
  list.check("matching weight equals cover total", m.weight(g) == y.total());
}

Outcome verify_cmd(const Instance& inst, const json& result) {
  const WeightedGraph& g = inst.graph;
  if (!result.is_object() || !result.contains("command")) {
    throw Error(Errc::ParseError, "result document has no \"command\"");
  }
  const std::string command = result["command"].get<std::string>();
  Checklist list;
  list.check("instance hash matches",
             result.value("instance_hash", std::string{}) == io::instance_hash(inst));
  const json& cert = result.contains("certificate") ? result["certificate"] : json::object();

  if (command == "solve-fractional" || command == "min-cycles") {
    EdgeValues x(g.edge_count(), Rational(0));
    for (const json& entry : cert.at("x")) {
      auto e = io::parse_edges(g, json::array({json::array({entry.at("u"), entry.at("v")})}));
      x[e.front()] = parse_rational(entry.at("x").get<std::string>());
    }
    const FractionalVertexCover y = io::parse_cover(g, cert.at("cover"));
    list.check("x and y are optimal with complementary slackness", is_optimal_pair(g, x, y));
    list.check("reported value equals w·x",
               parse_rational(result.at("nu_f").get<std::string>()) == g.dot(x));
    if (command == "min-cycles") {
      const BasicFractionalMatching basic = decompose(g, x);
      list.check("x is basic with gamma odd cycles",
                 basic.cycles.size() == result.at("gamma").get<std::size_t>());
    }
  } else if (command == "stabilize-vertices") {
    const std::vector<VertexId> S = io::parse_vertices(g, result.at("S"));
    const WeightedGraph rest = g.without_vertices(S);
    const Matching m = io::parse_matching(g, cert.at("matching"));
    check_certificate(list, rest, m, io::parse_cover(g, cert.at("cover")));
    list.check("nu_after equals the matching weight",
               parse_rational(result.at("nu_after").get<std::string>()) == m.weight(g));
  } else if (command == "stabilize-edges") {
    const std::vector<EdgeId> F = io::parse_edges(g, result.at("F"));
    const WeightedGraph rest = g.without_edges(F);
    // Edge ids shift in G \ F, so carry the matching over by endpoints.
    const Matching m = io::parse_matching(g, cert.at("matching"));
    bool avoids = true;
    for (EdgeId e : F) avoids = avoids && !m.contains(g.edge(e).u, g.edge(e).v);
    list.check("matching avoids F", avoids);
    check_certificate(list, rest, m, io::parse_cover(g, cert.at("cover")));
  } else if (command == "check-stability") {
    if (result.at("stable").get<bool>()) {
      check_certificate(list, g, io::parse_matching(g, cert.at("matching")),
                        io::parse_cover(g, cert.at("cover")));
    } else {
      list.check("instability is not certifiable from the document", false);
    }
  } else if (command == "m-stabilize") {
    const Matching& m = require_matching(inst);
    if (result.at("status") == "feasible") {
      const std::vector<VertexId> S = io::parse_vertices(g, result.at("S"));
      bool exposed = true;
      for (VertexId v : S) exposed = exposed && m.is_exposed(v);
      list.check("S contains only M-exposed vertices", exposed);
      check_certificate(list, g.without_vertices(S), m, io::parse_cover(g, cert.at("cover")));
    } else {
      list.check("infeasibility is not certifiable from the document", false);
    }
  } else {
    throw UsageError("verify does not know command \"" + command + "\"");
  }
  return {{{"verified", list.ok}, {"checks", list.items}}, list.ok ? kOk : kNegative};
}

// --- selftest ---------------------------------------------------------------

json report_json(const checks::Report& r) {
  return {{"name", r.name}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", r.failures},
          {"counters", r.counters}};
}

Outcome selftest_cmd(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  const checks::SuiteSpec spec{seed, count, 3, max_vertices, 5};
  const auto suite = checks::random_suite(spec);
  std::vector<checks::Report> reports{
      checks::check_duality(suite),
      checks::check_cycle_reduction(suite),
      checks::check_vertex_stabilizer(suite),
      checks::check_monotonicity(suite),
      checks::check_walk_dp_random({seed, count, 1, std::min<std::size_t>(max_vertices, 7), 3}, 6),
      checks::check_m_stabilizer({seed, count, 2, std::min<std::size_t>(max_vertices, 7), 5}),
  };
  json suites = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    suites.push_back(report_json(r));
    passed = passed && r.passed();
  }
  return {{{"seed", seed}, {"passed", passed}, {"suites", suites}}, passed ? kOk : kNegative};
}

// --- driver -----------------------------------------------------------------

Outcome guarded(const std::function<Outcome()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "graphstab: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "graphstab: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "graphstab: ParseError: " << e.what() << '\n';
  }
  return {json(nullptr), kInputError};
}

/// Runs `command` over every file, `jobs` at a time, in input order.
int run_batch(const std::vector<std::string>& files, std::size_t jobs, bool timing,
              const std::string& command, const std::function<Outcome(const Instance&)>& body,
              std::ostream& out, std::ostream& err) {
  std::vector<Outcome> results(files.size());
  std::vector<std::string> diagnostics(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      std::ostringstream diag;
      results[i] = guarded(
          [&]() -> Outcome {
            const Instance inst = io::load_instance(files[i]);
            const auto start = std::chrono::steady_clock::now();
            Outcome r = body(inst);
            const auto stop = std::chrono::steady_clock::now();
            json doc = {{"command", command}, {"instance_hash", io::instance_hash(inst)}};
            doc.update(r.body);
            if (timing) {
              const auto us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start);
              doc["timing"] = {{"microseconds", std::to_string(us.count())}};
            }
            r.body = std::move(doc);
            return r;
          },
          diag);
      diagnostics[i] = diag.str();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(jobs, files.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();

  int exit = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    err << diagnostics[i];
    if (!results[i].body.is_null()) {
      out << (files.size() == 1 ? results[i].body.dump(2) : results[i].body.dump()) << '\n';
    }
    if (results[i].exit == kInputError || exit == kInputError) exit = kInputError;
    else exit = std::max(exit, results[i].exit);
  }
  return exit;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizers, fractional matchings and cycle minimization for weighted graphs.",
               "graphstab"};
  app.require_subcommand(1);
  std::vector<std::string> files;
  std::size_t jobs = 1;
  bool timing = false;

  using Runner = std::function<Outcome(const Instance&)>;
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto instance_command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                              Runner runner) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("instances", files, "Instance JSON files")->required();
    sub->add_option("--jobs", jobs, "Worker threads for multi-instance batches")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timing", timing, "Add wall-clock timing to each result");
    commands.emplace_back(sub, std::move(runner));
    return sub;
  };

  instance_command(&app, "solve-fractional", "Optimal basic fractional matching and cover",
                   solve_fractional_cmd);
  instance_command(&app, "min-cycles", "Optimal fractional matching with fewest odd cycles",
                   min_cycles_cmd);
  instance_command(&app, "stabilize-vertices", "Minimum vertex-stabilizer", stabilize_vertices_cmd);
  instance_command(&app, "stabilize-edges", "Approximate edge-stabilizer", stabilize_edges_cmd);
  instance_command(&app, "m-stabilize", "Vertex-stabilizer preserving the given matching",
                   m_stabilize_cmd);
  instance_command(&app, "check-stability", "Decide stability with a certificate",
                   check_stability_cmd);
  instance_command(&app, "gamma", "Odd-cycle count and stabilizer lower bounds", gamma_cmd);

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive reference computations");
  oracle->require_subcommand(1);
  WalkQuery query;
  for (const std::string sub : {"nu", "nu-f", "gamma", "stable", "min-vertex-stabilizer",
                                "min-edge-stabilizer", "min-m-stabilizer", "walks"}) {
    CLI::App* cmd = instance_command(oracle, sub, "Oracle: " + sub, [sub, &query](const Instance& i) {
      return oracle_cmd(sub, i, query);
    });
    if (sub == "walks") {
      cmd->add_option("--source", query.source, "Start vertex label")->required();
      cmd->add_option("--k", query.k, "Maximum walk length")->required();
    }
  }

  std::string verify_instance, verify_result;
  CLI::App* verify = app.add_subcommand("verify", "Re-check a result document's certificates");
  verify->add_option("instance", verify_instance, "Instance JSON file")->required();
  verify->add_option("result", verify_result, "Result JSON file")->required();

  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::size_t max_vertices = 7;
  CLI::App* selftest = app.add_subcommand("selftest", "Randomized property suites");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--count", count, "Instances per suite");
  selftest->add_option("--max-vertices", max_vertices, "Largest instance size")
      ->check(CLI::Range(3, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  if (verify->parsed()) {
    Outcome r = guarded(
        [&]() -> Outcome {
          const Instance inst = io::load_instance(verify_instance);
          std::ifstream in(verify_result);
          if (!in) throw Error(Errc::ParseError, "cannot open " + verify_result);
          json doc;
          try {
            doc = json::parse(in);
          } catch (const json::parse_error& e) {
            throw Error(Errc::ParseError, e.what());
          }
          Outcome o = verify_cmd(inst, doc);
          json body = {{"command", "verify"}, {"verified_command", doc["command"]}};
          body.update(o.body);
          o.body = std::move(body);
          return o;
        },
        err);
    if (!r.body.is_null()) out << r.body.dump(2) << '\n';
    return r.exit;
  }
  if (selftest->parsed()) {
    Outcome r = selftest_cmd(seed, count, max_vertices);
    json body = {{"command", "selftest"}};
    body.update(r.body);
    out << body.dump(2) << '\n';
    return r.exit;
  }
  for (const auto& [sub, runner] : commands) {
    if (!sub->parsed()) continue;
    std::string name = sub->get_name();
    if (sub->get_parent() == oracle) name = "oracle " + name;
    return run_batch(files, jobs, timing, name, runner, out, err);
  }
  return kInputError;
}

}  // namespace graphstab::cli
