// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "qroute/bounds.hpp"
#include "qroute/constructive.hpp"
#include "qroute/io.hpp"
#include "qroute/milp/lp_format.hpp"
#include "qroute/oracle.hpp"
#include "qroute/pipeline.hpp"
#include "qroute/polytope.hpp"
#include "qroute/scheduler.hpp"

using namespace qroute;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitPartial = 3;
constexpr int kExitInput = 4;

std::string out_path;

int emit(const json& j, int code = kExitOk) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
  return code;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InputError("bad number '" + s + "'");
  return v;
}

// grid3x3, twin5cycles, path:N, cycle:N, star:N, complete:N, grid:RxC, or a
// JSON graph file.
Graph graph_spec(const std::string& spec) {
  if (spec == "grid3x3" || spec == "twin5cycles") return builtin_hardware(spec);
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "grid") {
      const auto x = arg.find('x');
      if (x == std::string::npos) throw InputError("grid:RxC expected");
      return grid_graph(parse_int(arg.substr(0, x)),
                        parse_int(arg.substr(x + 1)));
    }
    const int n = parse_int(arg);
    if (kind == "path") return path_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "star") return star_graph(n);
    if (kind == "complete") return complete_graph(n);
    throw InputError("unknown graph kind '" + kind + "'");
  }
  return graph_from_json(read_json_file(spec));
}

json result_json(const PipelineResult& r) {
  json j;
  j["status"] = to_string(r.status);
  j["mt"] = r.mt;
  j["ms_at_mt"] = r.ms_at_mt;
  j["ms"] = r.ms;
  j["optimal"] = {{"mt", r.mt_optimal},
                  {"ms_at_mt", r.ms_at_mt_optimal},
                  {"ms", r.ms_optimal}};
  j["seconds"] = {{"steps", r.seconds.steps},
                  {"swaps_at_mt", r.seconds.swaps_at_mt},
                  {"swaps", r.seconds.swaps},
                  {"schedule", r.seconds.schedule}};
  if (r.swap_solution) j["solution"] = to_json(*r.swap_solution);
  if (r.routed_circuit) {
    j["circuit"] = to_json(*r.routed_circuit);
    j["depth"] = r.routed_circuit->depth();
    j["swaps"] = r.routed_circuit->swap_count();
    j["schedule"] = {{"method", r.schedule_method},
                     {"optimal", r.schedule_optimal}};
  }
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

int status_code(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::Optimal:
      return kExitOk;
    case PipelineStatus::Infeasible:
      return kExitInfeasible;
    case PipelineStatus::Partial:
      return kExitPartial;
  }
  return kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and constructive qubit routing via token meeting"};
  app.require_subcommand(1);
  app.add_option("--out", out_path, "Write JSON output to this file");

  // generate
  auto* gen = app.add_subcommand("generate", "Random instance on a hardware");
  std::string gen_hw = "grid3x3";
  double gen_density = 0.5;
  std::uint64_t gen_seed = 0;
  gen->add_option("--hardware", gen_hw, "Hardware graph spec");
  gen->add_option("--density", gen_density, "Edge density of A in (0,1]");
  gen->add_option("--seed", gen_seed, "Random seed");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Lower and upper bounds");
  std::string bnd_file;
  bnd->add_option("instance", bnd_file)->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exhaustive MT / MS");
  std::string orc_file;
  int orc_max = ExhaustiveOracle::kDefaultMaxNodes;
  int orc_steps = -1;
  orc->add_option("instance", orc_file)->required();
  orc->add_option("--max-nodes", orc_max, "Refuse larger instances");
  orc->add_option("--steps", orc_steps, "Also report MS with this many steps");

  // solve / route share the pipeline configuration
  PipelineConfig cfg;
  std::string variant = "zieq";
  bool no_fixing = false;
  bool no_bound = false;
  auto add_cfg = [&](CLI::App* c) {
    c->add_option("--variant", variant, "yeq | yieq | zeq | zieq");
    c->add_option("--time-limit", cfg.time_limit, "Seconds per solve");
    c->add_option("--backend", cfg.backend, "builtin | highs | default");
    c->add_flag("--symmetry", cfg.hardware_symmetry,
                "Orbit representatives for token 0");
    c->add_flag("--no-fix-initial", no_fixing,
                "Do not fix the middle placement for complete A");
    c->add_flag("--no-step-bound", no_bound,
                "Start the step search at 1");
    c->add_option("--max-steps", cfg.max_steps, "Step search cap");
  };

  auto* slv = app.add_subcommand("solve", "MT, MS(MT) and MS");
  std::string slv_file;
  int slv_steps = -1;
  std::string lp_out;
  slv->add_option("instance", slv_file)->required();
  slv->add_option("--steps", slv_steps, "Single solve with this many steps");
  slv->add_option("--lp-out", lp_out, "Write the model as an LP file");
  add_cfg(slv);

  auto* sch = app.add_subcommand("schedule", "Circuit from a swap solution");
  std::string sch_inst, sch_sol, sch_backend = "default";
  bool sch_greedy = false;
  sch->add_option("instance", sch_inst)->required();
  sch->add_option("solution", sch_sol)->required();
  sch->add_option("--backend", sch_backend, "builtin | highs | default");
  sch->add_flag("--greedy", sch_greedy, "First-fit instead of the MILP");

  auto* rte = app.add_subcommand("route", "Solve and schedule");
  std::string rte_file, rte_circuit, rte_hw = "grid3x3";
  rte->add_option("instance", rte_file, "Instance JSON");
  rte->add_option("--circuit", rte_circuit, "Gate list instead of JSON");
  rte->add_option("--hardware", rte_hw, "Hardware for --circuit");
  add_cfg(rte);

  auto* heu = app.add_subcommand("heuristic", "Constructive solutions");
  std::string heu_kind, heu_graph;
  int heu_m = 2;
  heu->add_option("kind", heu_kind, "dfs | qsst")->required();
  heu->add_option("--graph", heu_graph, "Tree spec or JSON (dfs)");
  heu->add_option("-m", heu_m, "Branch count and length (qsst)");

  auto* pol = app.add_subcommand("polytope", "Connection polytope blocks");
  std::string pol_graph, pol_rel = "eq";
  bool pol_verify = false;
  pol->add_option("--graph", pol_graph, "Graph spec")->required();
  pol->add_option("--relation", pol_rel, "eq | leq");
  pol->add_flag("--verify", pol_verify, "Check integrality");

  auto* ver = app.add_subcommand("verify", "Validate a solution or circuit");
  std::string ver_inst, ver_file;
  ver->add_option("instance", ver_inst)->required();
  ver->add_option("file", ver_file, "Solution or circuit JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      return emit(to_json(generate_instance(graph_spec(gen_hw), gen_density,
                                            gen_seed)));
    }
    if (*bnd) {
      const TmpInstance inst = instance_from_json(read_json_file(bnd_file));
      const BoundReport b = bound_report(inst);
      auto num = [](int v) -> json {
        return v == kUnbounded ? json("unbounded") : json(v);
      };
      return emit({{"delta_prime", b.delta_prime},
                   {"d_of_h", b.d_of_h},
                   {"swap_lower_bound", num(b.swap_lower)},
                   {"step_lower_bound", num(b.step_lower)},
                   {"swap_upper_bound", b.swap_upper}});
    }
    if (*orc) {
      const TmpInstance inst = instance_from_json(read_json_file(orc_file));
      ExhaustiveOracle oracle(inst, orc_max);
      json j;
      const auto mt = oracle.min_steps();
      if (!mt) return emit({{"status", "infeasible"}}, kExitInfeasible);
      j["mt"] = *mt;
      j["ms_at_mt"] = *oracle.min_swaps_with_steps(*mt);
      j["ms"] = *oracle.min_swaps();
      if (orc_steps >= 0) {
        const auto v = oracle.min_swaps_with_steps(orc_steps);
        j["ms_at_steps"] = v ? json(*v) : json(nullptr);
      }
      return emit(j);
    }
    if (*slv || *rte) {
      cfg.variant = model_variant_from_string(variant);
      cfg.complete_fixing = !no_fixing;
      cfg.use_step_lower_bound = !no_bound;
      if (!(cfg.time_limit > 0)) throw InputError("time limit must be > 0");
    }
    if (*slv) {
      const TmpInstance inst = instance_from_json(read_json_file(slv_file));
      if (!lp_out.empty()) {
        if (slv_steps < 0) throw InputError("--lp-out needs --steps");
        TmpModel tm = build_model(inst, slv_steps + 1, cfg.variant);
        if (cfg.complete_fixing && inst.algorithm.is_complete())
          add_complete_A_fixing(tm, TokenPlacement::identity(inst.n()));
        else if (cfg.hardware_symmetry)
          add_hardware_symmetry(tm);
        write_text_file(lp_out, milp::export_lp(tm.model()));
      }
      if (slv_steps >= 0) {
        std::optional<SwapSolution> sol;
        const auto r = solve_fixed_steps(inst, slv_steps, cfg, &sol);
        json j{{"status", milp::to_string(r.status)}, {"steps", slv_steps}};
        if (r.has_solution) j["swaps"] = milp::integral_objective(r).value_or(-1);
        if (sol) j["solution"] = to_json(*sol);
        const int code = r.optimal() ? kExitOk
                         : r.status == milp::SolveStatus::Infeasible
                             ? kExitInfeasible
                             : kExitPartial;
        return emit(j, code);
      }
      const PipelineResult r = solve_min_swaps(inst, cfg);
      return emit(result_json(r), status_code(r.status));
    }
    if (*sch) {
      const TmpInstance inst = instance_from_json(read_json_file(sch_inst));
      const SwapSolution sol = solution_from_json(read_json_file(sch_sol));
      std::unique_ptr<milp::SolverBackend> backend;
      if (!sch_greedy) backend = milp::make_backend(sch_backend);
      const ScheduleResult s = schedule(inst, sol, backend.get());
      return emit({{"circuit", to_json(s.circuit)},
                   {"depth", s.circuit.depth()},
                   {"swaps", s.circuit.swap_count()},
                   {"added_layers", s.added_layers},
                   {"method", s.method},
                   {"optimal", s.optimal}},
                  s.method == "milp" && !s.optimal ? kExitPartial : kExitOk);
    }
    if (*rte) {
      TmpInstance inst;
      if (!rte_circuit.empty()) {
        inst = circuit_ingest(rte_circuit, graph_spec(rte_hw));
      } else if (!rte_file.empty()) {
        inst = instance_from_json(read_json_file(rte_file));
      } else {
        throw InputError("route needs an instance or --circuit");
      }
      const PipelineResult r = route(inst, cfg);
      return emit(result_json(r), status_code(r.status));
    }
    if (*heu) {
      SwapSolution sol;
      Graph h;
      if (heu_kind == "dfs") {
        if (heu_graph.empty()) throw InputError("dfs needs --graph");
        h = graph_spec(heu_graph);
        sol = dfs_swap_solve(h);
      } else if (heu_kind == "qsst") {
        h = qsst_graph(heu_m);
        sol = qsst_solve(heu_m);
      } else {
        throw InputError("unknown heuristic '" + heu_kind + "'");
      }
      const TmpInstance inst(h, complete_graph(h.node_count()));
      const SwapValidation v = validate_swap_solution(inst, sol);
      return emit({{"hardware", to_json(h)},
                   {"solution", to_json(sol)},
                   {"steps", v.steps},
                   {"swaps", v.swaps},
                   {"valid", v.valid}});
    }
    if (*pol) {
      const Graph g = graph_spec(pol_graph);
      const auto bg = polytope::bipartite_of(g);
      polytope::Relation rel;
      if (pol_rel == "eq") {
        rel = polytope::Relation::Eq;
      } else if (pol_rel == "leq") {
        rel = polytope::Relation::Leq;
      } else {
        throw InputError("relation must be eq or leq");
      }
      const auto desc = polytope::exact_description(bg, rel);
      json rows = json::array();
      for (const auto& li : desc) {
        rows.push_back({{"family", li.family},
                        {"x", li.x},
                        {"y", li.y},
                        {"z", li.z},
                        {"sense", li.sense == milp::Sense::LessEqual ? "<="
                                  : li.sense == milp::Sense::GreaterEqual
                                      ? ">="
                                      : "="},
                        {"rhs", li.rhs}});
      }
      json j{{"graph", to_json(g)}, {"inequalities", rows}};
      int code = kExitOk;
      if (pol_verify) {
        auto lp = milp::make_backend("builtin");
        const auto rep = polytope::verify_integer_hull(bg, rel, desc, *lp);
        j["verify"] = {{"exact", rep.exact()},
                       {"lp_solves", rep.lp_solves},
                       {"vertices_checked", rep.vertices_checked},
                       {"integer_points_checked", rep.integer_points_checked},
                       {"detail", rep.detail}};
        if (!rep.exact()) code = kExitPartial;
      }
      return emit(j, code);
    }
    if (*ver) {
      const TmpInstance inst = instance_from_json(read_json_file(ver_inst));
      const json j = read_json_file(ver_file);
      const json& body = j.contains("circuit")    ? j["circuit"]
                         : j.contains("solution") ? j["solution"]
                                                  : j;
      json out;
      std::vector<std::string> issues;
      bool valid = false;
      if (body.contains("layers")) {
        const CircuitValidation v =
            validate_routed_circuit(inst, circuit_from_json(body));
        valid = v.valid;
        issues = v.issues;
        out = {{"kind", "circuit"}, {"depth", v.depth}, {"swaps", v.swaps}};
      } else {
        const SwapValidation v =
            validate_swap_solution(inst, solution_from_json(body));
        valid = v.valid;
        issues = v.issues;
        out = {{"kind", "solution"}, {"steps", v.steps}, {"swaps", v.swaps}};
      }
      out["valid"] = valid;
      out["issues"] = issues;
      return emit(out, valid ? kExitOk : kExitInput);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
