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

#include "qroute/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qroute/bounds.hpp"

namespace qroute {

const char* to_string(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::Optimal:
      return "optimal";
    case PipelineStatus::Infeasible:
      return "infeasible";
    case PipelineStatus::Partial:
      return "partial";
  }
  return "partial";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void add_reductions(TmpModel& tm, const PipelineConfig& cfg) {
  const TmpInstance& inst = tm.instance();
  if (cfg.complete_fixing && inst.algorithm.is_complete()) {
    add_complete_A_fixing(tm, TokenPlacement::identity(inst.n()));
  } else if (cfg.hardware_symmetry) {
    add_hardware_symmetry(tm, 0);
  }
}

milp::SolveResult run(milp::SolverBackend& backend, const TmpModel& tm,
                      const PipelineConfig& cfg) {
  milp::SolveOptions opts;
  opts.time_limit = cfg.time_limit;
  return backend.solve(tm.model(), opts);
}

std::optional<int> rounded(const milp::SolveResult& r) {
  if (!r.has_solution) return std::nullopt;
  return milp::integral_objective(r);
}

}  // namespace

milp::SolveResult solve_fixed_steps(const TmpInstance& inst, int steps,
                                    const PipelineConfig& cfg,
                                    std::optional<SwapSolution>* decoded) {
  if (steps < 0) throw InputError("negative step count");
  auto backend = milp::make_backend(cfg.backend);
  TmpModel tm = build_model(inst, steps + 1, cfg.variant);
  add_reductions(tm, cfg);
  milp::SolveResult r = run(*backend, tm, cfg);
  if (decoded != nullptr) {
    decoded->reset();
    if (r.has_solution) *decoded = decode(tm, r.values);
  }
  return r;
}

PipelineResult solve_min_swaps(const TmpInstance& inst,
                               const PipelineConfig& cfg) {
  if (!(cfg.time_limit > 0)) throw InputError("time limit must be positive");
  if (!inst.hardware.is_connected())
    throw InputError("hardware graph must be connected");
  PipelineResult res;
  auto backend = milp::make_backend(cfg.backend);

  auto t0 = Clock::now();
  if (auto f = is_subgraph_placement(inst)) {
    res.mt = res.ms_at_mt = res.ms = 0;
    res.mt_optimal = res.ms_at_mt_optimal = res.ms_optimal = true;
    res.swap_solution = SwapSolution{*f, {}};
    res.status = PipelineStatus::Optimal;
    res.seconds.steps = since(t0);
    return res;
  }

  int start = 1;
  if (cfg.use_step_lower_bound) {
    const int lb = step_lower_bound(inst);
    if (lb == kUnbounded) {
      res.status = PipelineStatus::Infeasible;
      res.message = "step lower bound is unbounded";
      return res;
    }
    start = std::max(start, lb);
  }

  // Phase 1: smallest feasible step count.
  for (int t = start; t <= cfg.max_steps && res.mt < 0; ++t) {
    TmpModel tm = build_model(inst, t + 1, cfg.variant);
    tm.model().clear_objective();
    add_reductions(tm, cfg);
    const milp::SolveResult r = run(*backend, tm, cfg);
    if (r.status == milp::SolveStatus::Infeasible) continue;
    if (r.has_solution) {
      // Any feasible point at t proves MT <= t; below t was infeasible.
      res.mt = t;
      res.mt_optimal = true;
      res.swap_solution = decode(tm, r.values);
      res.ms_at_mt = res.ms = res.swap_solution->swap_count();
      break;
    }
    res.seconds.steps = since(t0);
    res.message = "step search stopped at t=" + std::to_string(t) + " (" +
                  milp::to_string(r.status) + ")";
    return res;
  }
  res.seconds.steps = since(t0);
  if (res.mt < 0) {
    res.message = "no solution within " + std::to_string(cfg.max_steps) +
                  " steps";
    return res;
  }

  // Phase 2: fewest swaps at MT steps.
  t0 = Clock::now();
  {
    TmpModel tm = build_model(inst, res.mt + 1, cfg.variant);
    add_reductions(tm, cfg);
    const milp::SolveResult r = run(*backend, tm, cfg);
    res.seconds.swaps_at_mt = since(t0);
    if (r.has_solution) {
      SwapSolution sol = decode(tm, r.values);
      if (sol.swap_count() <= res.ms_at_mt) {
        res.ms_at_mt = res.ms = sol.swap_count();
        res.swap_solution = std::move(sol);
      }
    }
    if (!r.optimal() || !rounded(r)) {
      res.message = std::string("swap optimisation at MT: ") +
                    milp::to_string(r.status);
      return res;
    }
    res.ms_at_mt_optimal = true;
  }

  // Phase 3: one swap below MS(MT) with one swap per step.
  t0 = Clock::now();
  const int t_star = res.ms_at_mt - 1;
  if (t_star < res.mt) {
    res.ms = res.ms_at_mt;
    res.ms_optimal = true;
  } else {
    TmpModel tm = build_zopt(inst, t_star + 1);
    add_reductions(tm, cfg);
    const milp::SolveResult r = run(*backend, tm, cfg);
    if (r.status == milp::SolveStatus::Infeasible) {
      res.ms = res.ms_at_mt;
      res.ms_optimal = true;
    } else if (r.has_solution) {
      SwapSolution sol = drop_empty_steps(decode(tm, r.values));
      res.ms = sol.swap_count();
      res.swap_solution = std::move(sol);
      res.ms_optimal = r.optimal();
      if (!res.ms_optimal)
        res.message = std::string("swap minimisation: ") +
                      milp::to_string(r.status);
    } else {
      res.message = std::string("swap minimisation: ") +
                    milp::to_string(r.status);
    }
  }
  res.seconds.swaps = since(t0);
  if (res.mt_optimal && res.ms_at_mt_optimal && res.ms_optimal)
    res.status = PipelineStatus::Optimal;
  return res;
}

PipelineResult route(const TmpInstance& inst, const PipelineConfig& cfg) {
  PipelineResult res = solve_min_swaps(inst, cfg);
  if (!res.swap_solution) return res;
  auto backend = milp::make_backend(cfg.backend);
  const auto t0 = Clock::now();
  ScheduleResult s =
      schedule(inst, *res.swap_solution, backend.get(), cfg.time_limit);
  res.seconds.schedule = since(t0);
  res.routed_circuit = std::move(s.circuit);
  res.schedule_method = s.method;
  res.schedule_optimal = s.optimal;
  return res;
}

Graph builtin_hardware(const std::string& name) {
  if (name == "grid3x3") return grid_graph(3, 3);
  if (name == "twin5cycles") {
    return Graph(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                      {0, 5}, {5, 6}, {6, 7}, {7, 1}});
  }
  throw InputError("unknown hardware '" + name +
                   "' (expected grid3x3 or twin5cycles)");
}

TmpInstance generate_instance(const Graph& hardware, double density,
                              std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0))
    throw InputError("density must lie in (0, 1]");
  const int n = hardware.node_count();
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::size_t total = pairs.size();
  const auto m = static_cast<std::size_t>(
      std::ceil(static_cast<double>(total) * density - 1e-9));

  // Raw engine output only, so draws agree across standard libraries.
  std::mt19937_64 rng(seed);
  Graph a;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Edge> pool = pairs;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t r = k + static_cast<std::size_t>(rng() % (total - k));
      std::swap(pool[k], pool[r]);
    }
    pool.resize(m);
    std::sort(pool.begin(), pool.end());
    a = Graph(n, std::move(pool));
    if (a.is_connected()) break;
  }
  return TmpInstance(hardware, a);
}

TmpInstance circuit_ingest_text(const std::string& text,
                                const Graph& hardware) {
  std::istringstream in(text);
  std::string line;
  std::set<std::string> labels;
  std::vector<std::pair<std::string, std::string>> gates;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tok[0] == "qubits") {
      int count = -1;
      try {
        if (tok.size() == 2) count = std::stoi(tok[1]);
      } catch (const std::exception&) {
      }
      if (count < 0) throw InputError(where + ": bad qubits directive");
      for (int q = 0; q < count; ++q) labels.insert(std::to_string(q));
      continue;
    }
    if (tok.size() != 2) throw InputError(where + ": expected two qubits");
    if (tok[0] == tok[1]) throw InputError(where + ": gate on a single qubit");
    labels.insert(tok[0]);
    labels.insert(tok[1]);
    gates.emplace_back(tok[0], tok[1]);
  }

  std::vector<std::string> order(labels.begin(), labels.end());
  const bool numeric =
      std::all_of(order.begin(), order.end(), [](const std::string& s) {
        return !s.empty() && s.size() < 10 &&
               std::all_of(s.begin(), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
      });
  if (numeric) {
    std::sort(order.begin(), order.end(),
              [](const std::string& a, const std::string& b) {
                return std::stol(a) < std::stol(b);
              });
  }
  if (static_cast<int>(order.size()) > hardware.node_count()) {
    throw InputError("circuit uses " + std::to_string(order.size()) +
                     " qubits but the hardware has " +
                     std::to_string(hardware.node_count()) + " nodes");
  }
  std::map<std::string, int> id;
  for (std::size_t k = 0; k < order.size(); ++k)
    id[order[k]] = static_cast<int>(k);
  std::set<Edge> edges;
  for (const auto& [p, q] : gates) edges.insert(Edge(id[p], id[q]));
  return TmpInstance(hardware,
                     Graph(static_cast<int>(order.size()),
                           std::vector<Edge>(edges.begin(), edges.end())));
}

TmpInstance circuit_ingest(const std::string& path, const Graph& hardware) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return circuit_ingest_text(ss.str(), hardware);
}

}  // namespace qroute
