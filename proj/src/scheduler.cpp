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

#include "qroute/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qroute {

using milp::Sense;
using milp::Term;

namespace {

std::string name_of(const char* prefix, std::initializer_list<int> idx) {
  std::string s = prefix;
  for (int v : idx) s += '_' + std::to_string(v);
  return s;
}

std::vector<char> matched_nodes(int n, const Matching& m) {
  std::vector<char> used(n, 0);
  for (const Edge& e : m) used[e.u] = used[e.v] = 1;
  return used;
}

}  // namespace

ScheduleWindows compute_windows(const TmpInstance& inst,
                                const SwapSolution& sol) {
  const SwapValidation v = validate_swap_solution(inst, sol);
  if (!v.valid) {
    std::string msg = "swap solution is not valid";
    if (!v.issues.empty()) msg += ": " + v.issues.front();
    throw InputError(msg);
  }
  const Graph& h = inst.hardware;
  const int n = inst.n();
  ScheduleWindows w;
  w.solution = drop_empty_steps(sol);
  const int T = w.solution.steps();
  w.placements.push_back(TokenPlacement{});
  for (const auto& f : placement_trajectory(h, w.solution))
    w.placements.push_back(f);

  w.budget.assign(T + 2, 0);
  for (int t = 1; t <= T + 1; ++t) {
    std::vector<int> deg(n, 0);
    for (const Edge& c : inst.connections()) {
      const int i = w.placements[t].node_of(c.u);
      const int j = w.placements[t].node_of(c.v);
      if (h.has_edge(i, j)) {
        ++deg[i];
        ++deg[j];
      }
    }
    w.budget[t] = *std::max_element(deg.begin(), deg.end()) + 1;
  }

  for (const Edge& c : inst.connections()) {
    GateWindow g{c, {}, {}};
    for (int t = 1; t <= T + 1; ++t) {
      const int i = w.placements[t].node_of(c.u);
      const int j = w.placements[t].node_of(c.v);
      if (!h.has_edge(i, j)) continue;
      g.steps.push_back(t);
      if (t <= T) {
        const auto used = matched_nodes(n, w.solution.matchings[t - 1]);
        if (!used[i] && !used[j]) g.swap_steps.push_back(t);
      }
    }
    w.gates.push_back(std::move(g));
  }
  return w;
}

ScheduleModel build_schedule_model(const ScheduleWindows& w) {
  const int T = w.steps();
  const int n = w.placements.size() > 1 ? w.placements[1].size() : 0;
  ScheduleModel sm;
  auto& m = sm.model;
  m.set_integral_objective(true);

  sm.u.resize(T + 2);
  for (int t = 1; t <= T + 1; ++t)
    for (int b = 1; b <= w.budget[t]; ++b)
      sm.u[t].push_back(m.add_binary(name_of("u", {t, b}), 1.0));

  for (const GateWindow& g : w.gates) {
    if (g.steps.empty()) {
      throw InputError("gate " + std::to_string(g.gate.u) + "-" +
                       std::to_string(g.gate.v) + " is never executable");
    }
    std::vector<ScheduleVar> vars;
    for (int t : g.steps)
      for (int b = 1; b <= w.budget[t]; ++b)
        vars.push_back(
            {t, b, m.add_binary(name_of("a", {g.gate.u, g.gate.v, t, b}))});
    for (int t : g.swap_steps)
      vars.push_back(
          {t, 0, m.add_binary(name_of("a", {g.gate.u, g.gate.v, t, 0}))});
    std::sort(vars.begin(), vars.end(), [](const auto& x, const auto& y) {
      return std::pair(x.t, x.layer) < std::pair(y.t, y.layer);
    });
    sm.a.push_back(std::move(vars));
  }

  for (std::size_t k = 0; k < w.gates.size(); ++k) {
    std::vector<Term> r;
    for (const auto& v : sm.a[k]) r.push_back({v.var, 1.0});
    m.add_row(name_of("once", {w.gates[k].gate.u, w.gates[k].gate.v}),
              std::move(r), Sense::Equal, 1.0);
  }

  // Per token and slot: gates touching the token, in (t, layer) order.
  std::map<std::tuple<int, int, int>, std::vector<int>> touching;
  for (std::size_t k = 0; k < w.gates.size(); ++k) {
    for (const auto& v : sm.a[k]) {
      touching[{w.gates[k].gate.u, v.t, v.layer}].push_back(v.var);
      touching[{w.gates[k].gate.v, v.t, v.layer}].push_back(v.var);
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int t = 1; t <= T + 1; ++t) {
      for (int b = 1; b <= w.budget[t]; ++b) {
        auto it = touching.find({p, t, b});
        if (it == touching.end()) continue;
        std::vector<Term> r;
        for (int var : it->second) r.push_back({var, 1.0});
        r.push_back({sm.u[t][b - 1], -1.0});
        m.add_row(name_of("layer", {p, t, b}), std::move(r), Sense::LessEqual,
                  0.0);
      }
      // Tokens moved by M_t have no gates in S_t by construction of the
      // swap windows, so only unmatched tokens need a row.
      auto it = touching.find({p, t, 0});
      if (it == touching.end() || it->second.size() < 2) continue;
      std::vector<Term> r;
      for (int var : it->second) r.push_back({var, 1.0});
      m.add_row(name_of("swaplayer", {p, t}), std::move(r), Sense::LessEqual,
                1.0);
    }
  }
  for (int t = 1; t <= T + 1; ++t)
    for (int b = 1; b < w.budget[t]; ++b)
      m.add_row(name_of("order", {t, b}),
                {{sm.u[t][b], 1.0}, {sm.u[t][b - 1], -1.0}}, Sense::LessEqual,
                0.0);
  return sm;
}

ScheduleAssignment assignment_from_values(const ScheduleModel& sm,
                                          const std::vector<double>& values) {
  ScheduleAssignment out;
  for (const auto& vars : sm.a) {
    std::pair<int, int> slot{-1, -1};
    for (const auto& v : vars) {
      if (values[v.var] > 0.5) {
        if (slot.first >= 0) throw InputError("gate assigned twice");
        slot = {v.t, v.layer};
      }
    }
    if (slot.first < 0) throw InputError("gate not assigned");
    out.slot.push_back(slot);
  }
  return out;
}

RoutedCircuit assemble_circuit(const ScheduleWindows& w,
                               const ScheduleAssignment& assignment) {
  const int T = w.steps();
  if (assignment.slot.size() != w.gates.size()) {
    throw InputError("assignment size does not match gate count");
  }
  // (t, layer) -> gates; layer 0 is the swap layer.
  std::map<std::pair<int, int>, std::vector<Edge>> by_slot;
  for (std::size_t k = 0; k < w.gates.size(); ++k) {
    const auto [t, b] = assignment.slot[k];
    const GateWindow& g = w.gates[k];
    const auto& allowed = b == 0 ? g.swap_steps : g.steps;
    if (b < 0 || std::find(allowed.begin(), allowed.end(), t) == allowed.end())
      throw InputError("gate scheduled outside its window");
    const TokenPlacement& f = w.placements[t];
    by_slot[{t, b}].push_back(Edge(f.node_of(g.gate.u), f.node_of(g.gate.v)));
  }

  RoutedCircuit rc;
  rc.initial = w.solution.initial;
  for (int t = 1; t <= T + 1; ++t) {
    for (auto it = by_slot.lower_bound({t, 1});
         it != by_slot.end() && it->first.first == t; ++it) {
      rc.layers.push_back(CircuitLayer{{}, it->second});
    }
    if (t <= T) {
      CircuitLayer s{w.solution.matchings[t - 1], {}};
      if (auto it = by_slot.find({t, 0}); it != by_slot.end())
        s.gates = it->second;
      rc.layers.push_back(std::move(s));
    }
  }
  for (const CircuitLayer& l : rc.layers) {
    std::set<int> seen;
    for (const auto* list : {&l.swaps, &l.gates})
      for (const Edge& e : *list)
        if (!seen.insert(e.u).second || !seen.insert(e.v).second)
          throw InputError("two operations share a node in one layer");
  }
  return rc;
}

ScheduleAssignment greedy_schedule(const ScheduleWindows& w) {
  const int T = w.steps();
  const int n = w.placements.size() > 1 ? w.placements[1].size() : 0;
  // Occupied nodes per opened empty layer, and per swap layer.
  std::vector<std::vector<std::vector<char>>> empty(T + 2);
  std::vector<std::vector<char>> swap(T + 1);
  for (int t = 1; t <= T; ++t)
    swap[t] = matched_nodes(n, w.solution.matchings[t - 1]);

  ScheduleAssignment out;
  for (const GateWindow& g : w.gates) {
    if (g.steps.empty()) throw InputError("gate is never executable");
    std::pair<int, int> chosen{-1, -1};
    for (int t : g.steps) {
      const int i = w.placements[t].node_of(g.gate.u);
      const int j = w.placements[t].node_of(g.gate.v);
      for (std::size_t b = 0; b < empty[t].size() && chosen.first < 0; ++b)
        if (!empty[t][b][i] && !empty[t][b][j])
          chosen = {t, static_cast<int>(b) + 1};
      if (chosen.first < 0 && t <= T && !swap[t][i] && !swap[t][j] &&
          std::find(g.swap_steps.begin(), g.swap_steps.end(), t) !=
              g.swap_steps.end())
        chosen = {t, 0};
      if (chosen.first >= 0) break;
    }
    if (chosen.first < 0) {
      const int t = g.steps.front();
      empty[t].emplace_back(n, 0);
      chosen = {t, static_cast<int>(empty[t].size())};
    }
    const auto [t, b] = chosen;
    auto& used = b == 0 ? swap[t] : empty[t][b - 1];
    used[w.placements[t].node_of(g.gate.u)] = 1;
    used[w.placements[t].node_of(g.gate.v)] = 1;
    out.slot.push_back(chosen);
  }
  return out;
}

ScheduleResult schedule(const TmpInstance& inst, const SwapSolution& sol,
                        milp::SolverBackend* backend, double time_limit) {
  const ScheduleWindows w = compute_windows(inst, sol);
  ScheduleResult res;
  if (backend != nullptr) {
    const ScheduleModel sm = build_schedule_model(w);
    milp::SolveOptions opts;
    opts.time_limit = time_limit;
    const milp::SolveResult r = backend->solve(sm.model, opts);
    res.status = r.status;
    res.seconds = r.seconds;
    if (r.has_solution) {
      res.assignment = assignment_from_values(sm, r.values);
      res.method = "milp";
      res.optimal = r.optimal();
    }
  }
  if (res.method.empty()) {
    res.assignment = greedy_schedule(w);
    res.method = "greedy";
    res.optimal = false;
  }
  res.circuit = assemble_circuit(w, res.assignment);
  res.added_layers = res.circuit.depth() - w.steps();
  return res;
}

}  // namespace qroute
