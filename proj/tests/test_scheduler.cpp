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

#include <catch_amalgamated.hpp>

#include "qroute/milp/backend.hpp"
#include "qroute/oracle.hpp"
#include "qroute/scheduler.hpp"
#include "support.hpp"

namespace qroute {

namespace {

std::multiset<Edge> swap_multiset(const RoutedCircuit& rc) {
  std::multiset<Edge> out;
  for (const auto& l : rc.layers) out.insert(l.swaps.begin(), l.swaps.end());
  return out;
}

std::multiset<Edge> swap_multiset(const SwapSolution& s) {
  std::multiset<Edge> out;
  for (const auto& m : s.matchings) out.insert(m.begin(), m.end());
  return out;
}

}  // namespace

SCENARIO("Windows") {
  GIVEN("a zero-step solution with A inside H") {
    const TmpInstance inst(path_graph(4), path_graph(4));
    const ScheduleWindows w =
        compute_windows(inst, {TokenPlacement::identity(4), {}});
    for (const auto& g : w.gates) {
      REQUIRE(g.steps == std::vector<int>{1});
      REQUIRE(g.swap_steps.empty());
    }
    REQUIRE(w.budget[1] == 3);
  }
  GIVEN("the star walking down the path") {
    const TmpInstance inst(path_graph(6), star_graph(6));
    const SwapSolution sol{TokenPlacement({1, 0, 2, 3, 4, 5}),
                           {{{1, 2}}, {{2, 3}}, {{3, 4}}}};
    const ScheduleWindows w = compute_windows(inst, sol);
    for (const auto& g : w.gates) REQUIRE_FALSE(g.steps.empty());
    // Connection {0,1}: adjacent only before the first swap, which moves 0.
    REQUIRE(w.gates[0].steps == std::vector<int>{1});
    REQUIRE(w.gates[0].swap_steps.empty());
    // Connection {0,5}: only at the final placement.
    REQUIRE(w.gates[4].steps == std::vector<int>{4});
  }
  GIVEN("an invalid solution") {
    const TmpInstance inst(path_graph(3), complete_graph(3));
    REQUIRE_THROWS_AS(compute_windows(inst, {TokenPlacement::identity(3), {}}),
                      InputError);
  }
  GIVEN("empty steps") {
    const TmpInstance inst(path_graph(3), complete_graph(3));
    const ScheduleWindows w = compute_windows(
        inst, {TokenPlacement::identity(3), {{}, {{1, 2}}, {}}});
    REQUIRE(w.steps() == 1);
  }
}

SCENARIO("Scheduling model") {
  auto backend = milp::make_backend("default");
  GIVEN("the edges of P4 as gates with no swaps") {
    const TmpInstance inst(path_graph(4), path_graph(4));
    const ScheduleWindows w =
        compute_windows(inst, {TokenPlacement::identity(4), {}});
    const ScheduleModel sm = build_schedule_model(w);
    const auto r = backend->solve(sm.model, {});
    REQUIRE(r.optimal());
    REQUIRE(milp::integral_objective(r) == 2);
    const RoutedCircuit rc = assemble_circuit(w, assignment_from_values(sm, r.values));
    REQUIRE(rc.depth() == 2);
    REQUIRE(validate_routed_circuit(inst, rc).valid);
  }
  GIVEN("a single gate next to a swap") {
    // H = P4, A = {2,3}; the swap on {0,1} leaves room for the gate.
    const TmpInstance inst(path_graph(4),
                           Graph(4, std::vector<Edge>{{2, 3}}));
    const ScheduleResult s = schedule(
        inst, {TokenPlacement::identity(4), {{{0, 1}}}}, backend.get());
    REQUIRE(s.optimal);
    REQUIRE(s.added_layers == 0);
    REQUIRE(s.circuit.depth() == 1);
    const ScheduleResult alone = schedule(
        inst, {TokenPlacement::identity(4), {}}, backend.get());
    REQUIRE(alone.added_layers == 1);
  }
  GIVEN("a gate that is never executable") {
    ScheduleWindows w;
    w.solution = {TokenPlacement::identity(2), {}};
    w.placements = {TokenPlacement{}, TokenPlacement::identity(2)};
    w.budget = {0, 1};
    w.gates.push_back({Edge(0, 1), {}, {}});
    REQUIRE_THROWS_AS(build_schedule_model(w), InputError);
  }
}

SCENARIO("Assembly") {
  const TmpInstance inst(path_graph(4), Graph(4, std::vector<Edge>{}));
  const SwapSolution sol{TokenPlacement::identity(4), {{{0, 1}}, {{1, 2}}}};
  const ScheduleWindows w = compute_windows(inst, sol);
  const RoutedCircuit rc = assemble_circuit(w, {});
  REQUIRE(rc.depth() == 2);
  REQUIRE(rc.layers[0].swaps == Matching{{0, 1}});
  REQUIRE(rc.layers[0].gates.empty());
  GIVEN("an assignment outside a window") {
    const TmpInstance inst2(path_graph(3), path_graph(3));
    const ScheduleWindows w2 =
        compute_windows(inst2, {TokenPlacement::identity(3), {{{0, 1}}}});
    // Gate {0,1} can run at placement 1 or 2 but not inside swap layer 1.
    REQUIRE_THROWS_AS(assemble_circuit(w2, {{{1, 0}, {1, 1}}}), InputError);
    // Both gates in the same empty layer share token 1.
    REQUIRE_THROWS_AS(assemble_circuit(w2, {{{1, 1}, {1, 1}}}), InputError);
  }
}

SCENARIO("MILP schedule equals the exhaustive minimum") {
  auto backend = milp::make_backend("default");
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& h :
         testing::up_to_isomorphism(testing::connected_graphs(n))) {
      const auto ms = all_matchings(h);
      std::vector<SwapSolution> sols{{TokenPlacement::identity(n), {}}};
      for (std::size_t a = 1; a < ms.size(); ++a) {
        sols.push_back({TokenPlacement::identity(n), {ms[a]}});
        for (std::size_t b = 1; b < ms.size(); ++b)
          sols.push_back({TokenPlacement::identity(n), {ms[a], ms[b]}});
      }
      for (const Graph& alg : testing::all_graphs(n)) {
        if (alg.edge_count() == 0 || alg.edge_count() > 4) continue;
        const TmpInstance inst(h, alg);
        for (const SwapSolution& sol : sols) {
          if (!validate_swap_solution(inst, sol).valid) continue;
          const ScheduleWindows w = compute_windows(inst, sol);
          const ScheduleResult s = schedule(inst, sol, backend.get());
          CAPTURE(n, testing::canonical_form(h), alg.edges().size());
          REQUIRE(s.optimal);
          REQUIRE(s.circuit.depth() == testing::brute_force_depth(w));
          REQUIRE(validate_routed_circuit(inst, s.circuit).valid);
          REQUIRE(swap_multiset(s.circuit) == swap_multiset(sol));
          const RoutedCircuit g = assemble_circuit(w, greedy_schedule(w));
          REQUIRE(validate_routed_circuit(inst, g).valid);
          REQUIRE(g.depth() >= s.circuit.depth());
          ++checked;
        }
      }
    }
  }
  REQUIRE(checked > 100);
}

SCENARIO("Greedy fallback without a backend") {
  const TmpInstance inst(path_graph(6), star_graph(6));
  const SwapSolution sol{TokenPlacement({1, 0, 2, 3, 4, 5}),
                         {{{1, 2}}, {{2, 3}}, {{3, 4}}}};
  const ScheduleResult s = schedule(inst, sol, nullptr);
  REQUIRE(s.method == "greedy");
  REQUIRE_FALSE(s.optimal);
  REQUIRE(validate_routed_circuit(inst, s.circuit).valid);
  REQUIRE(s.circuit.swap_count() == 3);
}

}  // namespace qroute
