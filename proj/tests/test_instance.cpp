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

#include "qroute/instance.hpp"
#include "qroute/io.hpp"

namespace qroute {

namespace {

TmpInstance star_on_path() {
  return TmpInstance(path_graph(6), star_graph(6));
}

}  // namespace

SCENARIO("Instances pad the algorithm graph") {
  TmpInstance inst(path_graph(5), path_graph(3));
  REQUIRE(inst.n() == 5);
  REQUIRE(inst.algorithm.node_count() == 5);
  REQUIRE(inst.logical_qubits == 3);
  REQUIRE(inst.connections().size() == 2);
  REQUIRE_THROWS_AS(TmpInstance(path_graph(3), path_graph(4)), InputError);
}

SCENARIO("Placements") {
  TokenPlacement f({2, 0, 1});
  REQUIRE(f.node_of(0) == 2);
  REQUIRE(f.token_at(2) == 0);
  REQUIRE(f.token_at(0) == 1);
  REQUIRE_THROWS_AS(TokenPlacement({0, 0, 1}), InputError);
  REQUIRE_THROWS_AS(TokenPlacement({0, 3, 1}), InputError);
}

SCENARIO("Applying matchings") {
  const Graph h = path_graph(4);
  const TokenPlacement f = TokenPlacement::identity(4);
  WHEN("two disjoint swaps are applied") {
    const TokenPlacement g = apply_matching(h, f, {{0, 1}, {2, 3}});
    THEN("the tokens exchange nodes") {
      REQUIRE(g.nodes() == std::vector<int>{1, 0, 3, 2});
    }
  }
  WHEN("the layer is not a matching") {
    REQUIRE_THROWS_AS(apply_matching(h, f, {{0, 1}, {1, 2}}), InputError);
    REQUIRE_THROWS_AS(apply_matching(h, f, {{0, 2}}), InputError);
  }
  REQUIRE(is_matching_in(h, {}));
  REQUIRE_FALSE(is_matching_in(h, {{0, 3}}));
}

SCENARIO("Validating swap solutions") {
  const TmpInstance inst = star_on_path();
  GIVEN("the centre token walking down the path") {
    SwapSolution sol{TokenPlacement({1, 0, 2, 3, 4, 5}),
                     {{{1, 2}}, {{2, 3}}, {{3, 4}}}};
    const SwapValidation v = validate_swap_solution(inst, sol);
    THEN("it is valid with three steps and three swaps") {
      REQUIRE(v.valid);
      REQUIRE(v.steps == 3);
      REQUIRE(v.swaps == 3);
    }
  }
  GIVEN("the same walk stopped one swap early") {
    SwapSolution sol{TokenPlacement({1, 0, 2, 3, 4, 5}),
                     {{{1, 2}}, {{2, 3}}}};
    const SwapValidation v = validate_swap_solution(inst, sol);
    REQUIRE_FALSE(v.valid);
    REQUIRE(v.uncovered == std::vector<Edge>{{0, 5}});
  }
  GIVEN("a solution that leaves a connection unmet") {
    SwapSolution sol{TokenPlacement::identity(6), {}};
    const SwapValidation v = validate_swap_solution(inst, sol);
    REQUIRE_FALSE(v.valid);
    REQUIRE(v.uncovered.size() == 4);
  }
  GIVEN("a placement of the wrong size") {
    SwapSolution sol{TokenPlacement::identity(5), {}};
    REQUIRE_THROWS_AS(validate_swap_solution(inst, sol), InputError);
  }
}

SCENARIO("Validating routed circuits") {
  const TmpInstance inst(path_graph(3), complete_graph(3));
  GIVEN("gates, then a swap, then the last gate") {
    RoutedCircuit rc{TokenPlacement::identity(3),
                     {{{}, {{0, 1}}}, {{{1, 2}}, {}}, {{}, {{0, 1}}}, {{}, {{1, 2}}}}};
    // Layer 1 runs (0,1); after swapping nodes 1,2 token 2 sits on node 1.
    const CircuitValidation v = validate_routed_circuit(inst, rc);
    THEN("every gate ran once") {
      INFO((v.issues.empty() ? std::string() : v.issues.front()));
      REQUIRE(v.valid);
      REQUIRE(v.depth == 4);
      REQUIRE(v.swaps == 1);
    }
  }
  GIVEN("a gate executed twice") {
    RoutedCircuit rc{TokenPlacement::identity(3),
                     {{{}, {{0, 1}}}, {{}, {{0, 1}}}}};
    REQUIRE_FALSE(validate_routed_circuit(inst, rc).valid);
  }
  GIVEN("a layer where a swap and a gate share a node") {
    RoutedCircuit rc{TokenPlacement::identity(3), {{{{0, 1}}, {{1, 2}}}}};
    REQUIRE_FALSE(validate_routed_circuit(inst, rc).valid);
  }
}

SCENARIO("Subgraph placements") {
  REQUIRE(is_subgraph_placement(TmpInstance(cycle_graph(4), path_graph(4))));
  REQUIRE_FALSE(
      is_subgraph_placement(TmpInstance(path_graph(4), star_graph(4))));
  const auto f = is_subgraph_placement(TmpInstance(star_graph(5), star_graph(4)));
  REQUIRE(f);
  REQUIRE(f->node_of(0) == 0);
}

SCENARIO("Relabelling a solution keeps it valid for the relabelled instance") {
  const TmpInstance inst = star_on_path();
  SwapSolution sol{TokenPlacement({1, 0, 2, 3, 4, 5}),
                   {{{1, 2}}, {{2, 3}}, {{3, 4}}}};
  const std::vector<int> nodes{5, 4, 3, 2, 1, 0};
  const std::vector<int> tokens{1, 0, 2, 3, 4, 5};
  const TmpInstance moved(inst.hardware.relabeled(nodes),
                          inst.algorithm.relabeled(tokens));
  REQUIRE(validate_swap_solution(moved, relabel_solution(sol, nodes, tokens))
              .valid);
  REQUIRE_THROWS_AS(relabel_solution(sol, std::vector<int>{0, 1}, tokens),
                    InputError);
}

SCENARIO("Empty steps are dropped") {
  SwapSolution sol{TokenPlacement::identity(3), {{}, {{0, 1}}, {}}};
  REQUIRE(drop_empty_steps(sol).steps() == 1);
  REQUIRE(drop_empty_steps(sol).swap_count() == 1);
}

SCENARIO("JSON round trips") {
  const TmpInstance inst = star_on_path();
  const TmpInstance back = instance_from_json(to_json(inst));
  REQUIRE(back.hardware.edges() == inst.hardware.edges());
  REQUIRE(back.algorithm.edges() == inst.algorithm.edges());
  SwapSolution sol{TokenPlacement({2, 1, 3, 0, 4, 5}), {{{2, 3}}, {}}};
  const SwapSolution s2 = solution_from_json(to_json(sol));
  REQUIRE(s2.initial == sol.initial);
  REQUIRE(s2.matchings == sol.matchings);
  REQUIRE_THROWS_AS(instance_from_json(json::parse(R"({"hardware": 3})")),
                    InputError);
  REQUIRE_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

}  // namespace qroute
