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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qroute/bounds.hpp"
#include "qroute/oracle.hpp"
#include "qroute/pipeline.hpp"
#include "support.hpp"

namespace qroute {

SCENARIO("Star on a path") {
  GIVEN("the six-node path and the five-leaf star") {
    const TmpInstance inst(path_graph(6), star_graph(6));
    WHEN("solving with the default configuration") {
      const PipelineResult r = solve_min_swaps(inst);
      THEN("one extra step saves a swap") {
        REQUIRE(r.status == PipelineStatus::Optimal);
        REQUIRE(r.mt == 2);
        REQUIRE(r.ms_at_mt == 4);
        REQUIRE(r.ms == 3);
        REQUIRE(r.mt_optimal);
        REQUIRE(r.ms_at_mt_optimal);
        REQUIRE(r.ms_optimal);
        REQUIRE(r.swap_solution);
        const SwapValidation v = validate_swap_solution(inst, *r.swap_solution);
        REQUIRE(v.valid);
        REQUIRE(v.swaps == 3);
      }
    }
    WHEN("routing") {
      const PipelineResult r = route(inst);
      THEN("the circuit validates with three swaps") {
        REQUIRE(r.routed_circuit);
        const CircuitValidation v =
            validate_routed_circuit(inst, *r.routed_circuit);
        REQUIRE(v.valid);
        REQUIRE(v.swaps == 3);
        REQUIRE(r.schedule_method == "milp");
        REQUIRE(r.schedule_optimal);
        const int steps = drop_empty_steps(*r.swap_solution).steps();
        REQUIRE(v.depth >= steps);
        REQUIRE(v.depth <= steps * (1 + inst.hardware.max_degree() + 1));
      }
    }
  }
}

SCENARIO("Trivial instances") {
  GIVEN("A inside H") {
    const TmpInstance inst(cycle_graph(5), path_graph(5));
    const PipelineResult r = solve_min_swaps(inst);
    REQUIRE(r.mt == 0);
    REQUIRE(r.ms == 0);
    REQUIRE(r.ms_at_mt == 0);
    REQUIRE(r.status == PipelineStatus::Optimal);
    REQUIRE(r.swap_solution->steps() == 0);
  }
  GIVEN("no gates") {
    const TmpInstance inst(path_graph(4), Graph(4, std::vector<Edge>{}));
    const PipelineResult r = route(inst);
    REQUIRE(r.ms == 0);
    REQUIRE(r.routed_circuit);
    REQUIRE(r.routed_circuit->depth() == 0);
  }
}

SCENARIO("Pipeline agrees with the exhaustive search") {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& h :
         testing::up_to_isomorphism(testing::connected_graphs(n))) {
      for (const Graph& a :
           testing::up_to_isomorphism(testing::all_graphs(n))) {
        const TmpInstance inst(h, a);
        ExhaustiveOracle oracle(inst);
        const PipelineResult r = route(inst);
        CAPTURE(testing::canonical_form(h), testing::canonical_form(a));
        REQUIRE(r.status == PipelineStatus::Optimal);
        REQUIRE(r.mt == *oracle.min_steps());
        REQUIRE(r.ms == *oracle.min_swaps());
        REQUIRE(r.ms_at_mt == *oracle.min_swaps_with_steps(r.mt));
        REQUIRE(r.mt <= r.ms);
        REQUIRE(r.ms <= r.ms_at_mt);
        REQUIRE(r.ms_at_mt <= (n / 2) * r.mt);
        REQUIRE(step_lower_bound(inst) <= r.mt);
        REQUIRE(validate_swap_solution(inst, *r.swap_solution).swaps == r.ms);
        const CircuitValidation v =
            validate_routed_circuit(inst, *r.routed_circuit);
        REQUIRE(v.valid);
        REQUIRE(v.swaps == r.ms);
      }
    }
  }
}

SCENARIO("Configuration switches keep the optimum") {
  const TmpInstance inst(path_graph(4), complete_graph(4));
  for (const ModelVariant var : {ModelVariant::YEQ, ModelVariant::YIEQ,
                                 ModelVariant::ZEQ, ModelVariant::ZIEQ}) {
    for (const bool fix : {false, true}) {
      PipelineConfig cfg;
      cfg.variant = var;
      cfg.complete_fixing = fix;
      cfg.hardware_symmetry = !fix;
      cfg.use_step_lower_bound = fix;
      const PipelineResult r = solve_min_swaps(inst, cfg);
      CAPTURE(to_string(var), fix);
      REQUIRE(r.mt == 2);
      REQUIRE(r.ms == 3);
    }
  }
}

SCENARIO("Step cap yields a partial result") {
  PipelineConfig cfg;
  cfg.max_steps = 1;
  cfg.use_step_lower_bound = false;
  const PipelineResult r =
      solve_min_swaps(TmpInstance(path_graph(5), complete_graph(5)), cfg);
  REQUIRE(r.status == PipelineStatus::Partial);
  REQUIRE_FALSE(r.mt_optimal);
  REQUIRE_FALSE(r.ms_optimal);
}

SCENARIO("Built-in hardware") {
  const Graph h1 = builtin_hardware("grid3x3");
  REQUIRE(h1.node_count() == 9);
  REQUIRE(h1.edge_count() == 12);
  const Graph h2 = builtin_hardware("twin5cycles");
  REQUIRE(h2.node_count() == 8);
  REQUIRE(h2.edge_count() == 9);
  REQUIRE(h2.is_connected());
  REQUIRE(h2.degree(0) == 3);
  REQUIRE(h2.degree(1) == 3);
  REQUIRE_THROWS_AS(builtin_hardware("heavyhex"), InputError);
}

SCENARIO("Instance generation") {
  const Graph h1 = builtin_hardware("grid3x3");
  const Graph h2 = builtin_hardware("twin5cycles");
  GIVEN("density one") {
    const TmpInstance inst = generate_instance(h1, 1.0, 3);
    REQUIRE(inst.algorithm.edge_count() == 36);
    REQUIRE(inst.algorithm.is_complete());
  }
  GIVEN("a low density") {
    REQUIRE(generate_instance(h2, 0.05, 1).algorithm.edge_count() == 2);
    REQUIRE(generate_instance(h1, 0.3, 1).algorithm.edge_count() == 11);
  }
  GIVEN("a fixed seed") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const TmpInstance a = generate_instance(h2, 0.5, seed);
      const TmpInstance b = generate_instance(h2, 0.5, seed);
      REQUIRE(a.algorithm.edges() == b.algorithm.edges());
      REQUIRE(a.algorithm.edge_count() == 14);
      REQUIRE(a.algorithm.is_connected());
    }
    REQUIRE(generate_instance(h1, 0.4, 1).algorithm.edges() !=
            generate_instance(h1, 0.4, 2).algorithm.edges());
  }
  GIVEN("a frozen draw") {
    // Guards the sampling procedure against accidental changes.
    const TmpInstance inst = generate_instance(h1, 0.2, 7);
    REQUIRE(inst.algorithm.edge_count() == 8);
  }
  GIVEN("an invalid density") {
    REQUIRE_THROWS_AS(generate_instance(h1, 0.0, 1), InputError);
    REQUIRE_THROWS_AS(generate_instance(h1, 1.5, 1), InputError);
    REQUIRE_THROWS_AS(generate_instance(h1, -0.1, 1), InputError);
  }
}

SCENARIO("Circuit ingestion") {
  const Graph h = path_graph(4);
  GIVEN("repeated gates") {
    const TmpInstance inst = circuit_ingest_text("0 1\n1 0\n0,1\n", h);
    REQUIRE(inst.algorithm.edges() == std::vector<Edge>{{0, 1}});
    REQUIRE(inst.n() == 4);
  }
  GIVEN("an empty file") {
    const TmpInstance inst = circuit_ingest_text("", h);
    REQUIRE(inst.algorithm.edge_count() == 0);
    REQUIRE(inst.algorithm.node_count() == 4);
  }
  GIVEN("comments and a qubit directive") {
    const TmpInstance inst =
        circuit_ingest_text("# cx layer\nqubits 3\n2 0  # tail\n\n", h);
    REQUIRE(inst.algorithm.edges() == std::vector<Edge>{{0, 2}});
  }
  GIVEN("non-numeric labels") {
    const TmpInstance inst = circuit_ingest_text("a b\nb c\n", h);
    REQUIRE(inst.algorithm.edge_count() == 2);
    REQUIRE(inst.algorithm.degree(1) == 2);
  }
  GIVEN("bad input") {
    REQUIRE_THROWS_AS(circuit_ingest_text("1 1\n", h), InputError);
    REQUIRE_THROWS_AS(circuit_ingest_text("0 1 2\n", h), InputError);
    REQUIRE_THROWS_AS(circuit_ingest_text("0\n", h), InputError);
    REQUIRE_THROWS_AS(
        circuit_ingest_text("0 1\n2 3\n4 5\n", h), InputError);
  }
  GIVEN("a file on disk") {
    const auto path =
        std::filesystem::temp_directory_path() / "qroute_ingest_test.txt";
    {
      std::ofstream out(path);
      out << "0 3\n1 2\n";
    }
    const TmpInstance inst = circuit_ingest(path.string(), h);
    REQUIRE(inst.algorithm.edge_count() == 2);
    std::filesystem::remove(path);
    REQUIRE_THROWS_AS(circuit_ingest(path.string(), h), InputError);
  }
}

}  // namespace qroute
