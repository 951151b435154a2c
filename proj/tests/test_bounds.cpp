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

#include "qroute/bounds.hpp"
#include "qroute/oracle.hpp"
#include "support.hpp"

namespace qroute {

SCENARIO("Swap-rate bound per edge") {
  REQUIRE(delta_prime(complete_graph(3)) == 0);
  REQUIRE(delta_prime(path_graph(4)) == 2);
  REQUIRE(delta_prime(star_graph(6)) == 4);
  REQUIRE_THROWS_AS(delta_prime(empty_graph(3)), InputError);
  for (const Graph& g : testing::connected_graphs(5)) {
    REQUIRE(delta_prime(g) <= 2 * g.max_degree() - 2);
  }
}

SCENARIO("Step-rate bound from the degree sequence") {
  REQUIRE(d_of_h(path_graph(4)) == 2);
  REQUIRE(d_of_h(path_graph(6)) == 3);
  // 5,1,1,1,1,1: K=1 gives min(4, 4), K=2 gives min(4, 3), K=3 min(4, 2).
  REQUIRE(d_of_h(star_graph(6)) == 4);
  REQUIRE_THROWS_AS(d_of_h(empty_graph(2)), InputError);
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 12; ++n) {
    REQUIRE(d_of_h(testing::random_tree(n, rng)) <= n - 2);
  }
}

SCENARIO("Lower bounds on swaps and steps") {
  REQUIRE(swap_lower_bound(TmpInstance(path_graph(6), complete_graph(6))) ==
          5);
  REQUIRE(swap_lower_bound(TmpInstance(path_graph(6), star_graph(6))) == 0);
  REQUIRE(step_lower_bound(TmpInstance(path_graph(4), complete_graph(4))) ==
          2);
  REQUIRE(step_lower_bound(TmpInstance(cycle_graph(5), path_graph(4))) == 0);
  GIVEN("trees with a complete algorithm graph") {
    std::mt19937_64 rng(17);
    for (int n = 3; n <= 12; ++n) {
      const Graph t = testing::random_tree(n, rng);
      REQUIRE(step_lower_bound(TmpInstance(t, complete_graph(n))) >=
              (n - 1 + 1) / 2);
    }
  }
  GIVEN("a triangle plus an isolated node") {
    // Every swap stays inside the triangle and creates nothing new.
    TmpInstance inst(Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}),
                     complete_graph(4));
    REQUIRE(swap_lower_bound(inst) == kUnbounded);
  }
}

SCENARIO("Upper bound on swaps") {
  REQUIRE(swap_upper_bound(2) == 0);
  REQUIRE(swap_upper_bound(3) == 1);
  REQUIRE(swap_upper_bound(6) == 16);
  REQUIRE_THROWS_AS(swap_upper_bound(1), InputError);
}

SCENARIO("Bounds never exceed exact values") {
  for (int n = 2; n <= 5; ++n) {
    const auto hs = testing::up_to_isomorphism(testing::connected_graphs(n));
    const auto as = testing::up_to_isomorphism(testing::all_graphs(n));
    for (const Graph& h : hs) {
      for (const Graph& a : as) {
        const TmpInstance inst(h, a);
        ExhaustiveOracle oracle(inst);
        const int mt = oracle.min_steps().value();
        const int ms = oracle.min_swaps().value();
        CAPTURE(n, testing::canonical_form(h), testing::canonical_form(a));
        REQUIRE(step_lower_bound(inst) <= mt);
        REQUIRE(swap_lower_bound(inst) <= ms);
        REQUIRE(ms <= swap_upper_bound(n));
        // MT <= MS <= floor(n/2) MT.
        REQUIRE(mt <= ms);
        REQUIRE(ms <= n / 2 * mt);
      }
    }
  }
}

SCENARIO("Adding hardware edges or removing connections never raises MT") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const Graph h = testing::random_connected_graph(5, 0.4, rng);
    const Graph a = testing::random_connected_graph(5, 0.6, rng);
    const int mt = ExhaustiveOracle(TmpInstance(h, a)).min_steps().value();
    std::vector<Edge> more = h.edges();
    const Graph k5 = complete_graph(5);
    for (const Edge& e : k5.edges())
      if (!h.has_edge(e.u, e.v)) {
        more.push_back(e);
        break;
      }
    std::sort(more.begin(), more.end());
    std::vector<Edge> fewer = a.edges();
    fewer.pop_back();
    REQUIRE(ExhaustiveOracle(TmpInstance(Graph(5, more), a))
                .min_steps()
                .value() <= mt);
    REQUIRE(ExhaustiveOracle(TmpInstance(h, Graph(5, fewer)))
                .min_steps()
                .value() <= mt);
  }
}

}  // namespace qroute
