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

#include <numeric>

#include "qroute/bounds.hpp"
#include "qroute/constructive.hpp"
#include "qroute/oracle.hpp"
#include "support.hpp"

namespace qroute {

namespace {

void require_dfs_properties(const Graph& tree) {
  const int n = tree.node_count();
  DfsTrace trace;
  const SwapSolution sol = dfs_swap_solve(tree, &trace);
  const SwapValidation v =
      validate_swap_solution(TmpInstance(tree, complete_graph(n)), sol);
  REQUIRE(v.valid);
  for (const Matching& m : sol.matchings) REQUIRE(m.size() == 1);
  REQUIRE(v.swaps <= swap_upper_bound(n));
  REQUIRE(static_cast<int>(trace.iterations.size()) == std::max(0, n - 2));
  for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
    const auto& it = trace.iterations[k];
    // Each iteration sees one node fewer than the previous one.
    REQUIRE(static_cast<int>(it.dfs_order.size()) == n - static_cast<int>(k));
    REQUIRE(it.dfs_order.front() == it.leaf);
    REQUIRE(tree.has_edge(it.pivot, it.leaf));
    REQUIRE(it.removed_leaf == it.dfs_order.back());
  }
}

}  // namespace

SCENARIO("DFS sweep on small trees") {
  GIVEN("P3") {
    const SwapSolution sol = dfs_swap_solve(path_graph(3));
    REQUIRE(sol.swap_count() <= 1);
    require_dfs_properties(path_graph(3));
  }
  GIVEN("P6") {
    REQUIRE(dfs_swap_solve(path_graph(6)).swap_count() <= 16);
    require_dfs_properties(path_graph(6));
  }
  GIVEN("stars and P2") {
    for (int n = 2; n <= 8; ++n) require_dfs_properties(star_graph(n));
  }
  GIVEN("non-trees") {
    REQUIRE_THROWS_AS(dfs_swap_solve(cycle_graph(4)), InputError);
    REQUIRE_THROWS_AS(dfs_swap_solve(Graph(3, std::vector<Edge>{{0, 1}})),
                      InputError);
  }
}

SCENARIO("DFS sweep on random trees") {
  std::mt19937_64 rng(2024);
  for (int n = 3; n <= 12; ++n) {
    for (int k = 0; k < 25; ++k) {
      const Graph t = testing::random_tree(n, rng);
      CAPTURE(n, k);
      require_dfs_properties(t);
    }
  }
}

SCENARIO("DFS sweep is never better than optimal") {
  std::mt19937_64 rng(8);
  for (int n = 3; n <= 6; ++n) {
    const Graph t = testing::random_tree(n, rng);
    const TmpInstance inst(t, complete_graph(n));
    REQUIRE(dfs_swap_solve(t).swap_count() >=
            ExhaustiveOracle(inst).min_swaps().value());
  }
}

SCENARIO("Path sequences") {
  REQUIRE(path_sequence(2) == std::vector<Matching>{{{0, 1}}});
  REQUIRE(path_sequence(5).size() == 7);
  REQUIRE_THROWS_AS(path_sequence(1), InputError);
  for (int k = 2; k <= 6; ++k) {
    const auto seq = path_sequence(k);
    REQUIRE(static_cast<int>(seq.size()) == 2 * k - 3);
    const Graph p = path_graph(k);
    std::vector<int> start(k);
    std::iota(start.begin(), start.end(), 0);
    do {
      TokenPlacement f{std::vector<int>(start)};
      const int top_token = f.token_at(0);
      std::vector<char> visited(k, 0);
      visited[top_token] = 1;
      for (const Matching& m : seq) {
        f = apply_matching(p, f, m);
        visited[f.token_at(0)] = 1;
      }
      CAPTURE(k);
      REQUIRE(std::all_of(visited.begin(), visited.end(),
                          [](char c) { return c != 0; }));
      REQUIRE(f.node_of(top_token) == k - 1);
    } while (std::next_permutation(start.begin(), start.end()));
  }
}

SCENARIO("Quadratic subdivided stars") {
  GIVEN("the graph shape") {
    const Graph g = qsst_graph(3);
    REQUIRE(g.node_count() == 10);
    REQUIRE(g.is_tree());
    REQUIRE(g.degree(0) == 3);
    REQUIRE(g.has_edge(qsst_node(3, 1, 1), qsst_node(3, 1, 2)));
  }
  for (int m = 2; m <= 4; ++m) {
    const int n = m * m + 1;
    const SwapSolution sol = qsst_solve(m);
    const SwapValidation v =
        validate_swap_solution(TmpInstance(qsst_graph(m), complete_graph(n)),
                               sol);
    CAPTURE(m, v.steps);
    REQUIRE(v.valid);
    // (m-1) m^2 sweep iterations plus the insertion steps between them.
    REQUIRE(v.steps <= (m - 1) * m * m + 3 * m * m);
  }
  GIVEN("m = 2") {
    const TmpInstance inst(qsst_graph(2), complete_graph(5));
    REQUIRE(qsst_solve(2).swap_count() >=
            ExhaustiveOracle(inst).min_swaps().value());
  }
  REQUIRE_THROWS_AS(qsst_solve(1), InputError);
}

}  // namespace qroute
