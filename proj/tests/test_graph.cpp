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

#include "qroute/graph.hpp"
#include "support.hpp"

namespace qroute {

SCENARIO("Graph construction normalises and rejects bad edges") {
  GIVEN("edges given in either orientation") {
    Graph g(3, std::vector<Edge>{{2, 1}, {1, 0}});
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.edges()[0] == Edge(0, 1));
    REQUIRE(g.edges()[1] == Edge(1, 2));
    REQUIRE(g.has_edge(2, 1));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE_FALSE(g.has_edge(1, 1));
  }
  GIVEN("invalid edge lists") {
    REQUIRE_THROWS_AS(Graph(3, std::vector<Edge>{{1, 1}}), InputError);
    REQUIRE_THROWS_AS(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}),
                      InputError);
    REQUIRE_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), InputError);
  }
}

SCENARIO("Standard graph families") {
  GIVEN("paths, cycles, stars, grids, complete graphs") {
    REQUIRE(path_graph(6).edge_count() == 5);
    REQUIRE(path_graph(6).is_tree());
    REQUIRE(cycle_graph(5).edge_count() == 5);
    REQUIRE_FALSE(cycle_graph(5).is_tree());
    REQUIRE(star_graph(4).degree(0) == 3);
    REQUIRE(star_graph(4).max_degree() == 3);
    REQUIRE(grid_graph(3, 3).edge_count() == 12);
    REQUIRE(grid_graph(3, 3).degree(4) == 4);
    REQUIRE(complete_graph(5).is_complete());
    REQUIRE(complete_graph(5).edge_count() == 10);
    REQUIRE_FALSE(empty_graph(3).is_connected());
  }
}

SCENARIO("Distances use -1 for unreachable pairs") {
  Graph g(4, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto d = g.distances();
  REQUIRE(d[0][2] == 2);
  REQUIRE(d[2][0] == 2);
  REQUIRE(d[0][0] == 0);
  REQUIRE(d[0][3] == -1);
}

SCENARIO("Relabelling and padding") {
  const Graph p = path_graph(3);
  const std::vector<int> map{2, 0, 1};
  const Graph r = p.relabeled(map);
  REQUIRE(r.has_edge(2, 0));
  REQUIRE(r.has_edge(0, 1));
  REQUIRE_FALSE(r.has_edge(2, 1));
  const Graph q = p.padded(5);
  REQUIRE(q.node_count() == 5);
  REQUIRE(q.edge_count() == 2);
  REQUIRE(q.degree(4) == 0);
}

SCENARIO("Graph enumeration used by the sweeps") {
  // Connected labelled graphs: 1, 4, 38 for n = 2, 3, 4; classes 1, 2, 6.
  REQUIRE(testing::connected_graphs(2).size() == 1);
  REQUIRE(testing::connected_graphs(3).size() == 4);
  REQUIRE(testing::connected_graphs(4).size() == 38);
  REQUIRE(testing::up_to_isomorphism(testing::connected_graphs(3)).size() == 2);
  REQUIRE(testing::up_to_isomorphism(testing::connected_graphs(4)).size() == 6);
  REQUIRE(testing::up_to_isomorphism(testing::connected_graphs(5)).size() ==
          21);
}

SCENARIO("Random trees are trees") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k < 20; ++k) {
      REQUIRE(testing::random_tree(n, rng).is_tree());
    }
  }
}

}  // namespace qroute
