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

#include "qroute/oracle.hpp"
#include "support.hpp"

namespace qroute {

SCENARIO("Star on a path") {
  const TmpInstance inst(path_graph(6), star_graph(6));
  ExhaustiveOracle oracle(inst);
  REQUIRE(oracle.min_steps() == 2);
  REQUIRE(oracle.min_swaps_with_steps(1) == std::nullopt);
  REQUIRE(oracle.min_swaps_with_steps(2) == 4);
  REQUIRE(oracle.min_swaps_with_steps(3) == 3);
  REQUIRE(oracle.min_swaps() == 3);
}

SCENARIO("Known minimum step counts") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    REQUIRE(ExhaustiveOracle(TmpInstance(path_graph(n), complete_graph(n)))
                .min_steps() == n - 2);
    REQUIRE(ExhaustiveOracle(TmpInstance(star_graph(n), complete_graph(n)))
                .min_steps() == n - 2);
  }
}

SCENARIO("Trivial cases") {
  REQUIRE(ExhaustiveOracle(TmpInstance(path_graph(3), complete_graph(3)))
              .min_swaps_with_steps(0) == std::nullopt);
  ExhaustiveOracle sub(TmpInstance(cycle_graph(5), path_graph(5)));
  REQUIRE(sub.min_steps() == 0);
  REQUIRE(sub.min_swaps() == 0);
  ExhaustiveOracle none(TmpInstance(path_graph(4), empty_graph(4)));
  REQUIRE(none.min_swaps() == 0);
  const int ms = ExhaustiveOracle(TmpInstance(path_graph(4), complete_graph(4)))
                     .min_swaps()
                     .value();
  REQUIRE(ms >= 2);
  REQUIRE(ms == 3);
}

SCENARIO("Size limit") {
  const TmpInstance big(path_graph(8), complete_graph(8));
  REQUIRE_THROWS_AS(ExhaustiveOracle(big), SizeLimitError);
  // The hard cap wins over a larger request.
  const TmpInstance huge(path_graph(12), complete_graph(12));
  REQUIRE_THROWS_AS(ExhaustiveOracle(huge, 20), SizeLimitError);
  REQUIRE_NOTHROW(ExhaustiveOracle(big, 8));
}

SCENARIO("Matchings enumeration") {
  // P4: {}, three single edges, {01, 23}.
  REQUIRE(all_matchings(path_graph(4)).size() == 5);
  REQUIRE(all_matchings(path_graph(4)).front().empty());
  // K4: 1 + 6 + 3.
  REQUIRE(all_matchings(complete_graph(4)).size() == 10);
}

SCENARIO("Agreement with a plain placement search") {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& h : testing::connected_graphs(n)) {
      for (const Graph& a :
           testing::up_to_isomorphism(testing::all_graphs(n))) {
        const TmpInstance inst(h, a);
        ExhaustiveOracle oracle(inst);
        const auto naive = testing::naive_min_swaps_by_steps(inst, 4);
        for (int t = 0; t <= 4; ++t) {
          const auto v = oracle.min_swaps_with_steps(t);
          CAPTURE(n, t, testing::canonical_form(h),
                  testing::canonical_form(a));
          REQUIRE(v.value_or(-1) == naive[t]);
        }
      }
    }
  }
  GIVEN("random five-node instances") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 12; ++k) {
      const TmpInstance inst(testing::random_connected_graph(5, 0.4, rng),
                             testing::random_connected_graph(5, 0.5, rng));
      ExhaustiveOracle oracle(inst);
      const auto naive = testing::naive_min_swaps_by_steps(inst, 4);
      for (int t = 0; t <= 4; ++t)
        REQUIRE(oracle.min_swaps_with_steps(t).value_or(-1) == naive[t]);
    }
  }
}

SCENARIO("More steps never cost more swaps; MS(t) = t exactly at MS") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const TmpInstance inst(testing::random_connected_graph(n, 0.35, rng),
                           testing::random_connected_graph(n, 0.6, rng));
    ExhaustiveOracle oracle(inst);
    const int mt = oracle.min_steps().value();
    const int ms = oracle.min_swaps().value();
    int prev = -1;
    for (int t = mt; t <= ms + 1; ++t) {
      const int v = oracle.min_swaps_with_steps(t).value();
      if (prev >= 0) REQUIRE(v <= prev);
      REQUIRE((v == t) == (t == ms));
      if (t < ms) REQUIRE(v > t);
      prev = v;
    }
    REQUIRE(oracle.min_swaps_with_steps(ms + 5) == ms);
  }
}

}  // namespace qroute
