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
#include "qroute/models.hpp"
#include "qroute/oracle.hpp"
#include "support.hpp"

namespace qroute {

namespace {

constexpr ModelVariant kVariants[] = {ModelVariant::YEQ, ModelVariant::YIEQ,
                                      ModelVariant::ZEQ, ModelVariant::ZIEQ};

/** Column values describing `sol` (padded with empty steps). */
std::vector<double> encode(const TmpModel& tm, const SwapSolution& sol) {
  const TmpInstance& inst = tm.instance();
  const Graph& h = inst.hardware;
  const int n = inst.n();
  const int T = tm.bijections();
  SwapSolution padded = sol;
  while (padded.steps() < T - 1) padded.matchings.emplace_back();
  const auto f = placement_trajectory(h, padded);
  std::vector<double> v(tm.model().num_variables(), 0.0);
  for (int t = 1; t <= T; ++t)
    for (int p = 0; p < n; ++p) v[tm.w(t, p, f[t - 1].node_of(p))] = 1.0;
  for (int t = 1; t < T; ++t)
    for (int p = 0; p < n; ++p)
      v[tm.x(t, p, f[t - 1].node_of(p), f[t].node_of(p))] = 1.0;
  const auto& conns = inst.connections();
  for (int t = 1; t <= T; ++t) {
    for (std::size_t c = 0; c < conns.size(); ++c) {
      const int i = f[t - 1].node_of(conns[c].u);
      const int j = f[t - 1].node_of(conns[c].v);
      if (!h.has_edge(i, j)) continue;
      // ZOPT only credits placements reached by an active step.
      if (tm.s(1) >= 0 && t > 1 && padded.matchings[t - 2].empty()) continue;
      const int ci = static_cast<int>(c);
      if (tm.z(t, ci) >= 0) v[tm.z(t, ci)] = 1.0;
      if (tm.y(t, ci, i, j) >= 0) v[tm.y(t, ci, i, j)] = 1.0;
    }
  }
  for (int t = 1; t < T; ++t)
    if (tm.s(t) >= 0) v[tm.s(t)] = padded.matchings[t - 1].empty() ? 0 : 1;
  return v;
}

int solve_objective(const TmpModel& tm, milp::SolverBackend& b) {
  const milp::SolveResult r = b.solve(tm.model(), {});
  if (r.status == milp::SolveStatus::Infeasible) return -1;
  REQUIRE(r.optimal());
  const SwapSolution sol = decode(tm, r.values);
  REQUIRE(validate_swap_solution(tm.instance(), sol).valid);
  const auto obj = milp::integral_objective(r);
  REQUIRE(obj);
  return *obj;
}

}  // namespace

SCENARIO("Model sizes follow the time-expanded network") {
  const TmpInstance inst(path_graph(4), complete_graph(4));
  const TmpModel tm = build_base(inst, 3);
  const auto& vars = tm.model().variables();
  const auto count = [&](char c) {
    return std::count_if(vars.begin(), vars.end(),
                         [&](const auto& v) { return v.name[0] == c; });
  };
  REQUIRE(count('w') == 48);
  REQUIRE(count('x') == 80);
  REQUIRE(tm.model().num_rows() == 94);
  REQUIRE(tm.closed_arcs().size() == 10);
  GIVEN("the gate variants") {
    // 6 connections, 3 placements, 6 directed arcs.
    REQUIRE(build_model(inst, 3, ModelVariant::YEQ).model().num_variables() ==
            128 + 3 * 6 * 6);
    REQUIRE(build_model(inst, 3, ModelVariant::ZIEQ).model().num_variables() ==
            128 + 3 * 6);
    REQUIRE(build_zopt(inst, 3).model().num_variables() == 128 + 18 + 2);
  }
}

SCENARIO("Valid solutions are feasible points of every model") {
  const TmpInstance inst(path_graph(6), star_graph(6));
  const SwapSolution sol{TokenPlacement({1, 0, 2, 3, 4, 5}),
                         {{{1, 2}}, {{2, 3}}, {{3, 4}}}};
  for (ModelVariant v : kVariants) {
    for (int T = 4; T <= 5; ++T) {
      const TmpModel tm = build_model(inst, T, v);
      const auto x = encode(tm, sol);
      CAPTURE(to_string(v), T);
      REQUIRE(tm.model().max_violation(x) < 1e-9);
      REQUIRE(tm.model().objective_value(x) == Catch::Approx(3.0));
      const SwapSolution back = decode(tm, x);
      REQUIRE(drop_empty_steps(back).matchings == sol.matchings);
      REQUIRE(back.initial == sol.initial);
    }
  }
  const TmpModel z = build_zopt(inst, 5);
  const auto x = encode(z, sol);
  REQUIRE(z.model().max_violation(x) < 1e-9);
  REQUIRE(z.model().objective_value(x) == Catch::Approx(3.0));
}

SCENARIO("Decoding rejects values that are not a swap sequence") {
  const TmpInstance inst(path_graph(3), complete_graph(3));
  const TmpModel tm = build_base(inst, 2);
  std::vector<double> v(tm.model().num_variables(), 0.0);
  REQUIRE_THROWS_AS(decode(tm, v), DecodeError);
  const SwapSolution ok{TokenPlacement::identity(3), {{{0, 1}}}};
  v = encode(tm, ok);
  REQUIRE(decode(tm, v).matchings == ok.matchings);
  // Token 0 claims to move but token 1 stays put.
  v[tm.x(1, 1, 1, 0)] = 0.0;
  v[tm.x(1, 1, 1, 1)] = 1.0;
  REQUIRE_THROWS_AS(decode(tm, v), DecodeError);
  REQUIRE_THROWS_AS(decode(tm, std::vector<double>(3, 0.0)), DecodeError);
}

SCENARIO("Star on a path, solved by MILP") {
  auto backend = milp::make_backend("default");
  const TmpInstance inst(path_graph(6), star_graph(6));
  REQUIRE(solve_objective(build_model(inst, 3, ModelVariant::ZIEQ),
                          *backend) == 4);
  REQUIRE(solve_objective(build_model(inst, 4, ModelVariant::ZIEQ),
                          *backend) == 3);
  REQUIRE(solve_objective(build_model(inst, 2, ModelVariant::ZIEQ),
                          *backend) == -1);
  GIVEN("the one-swap-per-step model with three steps") {
    const TmpModel tm = build_zopt(inst, 4);
    const milp::SolveResult r = backend->solve(tm.model(), {});
    REQUIRE(r.optimal());
    REQUIRE(milp::integral_objective(r) == 3);
    for (int t = 1; t + 1 < tm.bijections(); ++t)
      REQUIRE(r.values[tm.s(t + 1)] <= r.values[tm.s(t)] + 1e-9);
    const SwapSolution sol = decode(tm, r.values);
    REQUIRE(validate_swap_solution(inst, sol).valid);
    for (const Matching& m : sol.matchings) REQUIRE(m.size() <= 1);
  }
}

SCENARIO("All variants agree with exhaustive search on small instances") {
  auto backend = milp::make_backend("default");
  auto builtin = milp::make_backend("builtin");
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& h :
         testing::up_to_isomorphism(testing::connected_graphs(n))) {
      for (const Graph& a :
           testing::up_to_isomorphism(testing::connected_graphs(n))) {
        const TmpInstance inst(h, a);
        ExhaustiveOracle oracle(inst);
        const int mt = oracle.min_steps().value();
        for (int t = std::max(0, mt - 1); t <= mt + 1; ++t) {
          const int want = oracle.min_swaps_with_steps(t).value_or(-1);
          for (ModelVariant v : kVariants) {
            CAPTURE(n, t, to_string(v), testing::canonical_form(h),
                    testing::canonical_form(a));
            const TmpModel tm = build_model(inst, t + 1, v);
            REQUIRE(solve_objective(tm, *backend) == want);
            if (n <= 3) REQUIRE(solve_objective(tm, *builtin) == want);
          }
        }
      }
    }
  }
}

SCENARIO("Automorphism orbits") {
  REQUIRE(orbit_representatives(path_graph(4)) == std::vector<int>{0, 1});
  REQUIRE(orbit_representatives(path_graph(5)) == std::vector<int>{0, 1, 2});
  REQUIRE(orbit_representatives(cycle_graph(6)) == std::vector<int>{0});
  REQUIRE(orbit_representatives(star_graph(5)) == std::vector<int>{0, 1});
  REQUIRE(orbit_representatives(grid_graph(3, 3)) ==
          std::vector<int>{0, 1, 4});
  REQUIRE(orbit_representatives(complete_graph(4)) == std::vector<int>{0});
  // Two triangles joined by an edge.
  const Graph twin(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4},
                                        {4, 5}, {3, 5}, {2, 3}});
  REQUIRE(orbit_representatives(twin) == std::vector<int>{0, 2});
}

SCENARIO("Symmetry reductions keep the optimum") {
  auto backend = milp::make_backend("default");
  REQUIRE(middle_bijection(1) == 1);
  REQUIRE(middle_bijection(2) == 1);
  REQUIRE(middle_bijection(5) == 2);
  for (int n = 3; n <= 4; ++n) {
    for (const Graph& h :
         testing::up_to_isomorphism(testing::connected_graphs(n))) {
      for (const Graph& a :
           testing::up_to_isomorphism(testing::connected_graphs(n))) {
        const TmpInstance inst(h, a);
        ExhaustiveOracle oracle(inst);
        const int mt = oracle.min_steps().value();
        for (int t = mt; t <= mt + 1; ++t) {
          TmpModel tm = build_model(inst, t + 1, ModelVariant::ZIEQ);
          add_hardware_symmetry(tm);
          CAPTURE(n, t, testing::canonical_form(h),
                  testing::canonical_form(a));
          REQUIRE(solve_objective(tm, *backend) ==
                  oracle.min_swaps_with_steps(t).value());
          if (a.is_complete()) {
            TmpModel fx = build_model(inst, t + 1, ModelVariant::ZIEQ);
            add_complete_A_fixing(fx, TokenPlacement::identity(n));
            REQUIRE(solve_objective(fx, *backend) ==
                    oracle.min_swaps_with_steps(t).value());
          }
        }
      }
    }
  }
  GIVEN("fixing with an incomplete algorithm graph") {
    TmpModel tm = build_model(TmpInstance(path_graph(4), star_graph(4)), 3,
                              ModelVariant::ZIEQ);
    REQUIRE_THROWS_AS(add_complete_A_fixing(tm, TokenPlacement::identity(4)),
                      InputError);
  }
}

SCENARIO("Variant names") {
  for (ModelVariant v : kVariants)
    REQUIRE(model_variant_from_string(to_string(v)) == v);
  REQUIRE(model_variant_from_string("ZIEQ") == ModelVariant::ZIEQ);
  REQUIRE_THROWS_AS(model_variant_from_string("foo"), InputError);
}

}  // namespace qroute
