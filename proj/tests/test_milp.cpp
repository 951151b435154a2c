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

#include <fstream>
#include <random>
#include <sstream>

#include "qroute/milp/backend.hpp"
#include "qroute/milp/lp_format.hpp"
#include "qroute/milp/simplex.hpp"
#include "qroute/models.hpp"

namespace qroute::milp {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/** Random pure-binary model: covering rows, packing rows, random costs. */
MilpModel random_binary_model(std::mt19937_64& rng, int vars, int rows) {
  MilpModel m("random");
  std::uniform_int_distribution<int> cost(-5, 9);
  std::uniform_int_distribution<int> coef(1, 4);
  for (int j = 0; j < vars; ++j)
    m.add_binary("b" + std::to_string(j), cost(rng));
  for (int r = 0; r < rows; ++r) {
    std::vector<Term> t;
    int total = 0;
    for (int j = 0; j < vars; ++j) {
      if (rng() % 3 == 0) {
        const int c = coef(rng);
        t.push_back({j, static_cast<double>(c)});
        total += c;
      }
    }
    if (t.empty()) continue;
    if (r % 2 == 0) {
      m.add_row("cov" + std::to_string(r), t, Sense::GreaterEqual,
                std::max(1, total / 3));
    } else {
      m.add_row("pack" + std::to_string(r), t, Sense::LessEqual,
                std::max(1, total / 2));
    }
  }
  return m;
}

std::optional<double> brute_force(const MilpModel& m) {
  const int n = m.num_variables();
  std::optional<double> best;
  std::vector<double> x(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int j = 0; j < n; ++j) x[j] = mask >> j & 1u;
    if (m.max_violation(x) > 1e-9) continue;
    const double v = m.objective_value(x);
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

SCENARIO("Model bookkeeping") {
  MilpModel m;
  const int x = m.add_binary("x", 1.0);
  const int y = m.add_variable("y", VarType::Integer, 0, 3, -1.0);
  REQUIRE_THROWS(m.add_binary("x"));
  const int r = m.add_row("r", {{x, 1.0}, {y, 2.0}, {x, 1.0}, {y, -2.0}},
                          Sense::LessEqual, 1.0);
  REQUIRE(m.rows()[r].terms.size() == 1);
  REQUIRE(m.rows()[r].terms[0].coef == 2.0);
  REQUIRE(m.find_variable("y") == y);
  REQUIRE_FALSE(m.find_variable("z"));
  REQUIRE(m.max_violation({1.0, 0.0}) == Catch::Approx(1.0));
  REQUIRE(m.max_integrality_violation({0.5, 1.0}) == Catch::Approx(0.5));
  REQUIRE(m.objective_value({1.0, 3.0}) == Catch::Approx(-2.0));
}

SCENARIO("Dual simplex on small LPs") {
  GIVEN("a two-variable LP with a unique vertex optimum") {
    MilpModel m;
    const int x = m.add_variable("x", VarType::Continuous, 0, 10, -1);
    const int y = m.add_variable("y", VarType::Continuous, 0, 10, -1);
    m.add_row("a", {{x, 1}, {y, 2}}, Sense::LessEqual, 4);
    m.add_row("b", {{x, 3}, {y, 1}}, Sense::LessEqual, 6);
    DualSimplex s(m);
    REQUIRE(s.solve() == DualSimplex::Status::Optimal);
    REQUIRE(s.objective() == Catch::Approx(-2.8));
    REQUIRE(s.primal()[0] == Catch::Approx(1.6));
    REQUIRE(s.primal()[1] == Catch::Approx(1.2));
    WHEN("a bound is tightened and the basis reused") {
      s.set_bounds(x, 0, 1);
      REQUIRE(s.solve() == DualSimplex::Status::Optimal);
      REQUIRE(s.objective() == Catch::Approx(-2.5));
    }
  }
  GIVEN("equality rows") {
    MilpModel m;
    const int x = m.add_variable("x", VarType::Continuous, 0, 5, 1);
    const int y = m.add_variable("y", VarType::Continuous, 0, 5, 2);
    m.add_row("e", {{x, 1}, {y, 1}}, Sense::Equal, 7);
    DualSimplex s(m);
    REQUIRE(s.solve() == DualSimplex::Status::Optimal);
    REQUIRE(s.objective() == Catch::Approx(9.0));
  }
  GIVEN("an infeasible system") {
    MilpModel m;
    const int x = m.add_variable("x", VarType::Continuous, 0, 1, 1);
    m.add_row("e", {{x, 1}}, Sense::GreaterEqual, 2);
    DualSimplex s(m);
    REQUIRE(s.solve() == DualSimplex::Status::Infeasible);
  }
  GIVEN("a free column") {
    MilpModel m;
    m.add_variable("x", VarType::Continuous, -kInf, kInf, 1);
    REQUIRE_THROWS(DualSimplex(m));
  }
}

SCENARIO("Branch and bound matches enumeration") {
  auto bb = make_builtin_backend();
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    const MilpModel m = random_binary_model(rng, 4 + k % 9, 3 + k % 5);
    const auto want = brute_force(m);
    const SolveResult r = bb->solve(m, {});
    CAPTURE(k);
    if (!want) {
      REQUIRE(r.status == SolveStatus::Infeasible);
    } else {
      REQUIRE(r.status == SolveStatus::Optimal);
      REQUIRE(r.objective == Catch::Approx(*want));
      REQUIRE(m.max_violation(r.values) < 1e-6);
      REQUIRE(m.max_integrality_violation(r.values) < 1e-6);
    }
  }
}

SCENARIO("Backends agree") {
  const auto names = available_backends();
  if (std::find(names.begin(), names.end(), "highs") == names.end()) {
    SUCCEED("only one backend built");
    return;
  }
  auto bb = make_backend("builtin");
  auto hs = make_backend("highs");
  std::mt19937_64 rng(77);
  for (int k = 0; k < 40; ++k) {
    const MilpModel m = random_binary_model(rng, 6 + k % 10, 4 + k % 6);
    const SolveResult a = bb->solve(m, {});
    const SolveResult b = hs->solve(m, {});
    CAPTURE(k);
    REQUIRE(a.status == b.status);
    if (a.optimal()) REQUIRE(a.objective == Catch::Approx(b.objective));
    SolveOptions relax;
    relax.relax_integrality = true;
    const SolveResult la = bb->solve(m, relax);
    const SolveResult lb = hs->solve(m, relax);
    REQUIRE(la.status == lb.status);
    if (la.optimal())
      REQUIRE(la.objective == Catch::Approx(lb.objective).margin(1e-7));
  }
}

SCENARIO("Limits end the search early") {
  std::mt19937_64 rng(5);
  const MilpModel m = random_binary_model(rng, 30, 20);
  SolveOptions opts;
  opts.node_limit = 1;
  const SolveResult r = make_builtin_backend()->solve(m, opts);
  REQUIRE((r.status == SolveStatus::TimeLimit ||
           r.status == SolveStatus::Optimal ||
           r.status == SolveStatus::Infeasible));
  REQUIRE(make_backend("default"));
  REQUIRE_THROWS(make_backend("nope"));
}

SCENARIO("LP files") {
  const TmpInstance inst(path_graph(3), complete_graph(3));
  const TmpModel tm = build_base(inst, 2);
  const std::string text = export_lp(tm.model());
  GIVEN("the golden file") {
    REQUIRE(text == read_file(QROUTE_TEST_DATA "/golden/base_p3_t2.lp"));
  }
  GIVEN("a round trip") {
    // Import numbers columns by first appearance, so only the second trip
    // is byte-stable.
    const MilpModel back = import_lp(text);
    const std::string again = export_lp(back);
    REQUIRE(export_lp(import_lp(again)) == again);
    REQUIRE(back.num_variables() == tm.model().num_variables());
    REQUIRE(back.num_rows() == tm.model().num_rows());
    auto bb = make_builtin_backend();
    const SolveResult a = bb->solve(tm.model(), {});
    const SolveResult b = bb->solve(back, {});
    REQUIRE(a.optimal());
    REQUIRE(b.optimal());
    REQUIRE(a.objective == Catch::Approx(b.objective));
  }
  GIVEN("bounds, generals and negative coefficients") {
    MilpModel m("mixed");
    const int a = m.add_variable("a", VarType::Integer, -2, 7, 1.5);
    const int b = m.add_variable("b", VarType::Continuous, 0, kInf, -0.25);
    const int c = m.add_binary("c");
    m.add_row("r1", {{a, -1}, {b, 3.125}, {c, 1}}, Sense::GreaterEqual, -4);
    m.add_row("r2", {{a, 1}, {c, -1}}, Sense::Equal, 0);
    const std::string t = export_lp(m);
    REQUIRE(export_lp(import_lp(t)) == t);
    REQUIRE_THROWS(import_lp("Minimize\n obj: x\nSubject To\n c: x <="));
  }
}

}  // namespace qroute::milp
