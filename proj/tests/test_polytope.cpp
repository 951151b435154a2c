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
#include "qroute/polytope.hpp"
#include "support.hpp"

namespace qroute::polytope {

namespace {

/** Inclusion-maximal pairs (I, J) with I x J inside E, by subset search. */
std::set<Block> brute_bicliques(const BipartiteGraph& g) {
  std::vector<Block> all;
  for (std::uint32_t rm = 0; rm < (1u << g.left()); ++rm) {
    for (std::uint32_t cm = 0; cm < (1u << g.right()); ++cm) {
      bool ok = true;
      Block b;
      for (int i = 0; i < g.left(); ++i)
        if (rm >> i & 1u) b.rows.push_back(i);
      for (int j = 0; j < g.right(); ++j)
        if (cm >> j & 1u) b.cols.push_back(j);
      for (int i : b.rows)
        for (int j : b.cols) ok = ok && g.has_edge(i, j);
      if (ok) all.push_back(std::move(b));
    }
  }
  auto within = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::set<Block> out;
  for (const Block& a : all) {
    bool maximal = true;
    for (const Block& b : all) {
      if (a == b) continue;
      if (within(a.rows, b.rows) && within(a.cols, b.cols)) maximal = false;
    }
    if (maximal) out.insert(a);
  }
  return out;
}

const std::vector<std::pair<std::string, Graph>>& test_graphs() {
  static const std::vector<std::pair<std::string, Graph>> gs{
      {"P3", path_graph(3)},
      {"P4", path_graph(4)},
      {"C4", cycle_graph(4)},
      {"K13", star_graph(4)}};
  return gs;
}

std::vector<LinearInequality> without(std::vector<LinearInequality> d,
                                      const std::string& family) {
  d.erase(std::remove_if(d.begin(), d.end(),
                         [&](const auto& li) { return li.family == family; }),
          d.end());
  return d;
}

}  // namespace

SCENARIO("Bipartite double cover of a hardware graph") {
  const BipartiteGraph p3 = bipartite_of(path_graph(3));
  REQUIRE(p3.edge_count() == 4);
  REQUIRE(p3.has_edge(0, 1));
  REQUIRE(p3.has_edge(1, 0));
  REQUIRE(p3.has_edge(1, 2));
  REQUIRE(p3.has_edge(2, 1));
  REQUIRE_FALSE(p3.has_edge(0, 0));
  REQUIRE(bipartite_of(complete_graph(3)).edge_count() == 6);
  REQUIRE(p3.complement().edge_count() == 5);
}

SCENARIO("Maximal bicliques") {
  GIVEN("the cover of P3") {
    std::vector<Block> nonempty;
    for (const Block& b : maximal_bicliques(bipartite_of(path_graph(3))))
      if (!b.rows.empty() && !b.cols.empty()) nonempty.push_back(b);
    REQUIRE(nonempty == std::vector<Block>{{{0, 2}, {1}}, {{1}, {0, 2}}});
  }
  GIVEN("every graph on up to four nodes and some random bipartite graphs") {
    for (int n = 1; n <= 4; ++n) {
      for (const Graph& h : testing::all_graphs(n)) {
        const BipartiteGraph g = bipartite_of(h);
        const auto bic = maximal_bicliques(g);
        const auto anti = maximal_antibicliques(g);
        REQUIRE(std::set<Block>(bic.begin(), bic.end()) == brute_bicliques(g));
        REQUIRE(std::set<Block>(anti.begin(), anti.end()) ==
                brute_bicliques(g.complement()));
      }
    }
    std::mt19937_64 rng(12);
    for (int k = 0; k < 50; ++k) {
      const int l = 1 + static_cast<int>(rng() % 5);
      const int r = 1 + static_cast<int>(rng() % 5);
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < r; ++j)
          if (rng() % 2) e.emplace_back(i, j);
      const BipartiteGraph g(l, r, e);
      const auto bic = maximal_bicliques(g);
      REQUIRE(std::set<Block>(bic.begin(), bic.end()) == brute_bicliques(g));
    }
  }
}

SCENARIO("Degenerate descriptions") {
  const BipartiteGraph none(2, 2, {});
  const auto d0 = exact_description(none, Relation::Eq);
  REQUIRE(d0.size() == 1);
  REQUIRE(d0[0].family == "degenerate");
  REQUIRE(d0[0].sense == milp::Sense::Equal);
  REQUIRE(d0[0].rhs == 0.0);
  const BipartiteGraph all(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto d1 = exact_description(all, Relation::Eq);
  REQUIRE(d1.size() == 1);
  REQUIRE(d1[0].rhs == 1.0);
  REQUIRE(exact_description(all, Relation::Leq).empty());
}

SCENARIO("A single edge inside a 2x2 block") {
  // X = {a, b}, Y = {c, d}, E = {(a, c)}. The biclique {a} x {c} spans E
  // but neither side is full, so x(I) + y(J) = 1 + z is not valid here.
  const BipartiteGraph g(2, 2, {{0, 0}});
  const std::vector<double> bx{0, 1}, dy{0, 1};
  LinearInequality eq;
  eq.x = {1, 0};
  eq.y = {1, 0};
  eq.z = -1;
  eq.sense = milp::Sense::Equal;
  eq.rhs = 1;
  REQUIRE_FALSE(eq.satisfied_by(bx, dy, 0.0));
  auto lp = milp::make_builtin_backend();
  for (Relation rel : {Relation::Eq, Relation::Leq}) {
    const auto d = exact_description(g, rel);
    for (const auto& li : d) REQUIRE(li.satisfied_by(bx, dy, 0.0));
    REQUIRE(verify_integer_hull(g, rel, d, *lp).exact());
  }
}

SCENARIO("Exact descriptions are integral") {
  std::vector<std::unique_ptr<milp::SolverBackend>> lps;
  lps.push_back(milp::make_builtin_backend());
  for (const auto& name : milp::available_backends())
    if (name == "highs") lps.push_back(milp::make_backend("highs"));
  for (const auto& [name, h] : test_graphs()) {
    for (Relation rel : {Relation::Eq, Relation::Leq}) {
      const BipartiteGraph g = bipartite_of(h);
      const auto d = exact_description(g, rel);
      for (auto& lp : lps) {
        CAPTURE(name, rel == Relation::Eq, lp->name());
        const HullReport rep = verify_integer_hull(g, rel, d, *lp);
        INFO(rep.detail);
        REQUIRE(rep.exact());
        REQUIRE(rep.lp_solves >= 1000);
        REQUIRE(rep.vertices_checked > 0);
      }
    }
  }
  GIVEN("random bipartite graphs") {
    auto lp = milp::make_builtin_backend();
    std::mt19937_64 rng(21);
    HullCheckOptions opts;
    opts.random_objectives = 200;
    for (int k = 0; k < 25; ++k) {
      const int l = 2 + static_cast<int>(rng() % 3);
      const int r = 2 + static_cast<int>(rng() % 3);
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < r; ++j)
          if (rng() % 2) e.emplace_back(i, j);
      const BipartiteGraph g(l, r, e);
      for (Relation rel : {Relation::Eq, Relation::Leq}) {
        CAPTURE(k, l, r, e.size(), rel == Relation::Eq);
        const auto rep =
            verify_integer_hull(g, rel, exact_description(g, rel), *lp, opts);
        INFO(rep.detail);
        REQUIRE(rep.exact());
      }
    }
  }
}

SCENARIO("Dropping the antibiclique family") {
  // What is left bounds z from below only: its vertices stay 0/1, but z = 1
  // becomes possible on non-edges.
  auto lp = milp::make_builtin_backend();
  for (const auto& [name, h] : test_graphs()) {
    const BipartiteGraph g = bipartite_of(h);
    for (Relation rel : {Relation::Eq, Relation::Leq}) {
      const auto full = exact_description(g, rel);
      const auto weak = without(full, "antibiclique");
      if (weak.size() == full.size()) continue;
      CAPTURE(name, rel == Relation::Eq);
      const HullReport rep = verify_integer_hull(g, rel, weak, *lp);
      REQUIRE(rep.integral);
      REQUIRE_FALSE(rep.integer_points_match);
    }
  }
}

SCENARIO("Neighbourhood block rows") {
  GIVEN("P3 with nodes 0 - 1 - 2") {
    const auto rows = block_covering_constraints(path_graph(3), true, false);
    REQUIRE(rows.size() == 6);
    // Middle node: x_1 + y_0 + y_2 - z <= 1.
    const auto& p = rows[2];
    REQUIRE(p.family == "edge_p");
    REQUIRE(p.node == 1);
    REQUIRE(p.x == std::vector<double>{0, 1, 0});
    REQUIRE(p.y == std::vector<double>{1, 0, 1});
    REQUIRE(p.z == -1.0);
    // Leaf 0: both leaves share N = {1}: x_0 + x_2 + y_1 - z <= 1.
    REQUIRE(rows[0].x == std::vector<double>{1, 0, 1});
    REQUIRE(rows[0].y == std::vector<double>{0, 1, 0});
  }
  GIVEN("complete graphs") {
    const auto rows = block_covering_constraints(complete_graph(4), true, true);
    for (const auto& li : rows) {
      if (li.family == "edge_p") {
        for (int j = 0; j < 4; ++j) REQUIRE(li.x[j] == (j == li.node ? 1 : 0));
      }
    }
  }
  GIVEN("every graph on up to four nodes") {
    for (int n = 1; n <= 4; ++n) {
      for (const Graph& h : testing::all_graphs(n)) {
        const auto both = block_covering_constraints(h, true, true);
        const auto lower = block_covering_constraints(h, false, true);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            std::vector<double> x(n, 0.0), y(n, 0.0);
            x[i] = 1;
            y[j] = 1;
            const int e = h.has_edge(i, j) ? 1 : 0;
            for (int z = 0; z <= 1; ++z) {
              const auto ok = [&](const std::vector<LinearInequality>& d) {
                return std::all_of(d.begin(), d.end(), [&](const auto& li) {
                  return li.satisfied_by(x, y, z);
                });
              };
              CAPTURE(n, i, j, z, testing::canonical_form(h));
              REQUIRE(ok(both) == (z == e));
              REQUIRE(ok(lower) == (z <= e));
            }
          }
        }
      }
    }
  }
}

SCENARIO("Hull model layout") {
  const BipartiteGraph g = bipartite_of(path_graph(3));
  const auto d = exact_description(g, Relation::Eq);
  const milp::MilpModel m = hull_model(g, d);
  REQUIRE(m.num_variables() == 7);
  REQUIRE(m.num_rows() == 2 + static_cast<int>(d.size()));
  REQUIRE(m.variable(6).name == "z");
}

}  // namespace qroute::polytope
