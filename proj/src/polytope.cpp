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

#include "qroute/polytope.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace qroute::polytope {

using milp::Sense;

BipartiteGraph::BipartiteGraph(int left, int right,
                               const std::vector<std::pair<int, int>>& edges)
    : left_(left), right_(right),
      adj_(left, std::vector<char>(right, 0)) {
  for (auto [i, j] : edges) {
    if (i < 0 || i >= left || j < 0 || j >= right) {
      throw std::out_of_range("bipartite edge out of range");
    }
    if (!adj_[i][j]) {
      adj_[i][j] = 1;
      ++edges_;
    }
  }
}

BipartiteGraph BipartiteGraph::complement() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < left_; ++i)
    for (int j = 0; j < right_; ++j)
      if (!adj_[i][j]) e.emplace_back(i, j);
  return BipartiteGraph(left_, right_, e);
}

BipartiteGraph bipartite_of(const Graph& h) {
  std::vector<std::pair<int, int>> e;
  for (const Edge& ed : h.edges()) {
    e.emplace_back(ed.u, ed.v);
    e.emplace_back(ed.v, ed.u);
  }
  return BipartiteGraph(h.node_count(), h.node_count(), e);
}

namespace {

using Mask = std::uint64_t;

std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int b = 0; m; ++b, m >>= 1)
    if (m & 1) out.push_back(b);
  return out;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

std::vector<Block> maximal_bicliques(const BipartiteGraph& g) {
  if (g.left() > 64 || g.right() > 64) {
    throw std::invalid_argument("biclique enumeration limited to 64 per side");
  }
  std::vector<Mask> nbr(g.left(), 0);
  for (int i = 0; i < g.left(); ++i)
    for (int j = 0; j < g.right(); ++j)
      if (g.has_edge(i, j)) nbr[i] |= Mask{1} << j;

  // Closed column sets are exactly the intersections of neighbourhoods
  // (the empty intersection being all of Y).
  std::set<Mask> intents{full_mask(g.right())};
  for (int i = 0; i < g.left(); ++i) {
    std::vector<Mask> fresh;
    for (Mask j : intents) fresh.push_back(j & nbr[i]);
    intents.insert(fresh.begin(), fresh.end());
  }
  std::vector<Block> out;
  for (Mask cols : intents) {
    Mask rows = 0;
    for (int i = 0; i < g.left(); ++i)
      if ((nbr[i] & cols) == cols) rows |= Mask{1} << i;
    out.push_back({members(rows), members(cols)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> maximal_antibicliques(const BipartiteGraph& g) {
  return maximal_bicliques(g.complement());
}

bool LinearInequality::satisfied_by(const std::vector<double>& xv,
                                    const std::vector<double>& yv, double zv,
                                    double tol) const {
  double lhs = z * zv;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += x[i] * xv[i];
  for (std::size_t j = 0; j < y.size(); ++j) lhs += y[j] * yv[j];
  switch (sense) {
    case Sense::LessEqual:
      return lhs <= rhs + tol;
    case Sense::GreaterEqual:
      return lhs >= rhs - tol;
    case Sense::Equal:
      return std::abs(lhs - rhs) <= tol;
  }
  return false;
}

namespace {

LinearInequality block_row(const BipartiteGraph& g, const Block& b,
                           std::string family, double z, Sense sense,
                           double rhs) {
  LinearInequality li;
  li.family = std::move(family);
  li.x.assign(g.left(), 0.0);
  li.y.assign(g.right(), 0.0);
  for (int i : b.rows) li.x[i] = 1.0;
  for (int j : b.cols) li.y[j] = 1.0;
  li.z = z;
  li.sense = sense;
  li.rhs = rhs;
  return li;
}

}  // namespace

std::vector<LinearInequality> exact_description(const BipartiteGraph& g,
                                                Relation rel) {
  std::vector<LinearInequality> out;
  auto z_only = [&](Sense s, double rhs) {
    LinearInequality li;
    li.family = "degenerate";
    li.x.assign(g.left(), 0.0);
    li.y.assign(g.right(), 0.0);
    li.z = 1.0;
    li.sense = s;
    li.rhs = rhs;
    out.push_back(std::move(li));
  };
  if (g.edge_count() == 0) {
    z_only(Sense::Equal, 0.0);
    return out;
  }
  if (g.is_complete()) {
    if (rel == Relation::Eq) z_only(Sense::Equal, 1.0);
    return out;
  }

  for (const Block& b : maximal_bicliques(g)) {
    if (b.rows.empty() || b.cols.empty()) continue;
    const bool spans_edges =
        b.rows.size() * b.cols.size() == g.edge_count();
    const bool full_side = static_cast<int>(b.rows.size()) == g.left() ||
                           static_cast<int>(b.cols.size()) == g.right();
    if (spans_edges && full_side) {
      // z equals the indicator of the partial side.
      if (rel == Relation::Eq) {
        out.push_back(block_row(g, b, "biclique_eq", -1.0, Sense::Equal, 1.0));
      } else {
        out.push_back(
            block_row(g, b, "biclique_eq", -1.0, Sense::GreaterEqual, 1.0));
      }
    } else if (rel == Relation::Eq) {
      out.push_back(block_row(g, b, "biclique", -1.0, Sense::LessEqual, 1.0));
    }
  }
  for (const Block& b : maximal_antibicliques(g)) {
    if (b.rows.empty() || b.cols.empty()) continue;
    out.push_back(block_row(g, b, "antibiclique", 1.0, Sense::LessEqual, 2.0));
  }
  return out;
}

std::vector<LinearInequality> block_covering_constraints(const Graph& h,
                                                         bool edge_side,
                                                         bool non_edge_side) {
  const int n = h.node_count();
  auto subset = [&](int a, int b) {  // N(a) subset of N(b)
    const auto& na = h.neighbors(a);
    const auto& nb = h.neighbors(b);
    return std::includes(nb.begin(), nb.end(), na.begin(), na.end());
  };
  auto make = [&](const char* family, int i) {
    LinearInequality li;
    li.family = family;
    li.node = i;
    li.x.assign(n, 0.0);
    li.y.assign(n, 0.0);
    li.rhs = 1.0;
    return li;
  };
  std::vector<LinearInequality> out;
  for (int i = 0; i < n; ++i) {
    if (edge_side) {
      // I x N(i) with I = {j : N(i) in N(j)} is a biclique of G.
      LinearInequality p = make("edge_p", i), q = make("edge_q", i);
      for (int j = 0; j < n; ++j) {
        if (subset(i, j)) {
          p.x[j] = 1.0;
          q.y[j] = 1.0;
        }
      }
      for (int j : h.neighbors(i)) {
        p.y[j] += 1.0;
        q.x[j] += 1.0;
      }
      p.z = q.z = -1.0;
      out.push_back(std::move(p));
      out.push_back(std::move(q));
    }
    if (non_edge_side) {
      // I x (V' \ N(i)) with I = {j : N(j) in N(i)} is an antibiclique.
      LinearInequality p = make("nonedge_p", i), q = make("nonedge_q", i);
      for (int j = 0; j < n; ++j) {
        if (subset(j, i)) {
          p.x[j] = 1.0;
          q.y[j] = 1.0;
        }
      }
      for (int j : h.neighbors(i)) {
        p.y[j] -= 1.0;
        q.x[j] -= 1.0;
      }
      p.z = q.z = 1.0;
      out.push_back(std::move(p));
      out.push_back(std::move(q));
    }
  }
  return out;
}

milp::MilpModel hull_model(const BipartiteGraph& g,
                           const std::vector<LinearInequality>& description) {
  milp::MilpModel m("hull");
  std::vector<milp::Term> xs, ys;
  for (int i = 0; i < g.left(); ++i) {
    xs.push_back({m.add_variable("x_" + std::to_string(i),
                                 milp::VarType::Continuous, 0.0, 1.0),
                  1.0});
  }
  for (int j = 0; j < g.right(); ++j) {
    ys.push_back({m.add_variable("y_" + std::to_string(j),
                                 milp::VarType::Continuous, 0.0, 1.0),
                  1.0});
  }
  const int z = m.add_variable("z", milp::VarType::Continuous, 0.0, 1.0);
  m.add_row("assign_x", xs, Sense::Equal, 1.0);
  m.add_row("assign_y", ys, Sense::Equal, 1.0);
  int k = 0;
  for (const LinearInequality& li : description) {
    std::vector<milp::Term> terms;
    for (int i = 0; i < g.left(); ++i)
      if (li.x[i] != 0.0) terms.push_back({xs[i].var, li.x[i]});
    for (int j = 0; j < g.right(); ++j)
      if (li.y[j] != 0.0) terms.push_back({ys[j].var, li.y[j]});
    if (li.z != 0.0) terms.push_back({z, li.z});
    m.add_row(li.family + "_" + std::to_string(k++), std::move(terms),
              li.sense, li.rhs);
  }
  return m;
}

namespace {

bool in_definition(const BipartiteGraph& g, Relation rel,
                   const std::vector<double>& v) {
  const int L = g.left(), R = g.right();
  int xi = -1, yj = -1, xs = 0, ys = 0;
  for (int i = 0; i < L; ++i)
    if (v[i] > 0.5) {
      ++xs;
      xi = i;
    }
  for (int j = 0; j < R; ++j)
    if (v[L + j] > 0.5) {
      ++ys;
      yj = j;
    }
  if (xs != 1 || ys != 1) return false;
  const int product = g.has_edge(xi, yj) ? 1 : 0;
  const int z = v[L + R] > 0.5 ? 1 : 0;
  return rel == Relation::Eq ? z == product : z <= product;
}

bool in_description(const BipartiteGraph& g,
                    const std::vector<LinearInequality>& d,
                    const std::vector<double>& v) {
  const int L = g.left(), R = g.right();
  double sx = 0, sy = 0;
  for (int i = 0; i < L; ++i) sx += v[i];
  for (int j = 0; j < R; ++j) sy += v[L + j];
  if (std::abs(sx - 1) > 1e-9 || std::abs(sy - 1) > 1e-9) return false;
  std::vector<double> xv(v.begin(), v.begin() + L);
  std::vector<double> yv(v.begin() + L, v.begin() + L + R);
  return std::all_of(d.begin(), d.end(), [&](const LinearInequality& li) {
    return li.satisfied_by(xv, yv, v[L + R]);
  });
}

bool integral_vector(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double a) {
    return std::abs(a - std::round(a)) <= 1e-7;
  });
}

}  // namespace

HullReport verify_integer_hull(const BipartiteGraph& g, Relation rel,
                               const std::vector<LinearInequality>& description,
                               milp::SolverBackend& lp_backend,
                               const HullCheckOptions& options) {
  HullReport rep;
  const int L = g.left(), R = g.right();
  const int d = L + R + 1;

  // 0/1 points.
  auto check_point = [&](const std::vector<double>& v) {
    ++rep.integer_points_checked;
    if (in_definition(g, rel, v) != in_description(g, description, v)) {
      rep.integer_points_match = false;
      if (rep.detail.empty()) rep.detail = "0/1 point classified differently";
    }
  };
  if (d <= 20) {
    for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
      std::vector<double> v(d);
      for (int k = 0; k < d; ++k) v[k] = (bits >> k) & 1u;
      check_point(v);
    }
  } else {
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < R; ++j)
        for (int z = 0; z <= 1; ++z) {
          std::vector<double> v(d, 0.0);
          v[i] = 1;
          v[L + j] = 1;
          v[L + R] = z;
          check_point(v);
        }
  }

  // LP optima for random objectives.
  milp::MilpModel model = hull_model(g, description);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int k = 0; k < options.random_objectives; ++k) {
    for (int j = 0; j < d; ++j) model.set_cost(j, unif(rng));
    milp::SolveOptions so;
    so.relax_integrality = true;
    auto res = lp_backend.solve(model, so);
    ++rep.lp_solves;
    if (!res.optimal()) {
      rep.integral = false;
      rep.detail = std::string("LP not solved: ") + milp::to_string(res.status);
      return rep;
    }
    if (!integral_vector(res.values)) {
      rep.integral = false;
      rep.fractional_witness = res.values;
      rep.detail = "fractional LP optimum";
      return rep;
    }
  }

  // All vertices for small dimension: every choice of d-2 tight
  // inequalities together with the two assignment rows.
  if (d <= options.enumerate_vertices_up_to) {
    std::vector<Eigen::RowVectorXd> rows;
    std::vector<double> rhs;
    auto add = [&](const Eigen::RowVectorXd& r, double b) {
      rows.push_back(r);
      rhs.push_back(b);
    };
    for (const LinearInequality& li : description) {
      Eigen::RowVectorXd r(d);
      for (int i = 0; i < L; ++i) r(i) = li.x[i];
      for (int j = 0; j < R; ++j) r(L + j) = li.y[j];
      r(L + R) = li.z;
      add(r, li.rhs);
    }
    for (int k = 0; k < d; ++k) {
      Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(d);
      r(k) = 1.0;
      add(r, 0.0);
      add(r, 1.0);
    }
    Eigen::MatrixXd base = Eigen::MatrixXd::Zero(2, d);
    base.block(0, 0, 1, L).setOnes();
    base.block(1, L, 1, R).setOnes();

    const int need = d - 2;
    const int m = static_cast<int>(rows.size());
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int start) -> bool {
      if (static_cast<int>(pick.size()) == need) {
        Eigen::MatrixXd a(d, d);
        Eigen::VectorXd b(d);
        a.topRows(2) = base;
        b(0) = b(1) = 1.0;
        for (int k = 0; k < need; ++k) {
          a.row(2 + k) = rows[pick[k]];
          b(2 + k) = rhs[pick[k]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        if (lu.rank() < d) return true;
        Eigen::VectorXd v = lu.solve(b);
        std::vector<double> vv(v.data(), v.data() + d);
        for (double a_k : vv)
          if (a_k < -1e-9 || a_k > 1 + 1e-9) return true;
        if (!in_description(g, description, vv)) return true;
        ++rep.vertices_checked;
        if (!integral_vector(vv)) {
          rep.integral = false;
          rep.fractional_witness = vv;
          rep.detail = "fractional vertex";
          return false;
        }
        return true;
      }
      for (int k = start; k <= m - (need - static_cast<int>(pick.size()));
           ++k) {
        pick.push_back(k);
        bool go = rec(k + 1);
        pick.pop_back();
        if (!go) return false;
      }
      return true;
    };
    rec(0);
  }
  return rep;
}

}  // namespace qroute::polytope
