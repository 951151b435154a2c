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

#include <chrono>
#include <cmath>
#include <optional>

#include "qroute/milp/backend.hpp"
#include "qroute/milp/simplex.hpp"

namespace qroute::milp {

namespace {

constexpr double kIntTol = 1e-6;
constexpr double kBoundTol = 1e-9;

/** Activity-based bound tightening on integer columns. */
bool propagate(const MilpModel& model, std::vector<double>& lb,
               std::vector<double>& ub) {
  const auto& vars = model.variables();
  for (int pass = 0; pass < 20; ++pass) {
    bool changed = false;
    for (const Row& r : model.rows()) {
      double minact = 0.0, maxact = 0.0;
      for (const Term& t : r.terms) {
        if (t.coef > 0) {
          minact += t.coef * lb[t.var];
          maxact += t.coef * ub[t.var];
        } else {
          minact += t.coef * ub[t.var];
          maxact += t.coef * lb[t.var];
        }
      }
      const bool has_upper = r.sense != Sense::GreaterEqual;
      const bool has_lower = r.sense != Sense::LessEqual;
      const double tol = 1e-7 * (1.0 + std::abs(r.rhs));
      if (has_upper && minact > r.rhs + tol) return false;
      if (has_lower && maxact < r.rhs - tol) return false;
      for (const Term& t : r.terms) {
        const int j = t.var;
        if (!vars[j].is_integer() || lb[j] == ub[j]) continue;
        const double a = t.coef;
        const double own_min = a > 0 ? a * lb[j] : a * ub[j];
        const double own_max = a > 0 ? a * ub[j] : a * lb[j];
        double new_lb = lb[j], new_ub = ub[j];
        if (has_upper) {
          double slack = r.rhs - (minact - own_min);
          if (a > 0) new_ub = std::min(new_ub, slack / a);
          else new_lb = std::max(new_lb, slack / a);
        }
        if (has_lower) {
          double need = r.rhs - (maxact - own_max);
          if (a > 0) new_lb = std::max(new_lb, need / a);
          else new_ub = std::min(new_ub, need / a);
        }
        new_ub = std::floor(new_ub + kIntTol);
        new_lb = std::ceil(new_lb - kIntTol);
        if (new_lb > new_ub) return false;
        if (new_lb > lb[j] || new_ub < ub[j]) {
          // Keep row activities consistent for the rest of this row.
          double old_min = own_min, old_max = own_max;
          lb[j] = std::max(lb[j], new_lb);
          ub[j] = std::min(ub[j], new_ub);
          minact += (a > 0 ? a * lb[j] : a * ub[j]) - old_min;
          maxact += (a > 0 ? a * ub[j] : a * lb[j]) - old_max;
          changed = true;
        }
      }
    }
    if (!changed) return true;
  }
  return true;
}

struct Node {
  std::vector<double> lb, ub;
  std::optional<DualSimplex::Basis> basis;
  double parent_bound = -kInf;
};

class BuiltinBackend : public SolverBackend {
 public:
  std::string name() const override { return "builtin"; }

  SolveResult solve(const MilpModel& model,
                    const SolveOptions& options) override {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(clock::now() - start).count();
    };
    SolveResult res;
    std::optional<DualSimplex> lp_holder;
    try {
      lp_holder.emplace(model);
    } catch (const std::exception& e) {
      res.status = SolveStatus::Error;
      res.message = e.what();
      return res;
    }
    DualSimplex& lp = *lp_holder;
    const int n = model.num_variables();

    if (options.relax_integrality) {
      auto st = lp.solve();
      res.seconds = elapsed();
      if (st == DualSimplex::Status::Optimal) {
        res.status = SolveStatus::Optimal;
        res.has_solution = true;
        res.values = lp.primal();
        res.objective = res.bound = lp.objective();
      } else if (st == DualSimplex::Status::Infeasible) {
        res.status = SolveStatus::Infeasible;
      } else {
        res.status = SolveStatus::Error;
        res.message = "simplex failed";
      }
      return res;
    }

    const bool integral = model.integral_objective();
    double incumbent = kInf;
    std::vector<double> best;
    bool unresolved = false;

    std::vector<Node> stack;
    {
      Node root;
      for (const auto& v : model.variables()) {
        root.lb.push_back(v.lower);
        root.ub.push_back(v.upper);
      }
      stack.push_back(std::move(root));
    }
    std::vector<double> cur_lb(n), cur_ub(n);
    for (int j = 0; j < n; ++j) {
      cur_lb[j] = lp.lower(j);
      cur_ub[j] = lp.upper(j);
    }
    const DualSimplex::Basis slack_basis = lp.basis();

    auto prunable = [&](double bound) {
      if (incumbent == kInf) return false;
      if (integral) return std::ceil(bound - kIntTol) >= incumbent - 0.5;
      return bound >= incumbent - kBoundTol * (1.0 + std::abs(incumbent));
    };

    while (!stack.empty()) {
      if (elapsed() > options.time_limit ||
          (options.node_limit >= 0 && res.nodes >= options.node_limit)) {
        res.status = SolveStatus::TimeLimit;
        res.seconds = elapsed();
        res.has_solution = incumbent < kInf;
        if (res.has_solution) {
          res.objective = incumbent;
          res.values = best;
        }
        return res;
      }
      Node node = std::move(stack.back());
      stack.pop_back();
      if (prunable(node.parent_bound)) continue;
      ++res.nodes;
      if (!propagate(model, node.lb, node.ub)) continue;

      for (int j = 0; j < n; ++j) {
        if (node.lb[j] != cur_lb[j] || node.ub[j] != cur_ub[j]) {
          lp.set_bounds(j, node.lb[j], node.ub[j]);
          cur_lb[j] = node.lb[j];
          cur_ub[j] = node.ub[j];
        }
      }
      if (node.basis) lp.restore(*node.basis);
      auto st = lp.solve();
      if (st == DualSimplex::Status::Error ||
          st == DualSimplex::Status::IterationLimit) {
        lp.restore(slack_basis);
        st = lp.solve();
      }
      if (st == DualSimplex::Status::Infeasible) continue;
      if (st != DualSimplex::Status::Optimal) {
        unresolved = true;
        continue;
      }
      const double obj = lp.objective();
      if (prunable(obj)) continue;

      std::vector<double> x = lp.primal();
      int branch = -1;
      double best_frac = kIntTol;
      for (int j = 0; j < n; ++j) {
        if (!model.variable(j).is_integer()) continue;
        double f = x[j] - std::floor(x[j]);
        double dist = std::min(f, 1.0 - f);
        if (dist > best_frac) {
          best_frac = dist;
          branch = j;
        }
      }
      if (branch < 0) {
        for (int j = 0; j < n; ++j) {
          if (model.variable(j).is_integer()) x[j] = std::round(x[j]);
        }
        incumbent = integral ? std::round(model.objective_value(x))
                             : model.objective_value(x);
        best = std::move(x);
        continue;
      }

      const double v = x[branch];
      DualSimplex::Basis basis = lp.basis();
      Node down{node.lb, node.ub, basis, obj};
      down.ub[branch] = std::floor(v);
      Node up{std::move(node.lb), std::move(node.ub), std::move(basis), obj};
      up.lb[branch] = std::ceil(v);
      // Explore the child nearer to the LP value first.
      if (v - std::floor(v) >= 0.5) {
        stack.push_back(std::move(down));
        stack.push_back(std::move(up));
      } else {
        stack.push_back(std::move(up));
        stack.push_back(std::move(down));
      }
    }

    res.seconds = elapsed();
    if (incumbent < kInf) {
      res.has_solution = true;
      res.objective = res.bound = incumbent;
      res.values = std::move(best);
      res.status = unresolved ? SolveStatus::Error : SolveStatus::Optimal;
      if (unresolved) res.message = "some nodes could not be solved";
    } else {
      res.status = unresolved ? SolveStatus::Error : SolveStatus::Infeasible;
    }
    return res;
  }
};

}  // namespace

std::unique_ptr<SolverBackend> make_builtin_backend() {
  return std::make_unique<BuiltinBackend>();
}

}  // namespace qroute::milp
