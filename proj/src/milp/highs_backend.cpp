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

#include <Highs.h>

#include <chrono>

#include "qroute/milp/backend.hpp"

namespace qroute::milp {

namespace {

class HighsBackend : public SolverBackend {
 public:
  std::string name() const override { return "highs"; }

  SolveResult solve(const MilpModel& model,
                    const SolveOptions& options) override {
    const auto start = std::chrono::steady_clock::now();
    const int n = model.num_variables();
    const int m = model.num_rows();

    HighsLp lp;
    lp.num_col_ = n;
    lp.num_row_ = m;
    lp.sense_ = ObjSense::kMinimize;
    lp.col_cost_.resize(n);
    lp.col_lower_.resize(n);
    lp.col_upper_.resize(n);
    bool any_integer = false;
    for (int j = 0; j < n; ++j) {
      const Variable& v = model.variable(j);
      lp.col_cost_[j] = v.cost;
      lp.col_lower_[j] = v.lower == -kInf ? -kHighsInf : v.lower;
      lp.col_upper_[j] = v.upper == kInf ? kHighsInf : v.upper;
      any_integer |= v.is_integer();
    }
    if (any_integer && !options.relax_integrality) {
      lp.integrality_.resize(n);
      for (int j = 0; j < n; ++j) {
        lp.integrality_[j] = model.variable(j).is_integer()
                                 ? HighsVarType::kInteger
                                 : HighsVarType::kContinuous;
      }
    }
    lp.row_lower_.resize(m);
    lp.row_upper_.resize(m);
    lp.a_matrix_.format_ = MatrixFormat::kRowwise;
    lp.a_matrix_.num_col_ = n;
    lp.a_matrix_.num_row_ = m;
    lp.a_matrix_.start_.assign(1, 0);
    for (int i = 0; i < m; ++i) {
      const Row& r = model.rows()[i];
      lp.row_lower_[i] = r.sense == Sense::LessEqual ? -kHighsInf : r.rhs;
      lp.row_upper_[i] = r.sense == Sense::GreaterEqual ? kHighsInf : r.rhs;
      for (const Term& t : r.terms) {
        lp.a_matrix_.index_.push_back(t.var);
        lp.a_matrix_.value_.push_back(t.coef);
      }
      lp.a_matrix_.start_.push_back(
          static_cast<HighsInt>(lp.a_matrix_.index_.size()));
    }

    Highs highs;
    highs.setOptionValue("output_flag", false);
    highs.setOptionValue("threads", 1);
    highs.setOptionValue("random_seed", 0);
    highs.setOptionValue("presolve", "off");
    highs.setOptionValue("mip_rel_gap", 0.0);
    // With an integral objective any gap below one proves optimality.
    highs.setOptionValue("mip_abs_gap",
                         model.integral_objective() ? 1.0 - 1e-6 : 1e-6);
    if (options.time_limit < kInf) {
      highs.setOptionValue("time_limit", options.time_limit);
    }

    SolveResult res;
    if (highs.passModel(std::move(lp)) == HighsStatus::kError) {
      res.status = SolveStatus::Error;
      res.message = "model rejected";
      return res;
    }
    highs.run();
    const HighsModelStatus ms = highs.getModelStatus();
    const HighsInfo& info = highs.getInfo();
    res.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    res.nodes = static_cast<long>(info.mip_node_count);
    const bool feasible = info.primal_solution_status == kSolutionStatusFeasible;
    if (feasible) {
      res.has_solution = true;
      res.values = highs.getSolution().col_value;
      res.objective = info.objective_function_value;
    }
    switch (ms) {
      case HighsModelStatus::kOptimal:
        res.status = SolveStatus::Optimal;
        res.bound = res.objective;
        break;
      case HighsModelStatus::kInfeasible:
        res.status = SolveStatus::Infeasible;
        res.has_solution = false;
        break;
      case HighsModelStatus::kUnboundedOrInfeasible:
      case HighsModelStatus::kUnbounded:
        res.status = feasible ? SolveStatus::Unbounded
                              : SolveStatus::Infeasible;
        break;
      case HighsModelStatus::kTimeLimit:
      case HighsModelStatus::kIterationLimit:
      case HighsModelStatus::kSolutionLimit:
      case HighsModelStatus::kInterrupt:
        res.status = SolveStatus::TimeLimit;
        res.bound = info.mip_dual_bound;
        break;
      case HighsModelStatus::kModelEmpty:
        res.status = SolveStatus::Optimal;
        res.has_solution = true;
        res.values.assign(n, 0.0);
        res.objective = res.bound = 0.0;
        break;
      default:
        res.status = SolveStatus::Error;
        res.message = highs.modelStatusToString(ms);
        break;
    }
    return res;
  }
};

}  // namespace

std::unique_ptr<SolverBackend> make_highs_backend() {
  return std::make_unique<HighsBackend>();
}

}  // namespace qroute::milp
