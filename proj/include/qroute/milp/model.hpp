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

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qroute::milp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarType { Continuous, Binary, Integer };
enum class Sense { LessEqual, GreaterEqual, Equal };

struct Variable {
  std::string name;
  VarType type = VarType::Continuous;
  double lower = 0.0;
  double upper = kInf;
  double cost = 0.0;

  bool is_integer() const { return type != VarType::Continuous; }
};

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

/** Minimisation MILP with named columns and rows. */
class MilpModel {
 public:
  explicit MilpModel(std::string name = "model") : name_(std::move(name)) {}

  int add_variable(std::string name, VarType type, double lower,
                   double upper, double cost = 0.0);
  int add_binary(std::string name, double cost = 0.0) {
    return add_variable(std::move(name), VarType::Binary, 0.0, 1.0, cost);
  }
  /** Duplicate columns in `terms` are merged, zero coefficients dropped. */
  int add_row(std::string name, std::vector<Term> terms, Sense sense,
              double rhs);

  void set_cost(int var, double cost) { vars_[var].cost = cost; }
  void set_type(int var, VarType type) { vars_[var].type = type; }
  void set_bounds(int var, double lower, double upper);
  void fix(int var, double value) { set_bounds(var, value, value); }
  void clear_objective();

  const std::string& name() const { return name_; }
  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(int j) const { return vars_[j]; }
  const std::vector<Row>& rows() const { return rows_; }
  std::optional<int> find_variable(const std::string& name) const;

  /** Every integer-feasible point has an integral objective value. */
  bool integral_objective() const { return integral_objective_; }
  void set_integral_objective(bool v) { integral_objective_ = v; }

  double objective_value(const std::vector<double>& x) const;
  /** Largest bound or row violation of x. */
  double max_violation(const std::vector<double>& x) const;
  double max_integrality_violation(const std::vector<double>& x) const;

 private:
  std::string name_;
  std::vector<Variable> vars_;
  std::vector<Row> rows_;
  std::unordered_map<std::string, int> index_;
  bool integral_objective_ = false;
};

}  // namespace qroute::milp
