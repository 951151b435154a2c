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

#include "qroute/milp/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qroute::milp {

int MilpModel::add_variable(std::string name, VarType type, double lower,
                            double upper, double cost) {
  if (lower > upper) {
    throw std::invalid_argument("empty domain for variable " + name);
  }
  int id = static_cast<int>(vars_.size());
  if (!index_.emplace(name, id).second) {
    throw std::invalid_argument("duplicate variable name " + name);
  }
  vars_.push_back({std::move(name), type, lower, upper, cost});
  return id;
}

int MilpModel::add_row(std::string name, std::vector<Term> terms,
                       Sense sense, double rhs) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= num_variables()) {
      throw std::out_of_range("row " + name + " references unknown column");
    }
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  rows_.push_back({std::move(name), std::move(merged), sense, rhs});
  return static_cast<int>(rows_.size()) - 1;
}

void MilpModel::set_bounds(int var, double lower, double upper) {
  if (lower > upper) {
    throw std::invalid_argument("empty domain for variable " +
                                vars_[var].name);
  }
  vars_[var].lower = lower;
  vars_[var].upper = upper;
}

void MilpModel::clear_objective() {
  for (auto& v : vars_) v.cost = 0.0;
}

std::optional<int> MilpModel::find_variable(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double MilpModel::objective_value(const std::vector<double>& x) const {
  double s = 0.0;
  for (std::size_t j = 0; j < vars_.size(); ++j) s += vars_[j].cost * x[j];
  return s;
}

double MilpModel::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    worst = std::max(worst, vars_[j].lower - x[j]);
    worst = std::max(worst, x[j] - vars_[j].upper);
  }
  for (const Row& r : rows_) {
    double a = 0.0;
    for (const Term& t : r.terms) a += t.coef * x[t.var];
    if (r.sense != Sense::GreaterEqual) worst = std::max(worst, a - r.rhs);
    if (r.sense != Sense::LessEqual) worst = std::max(worst, r.rhs - a);
  }
  return worst;
}

double MilpModel::max_integrality_violation(
    const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    if (vars_[j].is_integer()) {
      worst = std::max(worst, std::abs(x[j] - std::round(x[j])));
    }
  }
  return worst;
}

}  // namespace qroute::milp
