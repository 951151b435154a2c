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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qroute/milp/model.hpp"

namespace qroute::milp {

/**
 * Bounded dual simplex on  min c'x  s.t.  Ax - s = 0,  l <= (x,s) <= u.
 * Structural columns must have finite bounds so that the all-logical basis
 * is dual feasible; this holds for every model built in this project.
 * Bounds may be changed between solves, keeping the basis (warm start).
 */
class DualSimplex {
 public:
  enum class Status { Optimal, Infeasible, IterationLimit, Error };

  struct Basis {
    std::vector<int> heads;             // basic column per row
    std::vector<std::uint8_t> at_upper; // nonbasic position per column
  };

  explicit DualSimplex(const MilpModel& model);

  int num_structural() const { return n_; }
  int num_rows() const { return m_; }

  double lower(int j) const { return lower_[j]; }
  double upper(int j) const { return upper_[j]; }
  void set_bounds(int j, double lower, double upper);

  Status solve(long iteration_limit = 200000);

  double objective() const;
  /** Values of structural columns. */
  std::vector<double> primal() const;

  Basis basis() const;
  void restore(const Basis& b);

 private:
  void refactor();
  void compute_primal();
  void compute_duals();
  void pivot_column(int j, Eigen::VectorXd& out) const;
  double nonbasic_value(int j) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<std::pair<int, double>>> cols_;  // structural
  std::vector<double> cost_;
  std::vector<double> lower_, upper_;
  std::vector<int> heads_;
  std::vector<int> pos_in_basis_;      // -1 if nonbasic
  std::vector<std::uint8_t> at_upper_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  std::vector<double> d_;
  int updates_since_refactor_ = 0;
  bool factor_valid_ = false;
};

}  // namespace qroute::milp
