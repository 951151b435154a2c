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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qroute/milp/model.hpp"

namespace qroute::milp {

enum class SolveStatus { Optimal, Infeasible, TimeLimit, Unbounded, Error };

const char* to_string(SolveStatus s);

struct SolveOptions {
  double time_limit = kInf;      // seconds
  bool relax_integrality = false;
  long node_limit = -1;          // builtin only, -1 = none
};

struct SolveResult {
  SolveStatus status = SolveStatus::Error;
  bool has_solution = false;
  double objective = kInf;
  double bound = -kInf;
  std::vector<double> values;
  long nodes = 0;
  double seconds = 0.0;
  std::string message;

  bool optimal() const { return status == SolveStatus::Optimal; }
};

class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual std::string name() const = 0;
  virtual SolveResult solve(const MilpModel& model,
                            const SolveOptions& options) = 0;
};

/** Own dual simplex with branch and bound. Intended for small models. */
std::unique_ptr<SolverBackend> make_builtin_backend();

/** Backend by name: "builtin", "highs" or "default". */
std::unique_ptr<SolverBackend> make_backend(const std::string& name);

std::vector<std::string> available_backends();

/**
 * Objective rounded to the nearest integer when within 1e-6 of it,
 * otherwise nullopt.
 */
std::optional<int> integral_objective(const SolveResult& r);

}  // namespace qroute::milp
