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

#include "qroute/milp/backend.hpp"

#include <cmath>
#include <stdexcept>

namespace qroute::milp {

#ifdef QROUTE_HAVE_HIGHS
std::unique_ptr<SolverBackend> make_highs_backend();
#endif

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::TimeLimit:
      return "time_limit";
    case SolveStatus::Unbounded:
      return "unbounded";
    case SolveStatus::Error:
      return "error";
  }
  return "error";
}

std::unique_ptr<SolverBackend> make_backend(const std::string& name) {
  if (name == "builtin") return make_builtin_backend();
#ifdef QROUTE_HAVE_HIGHS
  if (name == "highs" || name == "default") return make_highs_backend();
#else
  if (name == "default") return make_builtin_backend();
#endif
  throw std::invalid_argument("unknown or unavailable solver backend '" +
                              name + "'");
}

std::vector<std::string> available_backends() {
#ifdef QROUTE_HAVE_HIGHS
  return {"highs", "builtin"};
#else
  return {"builtin"};
#endif
}

std::optional<int> integral_objective(const SolveResult& r) {
  if (!r.has_solution || !std::isfinite(r.objective)) return std::nullopt;
  double rounded = std::round(r.objective);
  if (std::abs(r.objective - rounded) > 1e-6) return std::nullopt;
  return static_cast<int>(rounded);
}

}  // namespace qroute::milp
