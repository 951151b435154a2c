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

#include <string>

#include "qroute/milp/model.hpp"

namespace qroute::milp {

/**
 * CPLEX LP text. Columns and rows keep insertion order and numbers use the
 * shortest round-trip representation, so equal models give equal bytes.
 */
std::string export_lp(const MilpModel& model);

/** Parses the subset of the LP format written by export_lp. */
MilpModel import_lp(const std::string& text);

}  // namespace qroute::milp
