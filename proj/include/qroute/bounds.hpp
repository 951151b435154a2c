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

#include "qroute/instance.hpp"

namespace qroute {

/** Returned by a lower bound when no finite number of swaps/steps helps. */
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/**
 * Largest number of connections a single swap on an edge {i,j} can newly
 * satisfy: max |N(i) u N(j)| - |N(i) n N(j)| - 2.
 */
int delta_prime(const Graph& h);

/**
 * Largest number of connections a single matching can newly satisfy,
 * from the sorted degree sequence.
 */
int d_of_h(const Graph& h);

int swap_lower_bound(const TmpInstance& inst);
int step_lower_bound(const TmpInstance& inst);

/** (n-2)^2 for n >= 3, 0 for n = 2. Valid for every connected H. */
int swap_upper_bound(int n);

struct BoundReport {
  int delta_prime = 0;
  int d_of_h = 0;
  int swap_lower = 0;
  int step_lower = 0;
  int swap_upper = 0;
};

BoundReport bound_report(const TmpInstance& inst);

}  // namespace qroute
