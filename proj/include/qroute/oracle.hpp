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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qroute/instance.hpp"

namespace qroute {

/** Raised when an exhaustive search is asked for an instance too large. */
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Exhaustive reference solver. The search state is the set of node pairs
 * whose current occupants still have to meet: a matching permutes that set
 * and pairs lying on hardware edges drop out. Placements reaching the same
 * set are interchangeable for the rest of the search, so the placement
 * itself need not be kept.
 */
class ExhaustiveOracle {
 public:
  static constexpr int kDefaultMaxNodes = 7;
  static constexpr int kHardMaxNodes = 11;

  explicit ExhaustiveOracle(const TmpInstance& inst,
                            int max_nodes = kDefaultMaxNodes);

  /** Minimum number of steps; nullopt if no sequence works. */
  std::optional<int> min_steps();

  /** Minimum swaps using at most `steps` steps; nullopt if none. */
  std::optional<int> min_swaps_with_steps(int steps);

  /**
   * Minimum swaps overall, by scanning t upward until the t-step optimum
   * equals t. `step_cap` bounds the scan.
   */
  std::optional<int> min_swaps(int step_cap = 64);

  /** Number of distinct search states touched by the last call. */
  std::size_t states_visited() const { return visited_; }

 private:
  using State = std::uint64_t;

  State apply(int matching_index, State s) const;

  const TmpInstance& inst_;
  int n_;
  std::vector<Matching> matchings_;               // all non-empty matchings
  std::vector<std::vector<int>> pair_maps_;       // pair index permutation
  State hardware_mask_ = 0;
  std::vector<State> initial_;                    // deduplicated starts
  std::size_t visited_ = 0;
};

/** Index of pair {i,j}, i < j, in the oracle's bit encoding. */
int pair_index(int n, int i, int j);

/** Every matching of h, including the empty one first. */
std::vector<Matching> all_matchings(const Graph& h);

}  // namespace qroute
