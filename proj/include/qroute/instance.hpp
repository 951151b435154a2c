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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qroute/graph.hpp"

namespace qroute {

/**
 * Bijection tokens -> hardware nodes. Token p sits on node_of(p).
 */
class TokenPlacement {
 public:
  TokenPlacement() = default;
  explicit TokenPlacement(std::vector<int> node_of_token);
  static TokenPlacement identity(int n);

  int size() const { return static_cast<int>(node_of_.size()); }
  int node_of(int token) const { return node_of_[token]; }
  int token_at(int node) const { return token_at_[node]; }
  const std::vector<int>& nodes() const { return node_of_; }

  friend bool operator==(const TokenPlacement& a, const TokenPlacement& b) {
    return a.node_of_ == b.node_of_;
  }

 private:
  std::vector<int> node_of_;
  std::vector<int> token_at_;
};

using Matching = std::vector<Edge>;

/**
 * Hardware graph H plus interaction graph A. A is padded with isolated
 * tokens so that both have the same number of vertices.
 */
struct TmpInstance {
  Graph hardware;
  Graph algorithm;
  int logical_qubits = 0;

  TmpInstance() = default;
  TmpInstance(Graph h, Graph a);

  int n() const { return hardware.node_count(); }
  const std::vector<Edge>& connections() const { return algorithm.edges(); }
};

struct SwapSolution {
  TokenPlacement initial;
  std::vector<Matching> matchings;

  int steps() const { return static_cast<int>(matchings.size()); }
  int swap_count() const;
};

/** One circuit layer: swap gates and algorithm gates on hardware edges. */
struct CircuitLayer {
  std::vector<Edge> swaps;
  std::vector<Edge> gates;
};

struct RoutedCircuit {
  TokenPlacement initial;
  std::vector<CircuitLayer> layers;

  int depth() const { return static_cast<int>(layers.size()); }
  int swap_count() const;
};

/** True iff m is a matching whose edges all belong to h. */
bool is_matching_in(const Graph& h, const Matching& m);

/** Placement after swapping the tokens on every edge of m. */
TokenPlacement apply_matching(const Graph& h, const TokenPlacement& f,
                              const Matching& m);

/** f_1 .. f_{k+1}. */
std::vector<TokenPlacement> placement_trajectory(const Graph& h,
                                                 const SwapSolution& sol);

struct SwapValidation {
  bool valid = false;
  int swaps = 0;
  int steps = 0;
  std::vector<Edge> uncovered;
  std::vector<std::string> issues;
};

SwapValidation validate_swap_solution(const TmpInstance& inst,
                                      const SwapSolution& sol);

struct CircuitValidation {
  bool valid = false;
  int depth = 0;
  int swaps = 0;
  std::vector<Edge> missing_gates;
  std::vector<std::string> issues;
};

/**
 * Checks that every layer is a matching of H, that every connection of A
 * is executed exactly once and only on adjacent tokens.
 */
CircuitValidation validate_routed_circuit(const TmpInstance& inst,
                                          const RoutedCircuit& rc);

/** Placement embedding A into H (zero swaps needed), if one exists. */
std::optional<TokenPlacement> is_subgraph_placement(const TmpInstance& inst);

/**
 * Transports a solution along node_map (hardware relabelling) and token_map
 * (token relabelling).
 */
SwapSolution relabel_solution(const SwapSolution& sol,
                              std::span<const int> node_map,
                              std::span<const int> token_map);

/** Removes empty matchings. */
SwapSolution drop_empty_steps(const SwapSolution& sol);

}  // namespace qroute
