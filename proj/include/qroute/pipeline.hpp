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
#include <string>

#include "qroute/instance.hpp"
#include "qroute/milp/backend.hpp"
#include "qroute/models.hpp"
#include "qroute/scheduler.hpp"

namespace qroute {

struct PipelineConfig {
  ModelVariant variant = ModelVariant::ZIEQ;
  double time_limit = 600.0;  // seconds per solve
  bool use_step_lower_bound = true;
  bool hardware_symmetry = false;
  /** Fix the middle placement when A is complete. */
  bool complete_fixing = true;
  std::string backend = "default";
  /** Phase 1 gives up (timeout-like partial result) beyond this. */
  int max_steps = 64;
};

struct PhaseTimes {
  double steps = 0.0;
  double swaps_at_mt = 0.0;
  double swaps = 0.0;
  double schedule = 0.0;
};

enum class PipelineStatus { Optimal, Infeasible, Partial };

const char* to_string(PipelineStatus s);

struct PipelineResult {
  PipelineStatus status = PipelineStatus::Partial;
  int mt = -1;
  int ms_at_mt = -1;
  int ms = -1;
  bool mt_optimal = false;
  bool ms_at_mt_optimal = false;
  bool ms_optimal = false;
  /** Swap-optimal when ms_optimal, otherwise the best one found. */
  std::optional<SwapSolution> swap_solution;
  std::optional<RoutedCircuit> routed_circuit;
  std::string schedule_method;
  bool schedule_optimal = false;
  PhaseTimes seconds;
  std::string message;
};

/**
 * Phase 1 finds MT by feasibility solves from the step lower bound up,
 * phase 2 optimises at MT, phase 3 runs ZOPT one swap below MS(MT).
 */
PipelineResult solve_min_swaps(const TmpInstance& inst,
                               const PipelineConfig& cfg = {});

/** Single solve of the configured variant with `steps` steps. */
milp::SolveResult solve_fixed_steps(const TmpInstance& inst, int steps,
                                    const PipelineConfig& cfg,
                                    std::optional<SwapSolution>* decoded =
                                        nullptr);

/** solve_min_swaps followed by scheduling. */
PipelineResult route(const TmpInstance& inst, const PipelineConfig& cfg = {});

/** "grid3x3" (H1) or "twin5cycles" (H2). */
Graph builtin_hardware(const std::string& name);

/**
 * Random A with ceil(n(n-1)/2 * density) edges on the nodes of h; the first
 * connected draw within 1000 attempts, else the last draw.
 */
TmpInstance generate_instance(const Graph& hardware, double density,
                              std::uint64_t seed);

/**
 * Gate list: one gate per line as two qubit labels separated by blanks or a
 * comma; '#' starts a comment; "qubits N" declares labels 0..N-1. Repeated
 * pairs collapse into one connection.
 */
TmpInstance circuit_ingest_text(const std::string& text,
                                const Graph& hardware);
TmpInstance circuit_ingest(const std::string& path, const Graph& hardware);

}  // namespace qroute
