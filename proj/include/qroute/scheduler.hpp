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
#include <vector>

#include "qroute/instance.hpp"
#include "qroute/milp/backend.hpp"
#include "qroute/milp/model.hpp"

namespace qroute {

/**
 * Where a gate (token pair) may run. steps: placements t in [T+1] where the
 * tokens are adjacent. swap_steps: the subset of [T] where, in addition,
 * neither node is touched by M_t, so the gate can share swap layer S_t.
 */
struct GateWindow {
  Edge gate;
  std::vector<int> steps;
  std::vector<int> swap_steps;
};

/**
 * Scheduling data for a swap solution with its empty steps removed.
 * Placements and budget are indexed 1..T+1 (index 0 unused).
 */
struct ScheduleWindows {
  SwapSolution solution;
  std::vector<TokenPlacement> placements;
  std::vector<GateWindow> gates;
  /** Empty layers allowed before swap layer t: max degree of H_t plus one. */
  std::vector<int> budget;

  int steps() const { return solution.steps(); }
};

/** Throws InputError if sol is not a valid solution for inst. */
ScheduleWindows compute_windows(const TmpInstance& inst,
                                const SwapSolution& sol);

struct ScheduleVar {
  int t = 0;
  int layer = 0;  // 0 = swap layer S_t, b >= 1 = empty layer b before S_t
  int var = -1;
};

struct ScheduleModel {
  milp::MilpModel model{"schedule"};
  /** u[t][b-1] for t in 1..T+1 (u[0] empty). */
  std::vector<std::vector<int>> u;
  /** Assignment columns per gate, in gate order. */
  std::vector<std::vector<ScheduleVar>> a;
};

/** Throws InputError if some gate has an empty window. */
ScheduleModel build_schedule_model(const ScheduleWindows& w);

/** Per gate: (t, layer) with the same meaning as ScheduleVar. */
struct ScheduleAssignment {
  std::vector<std::pair<int, int>> slot;
};

ScheduleAssignment assignment_from_values(const ScheduleModel& sm,
                                          const std::vector<double>& values);

/**
 * Builds the layered circuit: for each t the used empty layers (in order),
 * then S_t with the swaps of M_t and the gates assigned to it. Gates are
 * written on hardware edges. Throws InputError on an infeasible assignment.
 */
RoutedCircuit assemble_circuit(const ScheduleWindows& w,
                               const ScheduleAssignment& assignment);

/**
 * First-fit into the earliest layer that has room, opening a new empty
 * layer when none does. Not optimal.
 */
ScheduleAssignment greedy_schedule(const ScheduleWindows& w);

struct ScheduleResult {
  RoutedCircuit circuit;
  ScheduleAssignment assignment;
  std::string method;  // "milp" or "greedy"
  bool optimal = false;
  int added_layers = 0;
  milp::SolveStatus status = milp::SolveStatus::Error;
  double seconds = 0.0;
};

/**
 * Solves the scheduling model with `backend`; falls back to the greedy
 * schedule if backend is null or returns no solution.
 */
ScheduleResult schedule(const TmpInstance& inst, const SwapSolution& sol,
                        milp::SolverBackend* backend,
                        double time_limit = milp::kInf);

}  // namespace qroute
