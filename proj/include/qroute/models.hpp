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
#include <stdexcept>
#include <string>
#include <vector>

#include "qroute/instance.hpp"
#include "qroute/milp/model.hpp"

namespace qroute {

/**
 * Ways to force every connection to be adjacent at least once:
 *   YEQ   product variables per arc, McCormick linearisation
 *   YIEQ  product variables per arc, aggregated (RLT) inequalities
 *   ZEQ   one indicator per connection and bijection, biclique blocks on
 *         both the edge and the non-edge side
 *   ZIEQ  as ZEQ but only the non-edge side
 */
enum class ModelVariant { YEQ, YIEQ, ZEQ, ZIEQ };

const char* to_string(ModelVariant v);
ModelVariant model_variant_from_string(const std::string& s);

/** Raised when MILP values do not describe a sequence of matchings. */
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Time-expanded assignment/flow model with `bijections` placements
 * (bijections - 1 swap steps). Token p on node i at placement t is
 * w(t,p,i); token p moving along arc i->j (j == i means staying) between
 * placements t and t+1 is x(t,p,i,j). Placements are numbered from 1.
 */
class TmpModel {
 public:
  TmpModel(const TmpInstance& inst, int bijections);

  const TmpInstance& instance() const { return *inst_; }
  int bijections() const { return T_; }
  int steps() const { return T_ - 1; }
  milp::MilpModel& model() { return model_; }
  const milp::MilpModel& model() const { return model_; }

  int w(int t, int p, int i) const;
  int x(int t, int p, int i, int j) const;
  /** -1 if the variable does not exist in this model. */
  int y(int t, int c, int i, int j) const;
  int z(int t, int c) const;
  int s(int t) const;

  std::optional<ModelVariant> variant() const { return variant_; }

  /** Arcs (i,j) with j a neighbour of i or i itself, sorted. */
  const std::vector<std::pair<int, int>>& closed_arcs() const {
    return arcs_;
  }

 private:
  friend TmpModel build_base(const TmpInstance&, int);
  friend void add_gate_constraints(TmpModel&, ModelVariant);
  friend TmpModel build_zopt(const TmpInstance&, int);

  int arc_index(int i, int j) const;

  const TmpInstance* inst_;
  int T_;
  int n_;
  milp::MilpModel model_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> arc_lookup_;  // n*n -> arc index or -1
  std::vector<int> w_, x_, y_, z_, s_;
  std::optional<ModelVariant> variant_;
};

/** Assignment, flow and swap-consistency rows; objective = swap count. */
TmpModel build_base(const TmpInstance& inst, int bijections);

void add_gate_constraints(TmpModel& m, ModelVariant variant);

/** build_base followed by add_gate_constraints. */
TmpModel build_model(const TmpInstance& inst, int bijections,
                     ModelVariant variant);

/**
 * Minimises the number of non-empty steps subject to ZIEQ gates; at an
 * integer optimum every non-empty step holds exactly one swap.
 */
TmpModel build_zopt(const TmpInstance& inst, int bijections);

/** Representatives (lowest id) of the automorphism orbits of h. */
std::vector<int> orbit_representatives(const Graph& h);

/**
 * Puts `token` on an orbit representative at the middle placement and
 * zeroes placements that are out of reach of every representative.
 */
void add_hardware_symmetry(TmpModel& m, int token = 0);

/**
 * For complete A only: fixes placement f at the middle placement and zeroes
 * unreachable token positions at every other placement.
 */
void add_complete_A_fixing(TmpModel& m, const TokenPlacement& f);

/** Middle placement index used by both symmetry reductions. */
inline int middle_bijection(int bijections) {
  return bijections / 2 < 1 ? 1 : bijections / 2;
}

/** Reads placements and matchings from MILP values. */
SwapSolution decode(const TmpModel& m, const std::vector<double>& values);

}  // namespace qroute
