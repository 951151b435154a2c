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
#include <string>
#include <vector>

#include "qroute/graph.hpp"
#include "qroute/milp/backend.hpp"
#include "qroute/milp/model.hpp"

namespace qroute::polytope {

/** Bipartite graph on X = {0..left-1}, Y = {0..right-1}. */
class BipartiteGraph {
 public:
  BipartiteGraph(int left, int right,
                 const std::vector<std::pair<int, int>>& edges);

  int left() const { return left_; }
  int right() const { return right_; }
  bool has_edge(int i, int j) const { return adj_[i][j] != 0; }
  std::size_t edge_count() const { return edges_; }
  bool is_complete() const {
    return edges_ == static_cast<std::size_t>(left_) * right_;
  }
  BipartiteGraph complement() const;

 private:
  int left_, right_;
  std::size_t edges_ = 0;
  std::vector<std::vector<char>> adj_;
};

/** X = V, Y = V', (i, j') an edge iff {i, j} is an edge of h. */
BipartiteGraph bipartite_of(const Graph& h);

/** I x J with I in X, J in Y; both sorted. */
struct Block {
  std::vector<int> rows;
  std::vector<int> cols;

  friend auto operator<=>(const Block&, const Block&) = default;
};

/**
 * Inclusion-maximal bicliques (pairs closed under common neighbourhood),
 * including those with an empty side. Sorted. Sides up to 64 nodes.
 */
std::vector<Block> maximal_bicliques(const BipartiteGraph& g);
std::vector<Block> maximal_antibicliques(const BipartiteGraph& g);

enum class Relation { Eq, Leq };

/**  x . coef_x + y . coef_y + coef_z * z  (sense)  rhs  */
struct LinearInequality {
  std::string family;
  int node = -1;  // anchor node for per-node families, -1 otherwise
  std::vector<double> x;
  std::vector<double> y;
  double z = 0.0;
  milp::Sense sense = milp::Sense::LessEqual;
  double rhs = 0.0;

  bool satisfied_by(const std::vector<double>& xv,
                    const std::vector<double>& yv, double zv,
                    double tol = 1e-9) const;
};

/**
 * Linear description of the convex hull of
 *   { (x, y, z) : x, y unit vectors, z = [x_i y_j = 1 for an edge] }
 * (Eq) or with z <= ... (Leq), on top of x(X) = 1, y(Y) = 1 and bounds.
 * Families: "biclique_eq", "biclique", "antibiclique", "degenerate".
 */
std::vector<LinearInequality> exact_description(const BipartiteGraph& g,
                                                Relation rel);

/**
 * One block inequality per node i and family, from neighbourhood blocks
 * only: edge side ("edge_p", "edge_q") and non-edge side ("nonedge_p",
 * "nonedge_q").
 */
std::vector<LinearInequality> block_covering_constraints(const Graph& h,
                                                         bool edge_side,
                                                         bool non_edge_side);

struct HullReport {
  bool integral = true;           // every LP optimum / vertex integral
  bool integer_points_match = true;
  long integer_points_checked = 0;
  int lp_solves = 0;
  long vertices_checked = 0;
  std::vector<double> fractional_witness;  // (x, y, z) if not integral
  std::string detail;

  bool exact() const { return integral && integer_points_match; }
};

struct HullCheckOptions {
  int random_objectives = 1000;
  std::uint64_t seed = 1;
  /** Enumerate all vertices when the dimension is at most this. */
  int enumerate_vertices_up_to = 12;
};

/**
 * Checks that `description` (plus assignment rows and 0/1 bounds) is the
 * integer hull for g under rel: compares 0/1 points with the definition and
 * checks integrality of LP optima for random objectives and, for small
 * dimension, of every vertex.
 */
HullReport verify_integer_hull(const BipartiteGraph& g, Relation rel,
                               const std::vector<LinearInequality>& description,
                               milp::SolverBackend& lp_backend,
                               const HullCheckOptions& options = {});

/** Model with x, y, z columns, assignment rows and `description`. */
milp::MilpModel hull_model(const BipartiteGraph& g,
                           const std::vector<LinearInequality>& description);

}  // namespace qroute::polytope
