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

#include <vector>

#include "qroute/instance.hpp"

namespace qroute {

/** Per-iteration record of the tree sweep. */
struct DfsIteration {
  int pivot = 0;               // node holding the sweeping token
  int leaf = 0;                // leaf the DFS starts from
  std::vector<int> dfs_order;  // preorder of the remaining tree
  int removed_leaf = 0;
};

struct DfsTrace {
  std::vector<DfsIteration> iterations;
};

/**
 * Sweeps one token through the tree per iteration, visiting every internal
 * node in DFS preorder, then parks it on the last visited leaf which is
 * removed. Valid for any A on the tree; one swap per step, at most
 * (n-2)^2 swaps. Starts from the identity placement.
 */
SwapSolution dfs_swap_solve(const Graph& tree, DfsTrace* trace = nullptr);

/**
 * 2k-3 matchings on the path 0 - 1 - ... - k-1 after which every token has
 * occupied node 0 and the token that started on node 0 sits on node k-1.
 */
std::vector<Matching> path_sequence(int k);

/** Root 0 plus m disjoint paths of m nodes hanging from it. */
Graph qsst_graph(int m);

/** Node of depth d (0 = next to the root) on branch b of qsst_graph(m). */
inline int qsst_node(int m, int branch, int depth) {
  return 1 + branch * m + depth;
}

/** Solution for (qsst_graph(m), K_{m^2+1}) with O(m^3) steps. */
SwapSolution qsst_solve(int m);

}  // namespace qroute
