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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qroute {

/** Raised for malformed user input (bad graphs, placements, files). */
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Undirected edge, always stored with u < v. */
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on nodes 0..n-1.
 * Edges are normalised and sorted; self-loops and duplicates are rejected.
 */
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, std::vector<Edge> edges);
  Graph(int node_count, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(int a, int b) const {
    return a != b && matrix_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

  bool is_connected() const;
  bool is_tree() const;
  bool is_complete() const {
    return edges_.size() ==
           static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

  /** All-pairs hop distances; -1 for unreachable pairs. */
  std::vector<std::vector<int>> distances() const;

  /** Graph with node v renamed to map[v]. */
  Graph relabeled(std::span<const int> map) const;

  /** Same edges on a larger node set (extra nodes isolated). */
  Graph padded(int node_count) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/** K_{1,n-1} with centre 0. */
Graph star_graph(int n);
Graph grid_graph(int rows, int cols);
Graph empty_graph(int n);

/** True iff `perm` is a permutation of 0..size-1. */
bool is_permutation_of_range(std::span<const int> perm);

}  // namespace qroute
