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

#include "qroute/graph.hpp"

#include <algorithm>
#include <queue>

namespace qroute {

Graph::Graph(int node_count, std::vector<Edge> edges) : n_(node_count) {
  if (node_count < 0) throw InputError("negative node count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n_) {
      throw InputError(
          "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
          "} out of range for " + std::to_string(n_) + " nodes");
    }
    if (e.u == e.v) {
      throw InputError("self-loop on node " + std::to_string(e.u));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge");
  }
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[static_cast<std::size_t>(e.u) * n_ + e.v] = 1;
    matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

static std::vector<Edge> to_edges(
    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) throw InputError("self-loop on node " + std::to_string(a));
    out.emplace_back(a, b);
  }
  return out;
}

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edges)
    : Graph(node_count, to_edges(edges)) {}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

bool Graph::is_tree() const {
  return n_ >= 1 && edges_.size() == static_cast<std::size_t>(n_ - 1) &&
         is_connected();
}

std::vector<std::vector<int>> Graph::distances() const {
  std::vector<std::vector<int>> dist(n_, std::vector<int>(n_, -1));
  for (int s = 0; s < n_; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[v]) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

Graph Graph::relabeled(std::span<const int> map) const {
  if (static_cast<int>(map.size()) != n_ || !is_permutation_of_range(map)) {
    throw InputError("relabelling is not a permutation of the node set");
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(map[e.u], map[e.v]);
  return Graph(n_, std::move(out));
}

Graph Graph::padded(int node_count) const {
  if (node_count < n_) throw InputError("cannot pad to fewer nodes");
  return Graph(node_count, edges_);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 nodes");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph star_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, std::move(e));
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> e;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, std::move(e));
}

Graph empty_graph(int n) { return Graph(n, std::vector<Edge>{}); }

bool is_permutation_of_range(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v]) {
      return false;
    }
    seen[v] = 1;
  }
  return true;
}

}  // namespace qroute
