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

#include "qroute/constructive.hpp"

#include <algorithm>
#include <queue>

namespace qroute {

namespace {

class ShrinkingTree {
 public:
  explicit ShrinkingTree(const Graph& g)
      : g_(g), alive_(g.node_count(), 1), size_(g.node_count()) {}

  int size() const { return size_; }
  bool alive(int v) const { return alive_[v] != 0; }
  void remove(int v) {
    alive_[v] = 0;
    --size_;
  }

  int degree(int v) const {
    int d = 0;
    for (int w : g_.neighbors(v)) d += alive_[w];
    return d;
  }

  bool is_leaf(int v) const { return alive(v) && degree(v) == 1; }

  std::vector<int> preorder(int root) const {
    std::vector<int> order;
    std::vector<char> seen(g_.node_count(), 0);
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      order.push_back(v);
      const auto& nb = g_.neighbors(v);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
        if (alive_[*it] && !seen[*it]) stack.push_back(*it);
      }
    }
    return order;
  }

  /** Nodes after `from` on the unique path to `to`. */
  std::vector<int> path(int from, int to) const {
    std::vector<int> parent(g_.node_count(), -1);
    std::queue<int> q;
    parent[from] = from;
    q.push(from);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (v == to) break;
      for (int w : g_.neighbors(v)) {
        if (alive_[w] && parent[w] < 0) {
          parent[w] = v;
          q.push(w);
        }
      }
    }
    std::vector<int> out;
    for (int v = to; v != from; v = parent[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  const Graph& g_;
  std::vector<char> alive_;
  int size_;
};

}  // namespace

SwapSolution dfs_swap_solve(const Graph& tree, DfsTrace* trace) {
  if (!tree.is_tree()) throw InputError("hardware graph is not a tree");
  const int n = tree.node_count();
  if (n < 2) throw InputError("tree needs at least two nodes");
  SwapSolution sol{TokenPlacement::identity(n), {}};
  ShrinkingTree t(tree);

  for (int it = 1; it <= n - 2; ++it) {
    int pivot = -1, leaf = -1;
    for (int v = 0; v < n && pivot < 0; ++v) {
      if (!t.alive(v) || t.is_leaf(v)) continue;
      for (int w : tree.neighbors(v)) {
        if (t.is_leaf(w)) {
          pivot = v;
          leaf = w;
          break;
        }
      }
    }
    DfsIteration rec;
    rec.pivot = pivot;
    rec.leaf = leaf;
    rec.dfs_order = t.preorder(leaf);

    int cur = pivot;
    auto move_to = [&](int target) {
      for (int w : t.path(cur, target)) {
        sol.matchings.push_back({Edge(cur, w)});
        cur = w;
      }
    };
    const auto& order = rec.dfs_order;
    for (std::size_t k = 2; k < order.size(); ++k) {
      if (!t.is_leaf(order[k])) move_to(order[k]);
    }
    rec.removed_leaf = order.back();
    move_to(order.back());
    t.remove(order.back());
    if (trace) trace->iterations.push_back(std::move(rec));
  }
  return sol;
}

std::vector<Matching> path_sequence(int k) {
  if (k < 2) throw InputError("path_sequence needs k >= 2");
  std::vector<Matching> seq;
  for (int s = 1; s <= 2 * k - 3; ++s) {
    // Once the top token has reached the bottom (after k-1 steps) the
    // bottom node is left alone.
    int last = s <= k - 1 ? k - 1 : k - 2;
    Matching m;
    for (int i = (s % 2 == 1) ? 0 : 1; i + 1 <= last; i += 2) {
      m.emplace_back(i, i + 1);
    }
    seq.push_back(std::move(m));
  }
  return seq;
}

Graph qsst_graph(int m) {
  if (m < 1) throw InputError("qsst_graph needs m >= 1");
  std::vector<Edge> e;
  for (int b = 0; b < m; ++b) {
    e.emplace_back(0, qsst_node(m, b, 0));
    for (int d = 0; d + 1 < m; ++d) {
      e.emplace_back(qsst_node(m, b, d), qsst_node(m, b, d + 1));
    }
  }
  return Graph(m * m + 1, std::move(e));
}

SwapSolution qsst_solve(int m) {
  if (m < 2) throw InputError("qsst_solve needs m >= 2");
  const int n = m * m + 1;
  SwapSolution sol{TokenPlacement::identity(n), {}};
  std::vector<int> len(m, m);
  int parked_branch = -1;

  while (true) {
    // Every token passes the node next to the root; the token parked on
    // top of a branch travels to its bottom.
    std::vector<std::vector<Matching>> seqs(m);
    std::size_t steps = 0;
    for (int b = 0; b < m; ++b) {
      if (len[b] >= 2) seqs[b] = path_sequence(len[b]);
      steps = std::max(steps, seqs[b].size());
    }
    for (std::size_t s = 0; s < steps; ++s) {
      Matching step;
      for (int b = 0; b < m; ++b) {
        if (s >= seqs[b].size()) continue;
        for (const Edge& e : seqs[b][s]) {
          step.emplace_back(qsst_node(m, b, e.u), qsst_node(m, b, e.v));
        }
      }
      if (!step.empty()) sol.matchings.push_back(std::move(step));
    }
    if (parked_branch >= 0) --len[parked_branch];

    int remaining = 0;
    for (int l : len) remaining += l;
    if (remaining <= 1) break;

    int b = static_cast<int>(std::max_element(len.begin(), len.end()) -
                             len.begin());
    sol.matchings.push_back({Edge(0, qsst_node(m, b, 0))});
    parked_branch = b;
  }
  return sol;
}

}  // namespace qroute
