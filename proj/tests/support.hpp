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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qroute/graph.hpp"
#include "qroute/instance.hpp"
#include "qroute/scheduler.hpp"

namespace qroute::testing {

/** Every labelled graph on n nodes, in mask order. */
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1u) e.push_back(pairs[k]);
    out.emplace_back(n, std::move(e));
  }
  return out;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (g.is_connected()) out.push_back(std::move(g));
  return out;
}

/** Lexicographically smallest adjacency string over all relabellings. */
inline std::string canonical_form(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s += g.has_edge(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/** One representative per isomorphism class (first in mask order). */
inline std::vector<Graph> up_to_isomorphism(const std::vector<Graph>& gs) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& g : gs)
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  return out;
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1, std::vector<Edge>{});
  if (n == 2) return Graph(2, std::vector<Edge>{{0, 1}});
  std::vector<int> prufer(n - 2);
  for (int& v : prufer) v = static_cast<int>(rng() % n);
  std::vector<int> degree(n, 1);
  for (int v : prufer) ++degree[v];
  std::vector<Edge> edges;
  for (int v : prufer) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
        break;
      }
    }
  }
  int a = -1;
  for (int u = 0; u < n; ++u)
    if (degree[u] == 1) {
      if (a < 0) {
        a = u;
      } else {
        edges.emplace_back(a, u);
        break;
      }
    }
  return Graph(n, std::move(edges));
}

/** Random graph with each pair present independently, retried until
 * connected. */
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (u(rng) < p) e.emplace_back(i, j);
    Graph g(n, std::move(e));
    if (g.is_connected()) return g;
  }
}

/**
 * Minimum swaps over placement sequences by plain BFS on (placement,
 * satisfied connections); independent of the oracle's pair-set encoding.
 * Returns MS(t) for t = 0..max_steps (-1 = infeasible).
 */
inline std::vector<int> naive_min_swaps_by_steps(const TmpInstance& inst,
                                                 int max_steps) {
  const Graph& h = inst.hardware;
  const int n = inst.n();
  const auto& conns = inst.connections();
  const std::uint32_t full = (1u << conns.size()) - 1u;
  auto met = [&](const std::vector<int>& node_of) {
    std::uint32_t m = 0;
    for (std::size_t c = 0; c < conns.size(); ++c)
      if (h.has_edge(node_of[conns[c].u], node_of[conns[c].v])) m |= 1u << c;
    return m;
  };
  // Matchings of h by brute force over edge subsets.
  std::vector<std::vector<Edge>> matchings;
  const auto& edges = h.edges();
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<Edge> m;
    std::vector<char> used(n, 0);
    bool ok = true;
    for (std::size_t k = 0; k < edges.size() && ok; ++k) {
      if (!(mask >> k & 1u)) continue;
      if (used[edges[k].u] || used[edges[k].v]) ok = false;
      used[edges[k].u] = used[edges[k].v] = 1;
      m.push_back(edges[k]);
    }
    if (ok) matchings.push_back(std::move(m));
  }
  using State = std::pair<std::vector<int>, std::uint32_t>;
  std::map<State, int> level;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    level[{perm, met(perm)}] = 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> out;
  for (int t = 0; t <= max_steps; ++t) {
    int best = -1;
    for (const auto& [st, swaps] : level)
      if (st.second == full && (best < 0 || swaps < best)) best = swaps;
    out.push_back(best);
    if (t == max_steps) break;
    std::map<State, int> next;
    for (const auto& [st, swaps] : level) {
      for (const auto& m : matchings) {
        std::vector<int> node_of = st.first;
        for (int& v : node_of)
          for (const Edge& e : m) {
            if (v == e.u) {
              v = e.v;
              break;
            }
            if (v == e.v) {
              v = e.u;
              break;
            }
          }
        const State ns{node_of, st.second | met(node_of)};
        const int cost = swaps + static_cast<int>(m.size());
        auto it = next.find(ns);
        if (it == next.end() || cost < it->second) next[ns] = cost;
      }
    }
    level = std::move(next);
  }
  return out;
}

/**
 * Exhaustive scheduler: tries every slot for every gate with the same
 * layer budget as the MILP. Returns the minimum depth.
 */
inline int brute_force_depth(const ScheduleWindows& w) {
  const int T = w.steps();
  const int n = w.placements.size() > 1 ? w.placements[1].size() : 0;
  std::vector<std::vector<std::pair<int, int>>> options;
  for (const GateWindow& g : w.gates) {
    std::vector<std::pair<int, int>> o;
    for (int t : g.steps)
      for (int b = 1; b <= w.budget[t]; ++b) o.emplace_back(t, b);
    for (int t : g.swap_steps) o.emplace_back(t, 0);
    if (o.empty()) return -1;
    options.push_back(std::move(o));
  }
  int best = -1;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::map<std::pair<int, int>, std::vector<char>> used;
    bool ok = true;
    for (std::size_t k = 0; k < options.size() && ok; ++k) {
      const auto [t, b] = options[k][pick[k]];
      auto it = used.find({t, b});
      if (it == used.end()) {
        std::vector<char> busy(n, 0);
        if (b == 0)
          for (const Edge& e : w.solution.matchings[t - 1])
            busy[e.u] = busy[e.v] = 1;
        it = used.emplace(std::pair(t, b), busy).first;
      }
      const int i = w.placements[t].node_of(w.gates[k].gate.u);
      const int j = w.placements[t].node_of(w.gates[k].gate.v);
      if (it->second[i] || it->second[j]) ok = false;
      it->second[i] = it->second[j] = 1;
    }
    if (ok) {
      int extra = 0;
      for (const auto& [slot, busy] : used)
        if (slot.second > 0) ++extra;
      if (best < 0 || T + extra < best) best = T + extra;
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return best;
}

}  // namespace qroute::testing
