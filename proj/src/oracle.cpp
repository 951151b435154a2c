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

#include "qroute/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace qroute {

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // Row-major upper triangle.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

namespace {

void collect_matchings(const Graph& h, std::size_t next,
                       std::vector<char>& used, Matching& cur,
                       std::vector<Matching>& out) {
  const auto& edges = h.edges();
  for (std::size_t k = next; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    cur.push_back(e);
    out.push_back(cur);
    collect_matchings(h, k + 1, used, cur, out);
    cur.pop_back();
    used[e.u] = used[e.v] = 0;
  }
}

}  // namespace

std::vector<Matching> all_matchings(const Graph& h) {
  std::vector<Matching> out{Matching{}};
  std::vector<char> used(h.node_count(), 0);
  Matching cur;
  collect_matchings(h, 0, used, cur, out);
  return out;
}

ExhaustiveOracle::ExhaustiveOracle(const TmpInstance& inst, int max_nodes)
    : inst_(inst), n_(inst.n()) {
  const int limit = std::min(max_nodes, kHardMaxNodes);
  if (n_ > limit) {
    throw SizeLimitError("exhaustive search limited to " +
                         std::to_string(limit) + " nodes, instance has " +
                         std::to_string(n_));
  }
  matchings_ = all_matchings(inst.hardware);
  matchings_.erase(matchings_.begin());

  const int pairs = n_ * (n_ - 1) / 2;
  for (const Matching& m : matchings_) {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    for (const Edge& e : m) std::swap(perm[e.u], perm[e.v]);
    std::vector<int> map(pairs);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        map[pair_index(n_, i, j)] = pair_index(n_, perm[i], perm[j]);
      }
    }
    pair_maps_.push_back(std::move(map));
  }
  for (const Edge& e : inst.hardware.edges()) {
    hardware_mask_ |= State{1} << pair_index(n_, e.u, e.v);
  }

  std::vector<int> node_of(n_);
  std::iota(node_of.begin(), node_of.end(), 0);
  do {
    State s = 0;
    for (const Edge& c : inst.connections()) {
      s |= State{1} << pair_index(n_, node_of[c.u], node_of[c.v]);
    }
    initial_.push_back(s & ~hardware_mask_);
  } while (std::next_permutation(node_of.begin(), node_of.end()));
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()),
                 initial_.end());
}

ExhaustiveOracle::State ExhaustiveOracle::apply(int k, State s) const {
  const auto& map = pair_maps_[k];
  State out = 0;
  while (s) {
    int b = std::countr_zero(s);
    s &= s - 1;
    out |= State{1} << map[b];
  }
  return out & ~hardware_mask_;
}

std::optional<int> ExhaustiveOracle::min_steps() {
  std::unordered_set<State> seen(initial_.begin(), initial_.end());
  std::vector<State> frontier = initial_;
  visited_ = seen.size();
  if (std::find(initial_.begin(), initial_.end(), 0) != initial_.end()) {
    return 0;
  }
  for (int level = 1; !frontier.empty(); ++level) {
    std::vector<State> next;
    for (State s : frontier) {
      for (std::size_t k = 0; k < matchings_.size(); ++k) {
        State r = apply(static_cast<int>(k), s);
        if (r == 0) {
          visited_ = seen.size();
          return level;
        }
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  visited_ = seen.size();
  return std::nullopt;
}

std::optional<int> ExhaustiveOracle::min_swaps_with_steps(int steps) {
  std::unordered_map<State, int> cur;
  for (State s : initial_) cur.emplace(s, 0);
  std::unordered_set<State> touched(initial_.begin(), initial_.end());
  for (int level = 1; level <= steps; ++level) {
    // The empty matching keeps every state at unchanged cost.
    std::unordered_map<State, int> next = cur;
    for (const auto& [s, c] : cur) {
      if (s == 0) continue;
      for (std::size_t k = 0; k < matchings_.size(); ++k) {
        State r = apply(static_cast<int>(k), s);
        int cost = c + static_cast<int>(matchings_[k].size());
        auto [it, fresh] = next.emplace(r, cost);
        if (!fresh && cost < it->second) it->second = cost;
        touched.insert(r);
      }
    }
    cur = std::move(next);
  }
  visited_ = touched.size();
  auto it = cur.find(0);
  if (it == cur.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ExhaustiveOracle::min_swaps(int step_cap) {
  auto mt = min_steps();
  if (!mt) return std::nullopt;
  for (int t = *mt; t <= step_cap; ++t) {
    auto ms = min_swaps_with_steps(t);
    if (ms && *ms <= t) return ms;
  }
  return std::nullopt;
}

}  // namespace qroute
