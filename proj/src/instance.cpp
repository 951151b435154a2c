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

#include "qroute/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qroute {

TokenPlacement::TokenPlacement(std::vector<int> node_of_token)
    : node_of_(std::move(node_of_token)) {
  if (!is_permutation_of_range(node_of_)) {
    throw InputError("placement is not a bijection");
  }
  token_at_.assign(node_of_.size(), -1);
  for (std::size_t p = 0; p < node_of_.size(); ++p) {
    token_at_[node_of_[p]] = static_cast<int>(p);
  }
}

TokenPlacement TokenPlacement::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return TokenPlacement(std::move(v));
}

TmpInstance::TmpInstance(Graph h, Graph a)
    : hardware(std::move(h)), logical_qubits(a.node_count()) {
  if (a.node_count() > hardware.node_count()) {
    throw InputError("algorithm graph has more qubits (" +
                     std::to_string(a.node_count()) + ") than hardware (" +
                     std::to_string(hardware.node_count()) + ")");
  }
  algorithm = a.padded(hardware.node_count());
}

int SwapSolution::swap_count() const {
  int s = 0;
  for (const auto& m : matchings) s += static_cast<int>(m.size());
  return s;
}

int RoutedCircuit::swap_count() const {
  int s = 0;
  for (const auto& l : layers) s += static_cast<int>(l.swaps.size());
  return s;
}

bool is_matching_in(const Graph& h, const Matching& m) {
  std::vector<char> used(h.node_count(), 0);
  for (const Edge& e : m) {
    if (e.u < 0 || e.v >= h.node_count() || !h.has_edge(e.u, e.v)) {
      return false;
    }
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

TokenPlacement apply_matching(const Graph& h, const TokenPlacement& f,
                              const Matching& m) {
  if (f.size() != h.node_count()) {
    throw InputError("placement size does not match hardware");
  }
  if (!is_matching_in(h, m)) {
    throw InputError("swap layer is not a matching of the hardware graph");
  }
  std::vector<int> nodes = f.nodes();
  for (const Edge& e : m) {
    std::swap(nodes[f.token_at(e.u)], nodes[f.token_at(e.v)]);
  }
  return TokenPlacement(std::move(nodes));
}

std::vector<TokenPlacement> placement_trajectory(const Graph& h,
                                                 const SwapSolution& sol) {
  std::vector<TokenPlacement> out{sol.initial};
  out.reserve(sol.matchings.size() + 1);
  for (const auto& m : sol.matchings) {
    out.push_back(apply_matching(h, out.back(), m));
  }
  return out;
}

SwapValidation validate_swap_solution(const TmpInstance& inst,
                                      const SwapSolution& sol) {
  const Graph& h = inst.hardware;
  if (sol.initial.size() != h.node_count()) {
    throw InputError("placement has " + std::to_string(sol.initial.size()) +
                     " tokens, hardware has " +
                     std::to_string(h.node_count()) + " nodes");
  }
  SwapValidation out;
  out.steps = sol.steps();
  out.swaps = sol.swap_count();
  for (std::size_t t = 0; t < sol.matchings.size(); ++t) {
    if (!is_matching_in(h, sol.matchings[t])) {
      out.issues.push_back("step " + std::to_string(t + 1) +
                           " is not a matching of the hardware graph");
    }
  }
  if (!out.issues.empty()) return out;

  auto traj = placement_trajectory(h, sol);
  for (const Edge& c : inst.connections()) {
    bool met = std::any_of(traj.begin(), traj.end(), [&](const auto& f) {
      return h.has_edge(f.node_of(c.u), f.node_of(c.v));
    });
    if (!met) out.uncovered.push_back(c);
  }
  if (!out.uncovered.empty()) {
    out.issues.push_back(std::to_string(out.uncovered.size()) +
                         " connection(s) never adjacent");
  }
  out.valid = out.issues.empty();
  return out;
}

CircuitValidation validate_routed_circuit(const TmpInstance& inst,
                                          const RoutedCircuit& rc) {
  const Graph& h = inst.hardware;
  if (rc.initial.size() != h.node_count()) {
    throw InputError("placement size does not match hardware");
  }
  CircuitValidation out;
  out.depth = rc.depth();
  out.swaps = rc.swap_count();
  std::set<Edge> pending(inst.connections().begin(),
                         inst.connections().end());
  std::set<Edge> done;
  TokenPlacement f = rc.initial;
  for (std::size_t l = 0; l < rc.layers.size(); ++l) {
    const auto& layer = rc.layers[l];
    const std::string where = "layer " + std::to_string(l + 1);
    Matching all = layer.swaps;
    all.insert(all.end(), layer.gates.begin(), layer.gates.end());
    if (!is_matching_in(h, all)) {
      out.issues.push_back(where +
                           " is not a matching of the hardware graph");
      return out;
    }
    for (const Edge& g : layer.gates) {
      Edge pair(f.token_at(g.u), f.token_at(g.v));
      if (done.count(pair)) {
        out.issues.push_back(where + " repeats gate {" +
                             std::to_string(pair.u) + "," +
                             std::to_string(pair.v) + "}");
      } else if (!pending.count(pair)) {
        out.issues.push_back(where + " executes a gate not in the circuit");
      } else {
        pending.erase(pair);
        done.insert(pair);
      }
    }
    f = apply_matching(h, f, layer.swaps);
  }
  out.missing_gates.assign(pending.begin(), pending.end());
  if (!pending.empty()) {
    out.issues.push_back(std::to_string(pending.size()) +
                         " gate(s) never executed");
  }
  out.valid = out.issues.empty();
  return out;
}

namespace {

struct EmbeddingSearch {
  const Graph& h;
  const Graph& a;
  std::vector<int> order;
  std::vector<int> node_of;
  std::vector<char> used;

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    int p = order[k];
    for (int v = 0; v < h.node_count(); ++v) {
      if (used[v] || h.degree(v) < a.degree(p)) continue;
      bool ok = true;
      for (int q : a.neighbors(p)) {
        if (node_of[q] >= 0 && !h.has_edge(v, node_of[q])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      node_of[p] = v;
      used[v] = 1;
      if (extend(k + 1)) return true;
      node_of[p] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<TokenPlacement> is_subgraph_placement(const TmpInstance& inst) {
  const Graph& h = inst.hardware;
  const Graph& a = inst.algorithm;
  const int n = h.node_count();
  if (a.edge_count() > h.edge_count()) return std::nullopt;

  // Tokens with connections first, each next one adjacent to a placed one
  // where possible, highest degree first.
  std::vector<int> order;
  std::vector<char> in_order(n, 0);
  while (true) {
    int best = -1, best_key = -1;
    for (int p = 0; p < n; ++p) {
      if (in_order[p] || a.degree(p) == 0) continue;
      int placed_nbrs = 0;
      for (int q : a.neighbors(p)) placed_nbrs += in_order[q];
      int key = placed_nbrs * (n + 1) + a.degree(p);
      if (key > best_key) {
        best_key = key;
        best = p;
      }
    }
    if (best < 0) break;
    in_order[best] = 1;
    order.push_back(best);
  }
  EmbeddingSearch s{h, a, order, std::vector<int>(n, -1),
                    std::vector<char>(n, 0)};
  if (!s.extend(0)) return std::nullopt;
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (s.node_of[p] >= 0) continue;
    while (s.used[next]) ++next;
    s.node_of[p] = next;
    s.used[next] = 1;
  }
  return TokenPlacement(std::move(s.node_of));
}

SwapSolution relabel_solution(const SwapSolution& sol,
                              std::span<const int> node_map,
                              std::span<const int> token_map) {
  const int n = sol.initial.size();
  if (static_cast<int>(node_map.size()) != n ||
      static_cast<int>(token_map.size()) != n ||
      !is_permutation_of_range(node_map) ||
      !is_permutation_of_range(token_map)) {
    throw InputError("relabelling maps must be permutations of size n");
  }
  std::vector<int> nodes(n);
  for (int p = 0; p < n; ++p) {
    nodes[token_map[p]] = node_map[sol.initial.node_of(p)];
  }
  SwapSolution out{TokenPlacement(std::move(nodes)), {}};
  for (const auto& m : sol.matchings) {
    Matching mm;
    for (const Edge& e : m) mm.emplace_back(node_map[e.u], node_map[e.v]);
    std::sort(mm.begin(), mm.end());
    out.matchings.push_back(std::move(mm));
  }
  return out;
}

SwapSolution drop_empty_steps(const SwapSolution& sol) {
  SwapSolution out{sol.initial, {}};
  for (const auto& m : sol.matchings) {
    if (!m.empty()) out.matchings.push_back(m);
  }
  return out;
}

}  // namespace qroute
