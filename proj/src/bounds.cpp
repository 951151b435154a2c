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

#include "qroute/bounds.hpp"

#include <algorithm>
#include <functional>

namespace qroute {

int delta_prime(const Graph& h) {
  if (h.edge_count() == 0) throw InputError("hardware graph has no edges");
  int best = 0;
  for (const Edge& e : h.edges()) {
    const auto& a = h.neighbors(e.u);
    const auto& b = h.neighbors(e.v);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    int uni = static_cast<int>(a.size() + b.size() - common.size());
    best = std::max(best, uni - static_cast<int>(common.size()) - 2);
  }
  return best;
}

int d_of_h(const Graph& h) {
  if (h.edge_count() == 0) throw InputError("hardware graph has no edges");
  const int n = h.node_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = h.degree(v);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  const int m = static_cast<int>(h.edge_count());
  int best = std::numeric_limits<int>::min();
  int prefix = 0;
  for (int k = 1; k <= n / 2; ++k) {
    prefix += deg[2 * k - 2] + deg[2 * k - 1] - 2;
    best = std::max(best, std::min(prefix, m - k));
  }
  return best;
}

namespace {

int ceil_div_or_unbounded(int demand, int rate) {
  if (demand <= 0) return 0;
  if (rate <= 0) return kUnbounded;
  return (demand + rate - 1) / rate;
}

int excess_connections(const TmpInstance& inst) {
  return static_cast<int>(inst.algorithm.edge_count()) -
         static_cast<int>(inst.hardware.edge_count());
}

}  // namespace

int swap_lower_bound(const TmpInstance& inst) {
  return ceil_div_or_unbounded(excess_connections(inst),
                               delta_prime(inst.hardware));
}

int step_lower_bound(const TmpInstance& inst) {
  return ceil_div_or_unbounded(excess_connections(inst),
                               d_of_h(inst.hardware));
}

int swap_upper_bound(int n) {
  if (n < 2) throw InputError("swap upper bound needs n >= 2");
  return n == 2 ? 0 : (n - 2) * (n - 2);
}

BoundReport bound_report(const TmpInstance& inst) {
  BoundReport r;
  r.delta_prime = delta_prime(inst.hardware);
  r.d_of_h = d_of_h(inst.hardware);
  r.swap_lower = swap_lower_bound(inst);
  r.step_lower = step_lower_bound(inst);
  r.swap_upper = swap_upper_bound(inst.n());
  return r;
}

}  // namespace qroute
