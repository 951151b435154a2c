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

#include "qroute/models.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>

#include "qroute/polytope.hpp"

namespace qroute {

using milp::Sense;
using milp::Term;

const char* to_string(ModelVariant v) {
  switch (v) {
    case ModelVariant::YEQ:
      return "yeq";
    case ModelVariant::YIEQ:
      return "yieq";
    case ModelVariant::ZEQ:
      return "zeq";
    case ModelVariant::ZIEQ:
      return "zieq";
  }
  return "zieq";
}

ModelVariant model_variant_from_string(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (l == "yeq") return ModelVariant::YEQ;
  if (l == "yieq") return ModelVariant::YIEQ;
  if (l == "zeq") return ModelVariant::ZEQ;
  if (l == "zieq") return ModelVariant::ZIEQ;
  throw InputError("unknown model variant '" + s + "'");
}

namespace {

std::string idx_name(const char* prefix, std::initializer_list<int> idx) {
  std::string s = prefix;
  for (int v : idx) {
    s += '_';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

TmpModel::TmpModel(const TmpInstance& inst, int bijections)
    : inst_(&inst), T_(bijections), n_(inst.n()),
      model_("tmp_" + std::to_string(bijections)) {
  if (bijections < 1) throw InputError("need at least one placement");
  const Graph& h = inst.hardware;
  arc_lookup_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int i = 0; i < n_; ++i) {
    std::vector<int> heads = h.neighbors(i);
    heads.push_back(i);
    std::sort(heads.begin(), heads.end());
    for (int j : heads) {
      arc_lookup_[static_cast<std::size_t>(i) * n_ + j] =
          static_cast<int>(arcs_.size());
      arcs_.emplace_back(i, j);
    }
  }
}

int TmpModel::arc_index(int i, int j) const {
  return arc_lookup_[static_cast<std::size_t>(i) * n_ + j];
}

int TmpModel::w(int t, int p, int i) const {
  return w_[(static_cast<std::size_t>(t - 1) * n_ + p) * n_ + i];
}

int TmpModel::x(int t, int p, int i, int j) const {
  int a = arc_index(i, j);
  if (a < 0) return -1;
  return x_[(static_cast<std::size_t>(t - 1) * n_ + p) * arcs_.size() + a];
}

int TmpModel::y(int t, int c, int i, int j) const {
  if (y_.empty()) return -1;
  int a = arc_index(i, j);
  if (a < 0) return -1;
  const std::size_t nc = inst_->connections().size();
  return y_[(static_cast<std::size_t>(t - 1) * nc + c) * arcs_.size() + a];
}

int TmpModel::z(int t, int c) const {
  if (z_.empty()) return -1;
  return z_[static_cast<std::size_t>(t - 1) * inst_->connections().size() +
            c];
}

int TmpModel::s(int t) const {
  if (s_.empty()) return -1;
  return s_[t - 1];
}

TmpModel build_base(const TmpInstance& inst, int T) {
  TmpModel tm(inst, T);
  const int n = inst.n();
  const Graph& h = inst.hardware;
  auto& m = tm.model_;
  m.set_integral_objective(true);

  for (int t = 1; t <= T; ++t)
    for (int p = 0; p < n; ++p)
      for (int i = 0; i < n; ++i)
        tm.w_.push_back(m.add_binary(idx_name("w", {t, p, i})));
  for (int t = 1; t < T; ++t)
    for (int p = 0; p < n; ++p)
      for (auto [i, j] : tm.arcs_)
        tm.x_.push_back(m.add_binary(idx_name("x", {t, p, i, j}),
                                     i == j ? 0.0 : 0.5));

  for (int t = 1; t <= T; ++t) {
    for (int i = 0; i < n; ++i) {
      std::vector<Term> r;
      for (int p = 0; p < n; ++p) r.push_back({tm.w(t, p, i), 1.0});
      m.add_row(idx_name("assign_node", {t, i}), std::move(r), Sense::Equal, 1.0);
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (int p = 0; p < n; ++p) {
      std::vector<Term> r;
      for (int i = 0; i < n; ++i) r.push_back({tm.w(t, p, i), 1.0});
      m.add_row(idx_name("assign_token", {t, p}), std::move(r), Sense::Equal, 1.0);
    }
  }
  auto closed = [&](int i) {
    std::vector<int> out = h.neighbors(i);
    out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int t = 1; t < T; ++t) {
    for (int p = 0; p < n; ++p) {
      for (int i = 0; i < n; ++i) {
        std::vector<Term> r;
        for (int j : closed(i)) r.push_back({tm.x(t, p, i, j), 1.0});
        r.push_back({tm.w(t, p, i), -1.0});
        m.add_row(idx_name("flow_out", {t, p, i}), std::move(r), Sense::Equal, 0.0);
      }
    }
  }
  for (int t = 1; t < T; ++t) {
    for (int p = 0; p < n; ++p) {
      for (int i = 0; i < n; ++i) {
        std::vector<Term> r;
        for (int j : closed(i)) r.push_back({tm.x(t, p, j, i), 1.0});
        r.push_back({tm.w(t + 1, p, i), -1.0});
        m.add_row(idx_name("flow_in", {t, p, i}), std::move(r), Sense::Equal, 0.0);
      }
    }
  }
  // Whatever crosses an edge one way crosses it the other way too.
  for (int t = 1; t < T; ++t) {
    for (const Edge& e : h.edges()) {
      std::vector<Term> r;
      for (int p = 0; p < n; ++p) {
        r.push_back({tm.x(t, p, e.u, e.v), 1.0});
        r.push_back({tm.x(t, p, e.v, e.u), -1.0});
      }
      m.add_row(idx_name("swap", {t, e.u, e.v}), std::move(r), Sense::Equal,
                0.0);
    }
  }
  return tm;
}

void add_gate_constraints(TmpModel& tm, ModelVariant variant) {
  if (tm.variant_) throw std::logic_error("gate constraints already added");
  tm.variant_ = variant;
  const TmpInstance& inst = *tm.inst_;
  const Graph& h = inst.hardware;
  const int n = inst.n();
  const int T = tm.T_;
  const auto& conns = inst.connections();
  const int nc = static_cast<int>(conns.size());
  auto& m = tm.model_;

  if (variant == ModelVariant::YEQ || variant == ModelVariant::YIEQ) {
    tm.y_.assign(static_cast<std::size_t>(T) * nc * tm.arcs_.size(), -1);
    for (int t = 1; t <= T; ++t) {
      for (int c = 0; c < nc; ++c) {
        const auto [p, q] = conns[c];
        for (std::size_t a = 0; a < tm.arcs_.size(); ++a) {
          auto [i, j] = tm.arcs_[a];
          if (i == j) continue;
          tm.y_[(static_cast<std::size_t>(t - 1) * nc + c) * tm.arcs_.size() +
                a] = m.add_binary(idx_name("y", {t, p, q, i, j}));
        }
      }
    }
    for (int c = 0; c < nc; ++c) {
      const auto [p, q] = conns[c];
      std::vector<Term> r;
      for (int t = 1; t <= T; ++t)
        for (auto [i, j] : tm.arcs_)
          if (i != j) r.push_back({tm.y(t, c, i, j), 1.0});
      m.add_row(idx_name("cover", {p, q}), std::move(r), Sense::GreaterEqual,
                1.0);
    }
    for (int t = 1; t <= T; ++t) {
      for (int c = 0; c < nc; ++c) {
        const auto [p, q] = conns[c];
        if (variant == ModelVariant::YEQ) {
          for (auto [i, j] : tm.arcs_) {
            if (i == j) continue;
            const int y = tm.y(t, c, i, j);
            m.add_row(idx_name("mcp", {t, p, q, i, j}),
                      {{y, 1.0}, {tm.w(t, p, i), -1.0}}, Sense::LessEqual, 0.0);
            m.add_row(idx_name("mcq", {t, p, q, i, j}),
                      {{y, 1.0}, {tm.w(t, q, j), -1.0}}, Sense::LessEqual, 0.0);
            m.add_row(idx_name("mcl", {t, p, q, i, j}),
                      {{y, 1.0}, {tm.w(t, p, i), -1.0}, {tm.w(t, q, j), -1.0}},
                      Sense::GreaterEqual, -1.0);
          }
        } else {
          for (int i = 0; i < n; ++i) {
            std::vector<Term> rp{{tm.w(t, p, i), -1.0}};
            std::vector<Term> rq{{tm.w(t, q, i), -1.0}};
            for (int j : h.neighbors(i)) {
              rp.push_back({tm.y(t, c, i, j), 1.0});
              rq.push_back({tm.y(t, c, j, i), 1.0});
            }
            m.add_row(idx_name("rltp", {t, p, q, i}), std::move(rp),
                      Sense::LessEqual, 0.0);
            m.add_row(idx_name("rltq", {t, p, q, i}), std::move(rq),
                      Sense::LessEqual, 0.0);
          }
        }
      }
    }
    return;
  }

  for (int t = 1; t <= T; ++t)
    for (int c = 0; c < nc; ++c)
      tm.z_.push_back(
          m.add_binary(idx_name("z", {t, conns[c].u, conns[c].v})));
  for (int c = 0; c < nc; ++c) {
    std::vector<Term> r;
    for (int t = 1; t <= T; ++t) r.push_back({tm.z(t, c), 1.0});
    m.add_row(idx_name("cover", {conns[c].u, conns[c].v}), std::move(r),
              Sense::GreaterEqual, 1.0);
  }
  const auto blocks = polytope::block_covering_constraints(
      h, variant == ModelVariant::ZEQ, true);
  for (int t = 1; t <= T; ++t) {
    for (int c = 0; c < nc; ++c) {
      const auto [p, q] = conns[c];
      for (const auto& b : blocks) {
        std::vector<Term> r;
        for (int j = 0; j < n; ++j) {
          if (b.x[j] != 0.0) r.push_back({tm.w(t, p, j), b.x[j]});
          if (b.y[j] != 0.0) r.push_back({tm.w(t, q, j), b.y[j]});
        }
        r.push_back({tm.z(t, c), b.z});
        m.add_row(idx_name(b.family.c_str(), {t, p, q, b.node}), std::move(r),
                  b.sense, b.rhs);
      }
    }
  }
}

TmpModel build_model(const TmpInstance& inst, int bijections,
                     ModelVariant variant) {
  TmpModel tm = build_base(inst, bijections);
  add_gate_constraints(tm, variant);
  return tm;
}

TmpModel build_zopt(const TmpInstance& inst, int T) {
  TmpModel tm = build_model(inst, T, ModelVariant::ZIEQ);
  auto& m = tm.model_;
  const int n = inst.n();
  const auto& conns = inst.connections();
  m.clear_objective();
  for (int t = 1; t < T; ++t)
    tm.s_.push_back(m.add_binary(idx_name("s", {t}), 1.0));
  for (int t = 1; t < T; ++t) {
    std::vector<Term> r;
    for (int p = 0; p < n; ++p)
      for (auto [i, j] : tm.arcs_)
        if (i != j) r.push_back({tm.x(t, p, i, j), 1.0});
    r.push_back({tm.s(t), -2.0});
    m.add_row(idx_name("pairs", {t}), std::move(r), Sense::Equal, 0.0);
  }
  for (int t = 1; t + 1 < T; ++t) {
    m.add_row(idx_name("mono", {t}), {{tm.s(t + 1), 1.0}, {tm.s(t), -1.0}},
              Sense::LessEqual, 0.0);
  }
  for (int t = 1; t < T; ++t) {
    for (std::size_t c = 0; c < conns.size(); ++c) {
      m.add_row(idx_name("late", {t, conns[c].u, conns[c].v}),
                {{tm.z(t + 1, static_cast<int>(c)), 1.0}, {tm.s(t), -1.0}},
                Sense::LessEqual, 0.0);
    }
  }
  return tm;
}

namespace {

struct AutomorphismSearch {
  const Graph& h;
  const std::vector<int>& color;
  std::vector<int> order;
  std::vector<int> map;
  std::vector<char> used;

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    const int a = order[k];
    if (map[a] >= 0) return extend(k + 1);
    for (int b = 0; b < h.node_count(); ++b) {
      if (used[b] || color[b] != color[a]) continue;
      bool ok = true;
      for (std::size_t l = 0; l < k && ok; ++l) {
        const int c = order[l];
        ok = h.has_edge(a, c) == h.has_edge(b, map[c]);
      }
      if (!ok) continue;
      map[a] = b;
      used[b] = 1;
      if (extend(k + 1)) return true;
      map[a] = -1;
      used[b] = 0;
    }
    return false;
  }
};

/** Colour refinement; equal final colours are necessary for similarity. */
std::vector<int> refine_colors(const Graph& h) {
  const int n = h.node_count();
  std::vector<int> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> sig;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int w : h.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      auto key = std::make_pair(color[v], std::move(nb));
      auto it = sig.emplace(std::move(key), static_cast<int>(sig.size())).first;
      next[v] = it->second;
    }
    if (sig.size() == static_cast<std::size_t>(
                          *std::max_element(color.begin(), color.end()) + 1)) {
      color = next;
      break;
    }
    color = next;
  }
  return color;
}

}  // namespace

std::vector<int> orbit_representatives(const Graph& h) {
  const int n = h.node_count();
  const std::vector<int> color = refine_colors(h);
  std::vector<int> orbit(n, -1);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    if (orbit[v] >= 0) continue;
    orbit[v] = v;
    reps.push_back(v);
    for (int w = v + 1; w < n; ++w) {
      if (orbit[w] >= 0 || color[w] != color[v]) continue;
      AutomorphismSearch s{h, color, {}, std::vector<int>(n, -1),
                           std::vector<char>(n, 0)};
      // Map v -> w first, then the rest in BFS order from v.
      s.order.push_back(v);
      std::vector<char> seen(n, 0);
      seen[v] = 1;
      for (std::size_t k = 0; k < s.order.size(); ++k)
        for (int u : h.neighbors(s.order[k]))
          if (!seen[u]) {
            seen[u] = 1;
            s.order.push_back(u);
          }
      for (int u = 0; u < n; ++u)
        if (!seen[u]) s.order.push_back(u);
      s.map[v] = w;
      s.used[w] = 1;
      if (s.extend(1)) orbit[w] = v;
    }
  }
  return reps;
}

void add_hardware_symmetry(TmpModel& tm, int token) {
  const TmpInstance& inst = tm.instance();
  const int n = inst.n();
  const int T = tm.bijections();
  const int k = middle_bijection(T);
  const auto reps = orbit_representatives(inst.hardware);
  const auto dist = inst.hardware.distances();
  auto& m = tm.model();
  std::vector<Term> r;
  for (int i : reps) r.push_back({tm.w(k, token, i), 1.0});
  m.add_row(idx_name("orbit", {k, token}), std::move(r), Sense::Equal, 1.0);
  for (int t = 1; t <= T; ++t) {
    for (int j = 0; j < n; ++j) {
      int nearest = -1;
      for (int i : reps) {
        if (dist[i][j] >= 0 && (nearest < 0 || dist[i][j] < nearest)) {
          nearest = dist[i][j];
        }
      }
      if (nearest < 0 || nearest >= 1 + std::abs(k - t)) {
        m.fix(tm.w(t, token, j), 0.0);
      }
    }
  }
}

void add_complete_A_fixing(TmpModel& tm, const TokenPlacement& f) {
  const TmpInstance& inst = tm.instance();
  if (!inst.algorithm.is_complete()) {
    throw InputError("placement fixing requires a complete algorithm graph");
  }
  const int n = inst.n();
  if (f.size() != n) throw InputError("placement size mismatch");
  const int T = tm.bijections();
  const int k = middle_bijection(T);
  const auto dist = inst.hardware.distances();
  auto& m = tm.model();
  for (int p = 0; p < n; ++p) {
    m.fix(tm.w(k, p, f.node_of(p)), 1.0);
    for (int t = 1; t <= T; ++t) {
      for (int j = 0; j < n; ++j) {
        const int d = dist[f.node_of(p)][j];
        if (d < 0 || d >= 1 + std::abs(k - t)) m.fix(tm.w(t, p, j), 0.0);
      }
    }
  }
}

SwapSolution decode(const TmpModel& tm, const std::vector<double>& values) {
  const TmpInstance& inst = tm.instance();
  const Graph& h = inst.hardware;
  const int n = inst.n();
  const int T = tm.bijections();
  if (static_cast<int>(values.size()) != tm.model().num_variables()) {
    throw DecodeError("value vector has wrong length");
  }
  std::vector<TokenPlacement> f;
  for (int t = 1; t <= T; ++t) {
    std::vector<int> nodes(n, -1);
    for (int p = 0; p < n; ++p) {
      for (int i = 0; i < n; ++i) {
        if (values[tm.w(t, p, i)] > 0.5) {
          if (nodes[p] >= 0) {
            throw DecodeError("token " + std::to_string(p) +
                              " on two nodes at placement " +
                              std::to_string(t));
          }
          nodes[p] = i;
        }
      }
    }
    try {
      f.emplace_back(std::move(nodes));
    } catch (const InputError&) {
      throw DecodeError("placement " + std::to_string(t) +
                        " is not a bijection");
    }
  }
  SwapSolution sol{f.front(), {}};
  for (int t = 1; t < T; ++t) {
    std::map<Edge, int> crossings;
    for (int p = 0; p < n; ++p) {
      for (auto [i, j] : tm.closed_arcs()) {
        if (i == j || values[tm.x(t, p, i, j)] <= 0.5) continue;
        if (f[t - 1].node_of(p) != i || f[t].node_of(p) != j) {
          throw DecodeError("movement disagrees with placements at step " +
                            std::to_string(t));
        }
        ++crossings[Edge(i, j)];
      }
    }
    Matching mt;
    for (auto [e, count] : crossings) {
      if (count != 2) {
        throw DecodeError("non-matching pattern at step " + std::to_string(t));
      }
      mt.push_back(e);
    }
    if (!is_matching_in(h, mt) || apply_matching(h, f[t - 1], mt) != f[t]) {
      throw DecodeError("non-matching pattern at step " + std::to_string(t));
    }
    sol.matchings.push_back(std::move(mt));
  }
  return sol;
}

}  // namespace qroute
