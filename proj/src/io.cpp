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

#include "qroute/io.hpp"

#include <fstream>
#include <sstream>

namespace qroute {

namespace {

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::vector<Edge> edges_from(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InputError(std::string(what) + " entries must be [u, v] pairs");
    }
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a == b) throw InputError("self-loop on node " + std::to_string(a));
    out.emplace_back(a, b);
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

TokenPlacement placement_from(const json& j) {
  if (!j.is_array()) throw InputError("'initial' must be an array");
  std::vector<int> nodes;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("'initial' must hold ints");
    nodes.push_back(v.get<int>());
  }
  return TokenPlacement(std::move(nodes));
}

}  // namespace

json to_json(const Graph& g) {
  json j;
  j["n"] = g.node_count();
  j["edges"] = edges_json(g.edges());
  return j;
}

json to_json(const TmpInstance& inst) {
  json j;
  j["hardware"] = to_json(inst.hardware);
  j["algorithm"] = to_json(inst.algorithm);
  return j;
}

json to_json(const SwapSolution& sol) {
  json j;
  j["initial"] = sol.initial.nodes();
  json ms = json::array();
  for (const auto& m : sol.matchings) ms.push_back(edges_json(m));
  j["matchings"] = ms;
  return j;
}

json to_json(const RoutedCircuit& rc) {
  json j;
  j["initial"] = rc.initial.nodes();
  json layers = json::array();
  for (const auto& l : rc.layers) {
    json lj;
    lj["swaps"] = edges_json(l.swaps);
    lj["gates"] = edges_json(l.gates);
    layers.push_back(lj);
  }
  j["layers"] = layers;
  return j;
}

Graph graph_from_json(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) {
    throw InputError("'n' must be a positive integer");
  }
  return Graph(n.get<int>(), edges_from(field(j, "edges"), "'edges'"));
}

TmpInstance instance_from_json(const json& j) {
  return TmpInstance(graph_from_json(field(j, "hardware")),
                     graph_from_json(field(j, "algorithm")));
}

SwapSolution solution_from_json(const json& j) {
  SwapSolution sol;
  sol.initial = placement_from(field(j, "initial"));
  const json& ms = field(j, "matchings");
  if (!ms.is_array()) throw InputError("'matchings' must be an array");
  for (const auto& m : ms) sol.matchings.push_back(edges_from(m, "matching"));
  return sol;
}

RoutedCircuit circuit_from_json(const json& j) {
  RoutedCircuit rc;
  rc.initial = placement_from(field(j, "initial"));
  const json& ls = field(j, "layers");
  if (!ls.is_array()) throw InputError("'layers' must be an array");
  for (const auto& l : ls) {
    CircuitLayer layer;
    layer.swaps = edges_from(field(l, "swaps"), "'swaps'");
    layer.gates = edges_from(field(l, "gates"), "'gates'");
    rc.layers.push_back(std::move(layer));
  }
  return rc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace qroute
