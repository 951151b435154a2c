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

#include <json.hpp>
#include <string>

#include "qroute/instance.hpp"

namespace qroute {

using json = nlohmann::ordered_json;

// Graph:     {"n": 4, "edges": [[0,1],[1,2]]}
// Instance:  {"hardware": Graph, "algorithm": Graph}
// Solution:  {"initial": [node of token 0, ...], "matchings": [[[u,v],..],..]}
// Circuit:   {"initial": [...], "layers": [{"swaps": [...], "gates": [...]}]}

json to_json(const Graph& g);
json to_json(const TmpInstance& inst);
json to_json(const SwapSolution& sol);
json to_json(const RoutedCircuit& rc);

Graph graph_from_json(const json& j);
TmpInstance instance_from_json(const json& j);
SwapSolution solution_from_json(const json& j);
RoutedCircuit circuit_from_json(const json& j);

/** Reads and parses a JSON file; InputError on failure. */
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qroute
