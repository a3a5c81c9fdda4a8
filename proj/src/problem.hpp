// Copyright 2026 the stqubo developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <optional>
#include <variant>

#include "dcmst.hpp"
#include "kmst.hpp"
#include "mlst.hpp"

namespace stq {

using ProblemSpec = std::variant<KmstSpec, DcmstSpec, MlstSpec>;

BuildResult build(const ProblemSpec& spec);
const Graph& graph_of(const ProblemSpec& spec);
PenaltyWeights weights_of(const ProblemSpec& spec);
long long variable_count_formula(const ProblemSpec& spec);
// "kmst", "dcmst", "minleaf" or "maxleaf"
std::string problem_name(const ProblemSpec& spec);

// Assignment bits for a concrete solution: `order` lists the vertex at each
// position, `parent_position[p]` the earlier position the vertex at p
// attaches to (-1 at position 0). Counter bits are filled canonically from
// the attachment counts; returns nullopt when a counter value is out of
// range (e.g. a degree above the bound).
std::optional<Assignment> encode_solution(const ProblemSpec& spec, const VariableLayout& layout,
                                          const std::vector<int>& order,
                                          const std::vector<int>& parent_position);

// Sidecar JSON describing the variable layout (1-based vertex/position/depth
// labels, 0-based bit index), so externally produced samples can be decoded.
std::string layout_json(const ProblemSpec& spec, const VariableLayout& layout);

} // namespace stq
