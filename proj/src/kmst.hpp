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

#include <string>
#include <utility>
#include <vector>

#include "encoding.hpp"
#include "graph.hpp"
#include "layout.hpp"
#include "qubo.hpp"

namespace stq {

// Model plus the labelled parts it was summed from. The part-wise view backs
// the energy-identity checker and the constraint-separation tests.
struct BuildResult {
    QuboModel model;
    VariableLayout layout;
    std::vector<std::pair<std::string, QuboModel>> fragments;
};

// Minimum-weight tree on exactly k of the graph's vertices. Disconnected
// graphs are accepted: a connected k-subset may still exist, and
// infeasibility shows up as an invalid decode after solving.
struct KmstSpec {
    Graph graph;
    int k;
    PenaltyWeights weights;
};

// k in [1, n]; constraint weight defaults to default_constraint_weight.
KmstSpec make_kmst_spec(Graph graph, int k, double objective_weight = 1.0,
                        double constraint_weight = 0.0);

// Closed-form variable count: 2nk - n.
long long kmst_variable_count(int n, int k);

// Placements over k positions, attachments over k-1. A valid encoding of a
// k-vertex tree has energy objective_weight * tree weight; for k = 1 the
// attachment block is empty and the ground energy is 0.
BuildResult build_kmst(const KmstSpec& spec);

} // namespace stq
