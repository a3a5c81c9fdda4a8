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

#include "kmst.hpp"

namespace stq {

// Minimum spanning tree with every vertex degree at most max_degree.
struct DcmstSpec {
    Graph graph; // must be connected
    int max_degree;
    PenaltyWeights weights;
};

DcmstSpec make_dcmst_spec(Graph graph, int max_degree, double objective_weight = 1.0,
                          double constraint_weight = 0.0);

// Closed-form variable count with M = floor(log2 max_degree):
// 2n^2 + nM - (M + 1).
long long dcmst_variable_count(int n, int max_degree);

// Degree-counter level storing values 0..max_degree in M+1 bits.
CounterLevel degree_counter_level(int max_degree);

// One degree counter per position 0..n-2; the counter equals the full degree
// of the vertex there (the root's at position 0, attachments plus one
// elsewhere). The vertex at the last position is necessarily a leaf, so it
// needs no counter. Valid encodings of degree-feasible spanning trees have
// energy objective_weight * tree weight.
BuildResult build_dcmst(const DcmstSpec& spec);

} // namespace stq
