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

enum class LeafObjective { Minimize, Maximize };

// Spanning tree with the fewest (or most) degree-1 vertices. Unweighted:
// edge weights in the input are ignored.
struct MlstSpec {
    Graph graph; // must be connected, n >= 2
    LeafObjective objective;
    PenaltyWeights weights;
};

MlstSpec make_mlst_spec(Graph graph, LeafObjective objective, double objective_weight = 1.0,
                        double constraint_weight = 0.0);

// Stack of per-position counters whose widths shrink like the iterated
// logarithm. Level 1 counts degree - 1 of the vertex at a position; level
// d > 1 counts the set bits of level d - 1. The top level always has exactly
// two bits, so "both top bits clear" tests the position for a leaf.
//
// width_caps[0] = n - 1, width_caps[d] = floor(log2(1 + width_caps[d-1]));
// depth is the smallest d >= 1 with width_caps[d] <= 1 (forced to at least
// 1 so the two-bit top level exists even for n = 2).
struct LeafTower {
    std::vector<int> width_caps; // indices 0..depth
    int depth() const { return static_cast<int>(width_caps.size()) - 1; }
    int bits_per_position() const; // sum over levels of (width_caps[d] + 1)
    std::vector<CounterLevel> levels() const;
};

LeafTower make_leaf_tower(int n);

// Closed-form variable count with L = tower bits per position:
// 2n^2 - n + Ln - L.
long long mlst_variable_count(int n);

// The objective fragment prices 1 + sum over positions 0..n-2 of the two-bit
// leaf test (the last position is always a leaf); the sign flips for
// Maximize. Valid encodings with consistent counters have energy
// +/- objective_weight * leaf count.
BuildResult build_mlst(const MlstSpec& spec);

// The objective fragment's count: 1 plus the two-bit tests, read from the
// top-level counter bits. Equals the decoded tree's leaf count on
// counter-consistent assignments.
int leaf_count_from_tower(const VariableLayout& layout, const Assignment& a);

} // namespace stq
