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

#include "graph.hpp"
#include "layout.hpp"
#include "qubo.hpp"

namespace stq {

// constraint: coefficient on every constraint-violation term, chosen large
// enough that no infeasible assignment can be a ground state.
// objective: scale of the problem objective.
struct PenaltyWeights {
    double constraint = 1.0; // lambda_A
    double objective = 1.0;  // lambda_B

    void validate() const;
};

// Smallest safe constraint weight plus a margin of 1: for weighted objectives
// objective_weight * n * max_weight + 1, for unweighted (leaf counting)
// objective_weight * n + 1.
double default_constraint_weight(const Graph& g, double objective_weight, bool weighted);

// Edge pricing over positions 0..upto-1 (upto <= positions - 1). For every
// graph edge {u, v} both orientations placement(u,p)*attachment(v,p) and
// placement(v,p)*attachment(u,p) are priced at objective * weight; exactly
// one orientation is active per tree edge in a valid encoding. Also adds the
// non-edge penalties of add_nonedge_penalties.
void add_edge_cost_terms(QuboModel& m, const VariableLayout& layout, const Graph& g,
                         const PenaltyWeights& w, int upto);

// constraint * placement(u,p) * attachment(v,p) for every ordered pair
// (u, v), u != v, that is not a graph edge. Pairs (u, u) are left to the
// precedence penalty, which already forbids attaching to one's own position.
void add_nonedge_penalties(QuboModel& m, const VariableLayout& layout, const Graph& g,
                           const PenaltyWeights& w, int upto);

// Full-permutation one-hot constraints (positions == n): every vertex in
// exactly one position and every position holding exactly one vertex, both
// as squared penalties. Zero exactly on permutation matrices.
void add_permutation_constraints_exact(QuboModel& m, const VariableLayout& layout,
                                       const PenaltyWeights& w);

// Cardinality-k variant (positions == k <= n), three term families: pairwise
// same-position products, pairwise same-vertex products, and the squared
// exactly-one-vertex-per-position penalty. The pairwise same-position family
// overlaps the squared family; the redundancy is kept as formulated.
void add_permutation_constraints_kcard(QuboModel& m, const VariableLayout& layout,
                                       const PenaltyWeights& w);

enum class ConnectionVariant {
    kCardinality, // absent vertices allowed: attachments sum must match placements beyond position 0
    Full          // every vertex placed: exactly one attachment unless at position 0
};

// Precedence penalty constraint * placement(u,p) * attachment(u,q) for q >= p
// (attaching at or after one's own position is forbidden), plus the
// variant-appropriate exactly-one-attachment squared penalty.
void add_connection_constraints(QuboModel& m, const VariableLayout& layout,
                                const PenaltyWeights& w, ConnectionVariant variant);

// Structural reading of the placement/attachment bits. Invalidity is a value,
// not an error; `reason` holds the first violation found (1-based labels).
struct PermutationDecode {
    bool ok = false;
    std::string reason;
    std::vector<int> vertex_at;       // position -> vertex
    std::vector<int> parent_position; // position -> earlier position, -1 for position 0
    std::vector<int> position_of;     // vertex -> position, -1 when absent
};

PermutationDecode decode_permutation(const VariableLayout& layout, const Assignment& a);

} // namespace stq
