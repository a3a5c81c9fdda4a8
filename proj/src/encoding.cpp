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

#include "encoding.hpp"

#include <stdexcept>

namespace stq {

void PenaltyWeights::validate() const {
    if (!(constraint > 0.0) || !(objective > 0.0))
        throw std::invalid_argument("penalty weights must be positive");
}

double default_constraint_weight(const Graph& g, double objective_weight, bool weighted) {
    if (!(objective_weight > 0.0))
        throw std::invalid_argument("objective weight must be positive");
    const double n = static_cast<double>(g.num_vertices());
    if (!weighted) return objective_weight * n + 1.0;
    const double max_w = g.num_edges() > 0 ? g.max_weight() : 0.0;
    return objective_weight * n * max_w + 1.0;
}

void add_edge_cost_terms(QuboModel& m, const VariableLayout& layout, const Graph& g,
                         const PenaltyWeights& w, int upto) {
    if (upto > layout.num_positions() - 1)
        throw std::invalid_argument("edge cost terms: upto exceeds attachment positions");
    for (const Edge& e : g.edges()) {
        for (int p = 0; p < upto; ++p) {
            m.add_term(layout.placement_index(e.u, p), layout.attachment_index(e.v, p),
                       w.objective * e.weight);
            m.add_term(layout.placement_index(e.v, p), layout.attachment_index(e.u, p),
                       w.objective * e.weight);
        }
    }
    add_nonedge_penalties(m, layout, g, w, upto);
}

void add_nonedge_penalties(QuboModel& m, const VariableLayout& layout, const Graph& g,
                           const PenaltyWeights& w, int upto) {
    const int n = layout.num_vertices();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v || g.has_edge(u, v)) continue;
            for (int p = 0; p < upto; ++p)
                m.add_term(layout.placement_index(u, p), layout.attachment_index(v, p),
                           w.constraint);
        }
    }
}

void add_permutation_constraints_exact(QuboModel& m, const VariableLayout& layout,
                                       const PenaltyWeights& w) {
    const int n = layout.num_vertices();
    if (layout.num_positions() != n)
        throw std::invalid_argument("exact permutation constraints need positions == n");
    for (int v = 0; v < n; ++v) {
        LinearExpr once(1.0);
        for (int p = 0; p < n; ++p) once.add_term(layout.placement_index(v, p), -1.0);
        m.add_penalty_square(once, w.constraint);
    }
    for (int p = 0; p < n; ++p) {
        LinearExpr filled(1.0);
        for (int v = 0; v < n; ++v) filled.add_term(layout.placement_index(v, p), -1.0);
        m.add_penalty_square(filled, w.constraint);
    }
}

void add_permutation_constraints_kcard(QuboModel& m, const VariableLayout& layout,
                                       const PenaltyWeights& w) {
    const int n = layout.num_vertices();
    const int k = layout.num_positions();
    // two vertices in one position
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            for (int p = 0; p < k; ++p)
                m.add_term(layout.placement_index(u, p), layout.placement_index(v, p),
                           w.constraint);
    // one vertex in two positions
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
            for (int v = 0; v < n; ++v)
                m.add_term(layout.placement_index(v, p), layout.placement_index(v, q),
                           w.constraint);
    // every position occupied by exactly one vertex (overlaps the first family)
    for (int p = 0; p < k; ++p) {
        LinearExpr filled(1.0);
        for (int v = 0; v < n; ++v) filled.add_term(layout.placement_index(v, p), -1.0);
        m.add_penalty_square(filled, w.constraint);
    }
}

void add_connection_constraints(QuboModel& m, const VariableLayout& layout,
                                const PenaltyWeights& w, ConnectionVariant variant) {
    const int n = layout.num_vertices();
    const int positions = layout.num_positions();
    // attaching to one's own position or later
    for (int v = 0; v < n; ++v)
        for (int p = 1; p < positions; ++p)
            for (int q = p; q < positions - 1; ++q)
                m.add_term(layout.placement_index(v, p), layout.attachment_index(v, q),
                           w.constraint);
    // exactly one attachment for every vertex beyond position 0
    for (int v = 0; v < n; ++v) {
        LinearExpr parent;
        if (variant == ConnectionVariant::kCardinality) {
            for (int p = 1; p < positions; ++p) parent.add_term(layout.placement_index(v, p), 1.0);
        } else {
            parent.add_constant(1.0).add_term(layout.placement_index(v, 0), -1.0);
        }
        for (int q = 0; q < positions - 1; ++q)
            parent.add_term(layout.attachment_index(v, q), -1.0);
        m.add_penalty_square(parent, w.constraint);
    }
}

PermutationDecode decode_permutation(const VariableLayout& layout, const Assignment& a) {
    const int n = layout.num_vertices();
    const int positions = layout.num_positions();
    PermutationDecode result;
    result.vertex_at.assign(static_cast<size_t>(positions), -1);
    result.parent_position.assign(static_cast<size_t>(positions), -1);
    result.position_of.assign(static_cast<size_t>(n), -1);

    auto fail = [&result](std::string reason) {
        result.ok = false;
        result.reason = std::move(reason);
        return result;
    };

    for (int p = 0; p < positions; ++p) {
        int found = -1;
        for (int v = 0; v < n; ++v) {
            if (!a[static_cast<size_t>(layout.placement_index(v, p))]) continue;
            if (found >= 0) return fail("multiple vertices at position " + std::to_string(p + 1));
            found = v;
        }
        if (found < 0) return fail("empty position " + std::to_string(p + 1));
        if (result.position_of[static_cast<size_t>(found)] >= 0)
            return fail("vertex " + std::to_string(found + 1) + " placed at multiple positions");
        result.vertex_at[static_cast<size_t>(p)] = found;
        result.position_of[static_cast<size_t>(found)] = p;
    }

    for (int v = 0; v < n; ++v) {
        int attach = -1;
        int attach_count = 0;
        for (int q = 0; q < positions - 1; ++q) {
            if (a[static_cast<size_t>(layout.attachment_index(v, q))]) {
                attach = q;
                ++attach_count;
            }
        }
        const int p = result.position_of[static_cast<size_t>(v)];
        if (p < 0) {
            if (attach_count > 0)
                return fail("absent vertex " + std::to_string(v + 1) + " has attachment bits");
            continue;
        }
        if (p == 0) {
            if (attach_count > 0)
                return fail("vertex " + std::to_string(v + 1) +
                            " attaches at or after its own position");
            continue;
        }
        if (attach_count == 0)
            return fail("vertex " + std::to_string(v + 1) + " has no attachment bit");
        if (attach_count > 1)
            return fail("vertex " + std::to_string(v + 1) + " has multiple attachment bits");
        if (attach >= p)
            return fail("vertex " + std::to_string(v + 1) +
                        " attaches at or after its own position");
        result.parent_position[static_cast<size_t>(p)] = attach;
    }

    result.ok = true;
    return result;
}

} // namespace stq
