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

#include "mlst.hpp"

#include <stdexcept>

namespace stq {

MlstSpec make_mlst_spec(Graph graph, LeafObjective objective, double objective_weight,
                        double constraint_weight) {
    if (graph.num_vertices() < 2)
        throw std::invalid_argument("leaf objectives need at least 2 vertices");
    if (!graph.is_connected()) throw std::invalid_argument("graph is not connected");
    if (constraint_weight <= 0.0)
        constraint_weight = default_constraint_weight(graph, objective_weight, /*weighted=*/false);
    PenaltyWeights w{constraint_weight, objective_weight};
    w.validate();
    return MlstSpec{std::move(graph), objective, w};
}

namespace {

int floor_log2(int value) {
    int log = 0;
    while ((1 << (log + 1)) <= value) ++log;
    return log;
}

} // namespace

LeafTower make_leaf_tower(int n) {
    if (n < 2) throw std::invalid_argument("leaf tower needs n >= 2");
    LeafTower tower;
    tower.width_caps.push_back(n - 1);
    do {
        tower.width_caps.push_back(floor_log2(1 + tower.width_caps.back()));
    } while (tower.width_caps.back() > 1);
    return tower;
}

int LeafTower::bits_per_position() const {
    int bits = 0;
    for (int d = 1; d <= depth(); ++d) bits += width_caps[static_cast<size_t>(d)] + 1;
    return bits;
}

std::vector<CounterLevel> LeafTower::levels() const {
    std::vector<CounterLevel> levels;
    for (int d = 1; d <= depth(); ++d) {
        CounterLevel level;
        level.depth = d;
        const int width = width_caps[static_cast<size_t>(d)];
        level.bits = width + 1;
        level.cap = width_caps[static_cast<size_t>(d - 1)];
        level.remainder_coeff = static_cast<double>(level.cap + 1 - (1 << width));
        levels.push_back(level);
    }
    return levels;
}

long long mlst_variable_count(int n) {
    const long long tower_bits = make_leaf_tower(n).bits_per_position();
    return 2LL * n * n - n + tower_bits * n - tower_bits;
}

BuildResult build_mlst(const MlstSpec& spec) {
    const int n = spec.graph.num_vertices();
    if (n < 2) throw std::invalid_argument("leaf objectives need at least 2 vertices");
    if (!spec.graph.is_connected()) throw std::invalid_argument("graph is not connected");
    spec.weights.validate();

    const LeafTower tower = make_leaf_tower(n);
    VariableLayout layout(n, n, n - 1, tower.levels());
    const int total = layout.total();
    const int top = tower.depth() - 1; // level index of the two-bit top

    // 1 + sum of per-position leaf tests (1 - top_bit1)(1 - top_bit0),
    // negated when leaves are rewarded instead of priced.
    QuboModel leaf_count(total);
    const double sign = spec.objective == LeafObjective::Minimize ? 1.0 : -1.0;
    leaf_count.add_offset(sign * spec.weights.objective);
    for (int s = 0; s + 1 < n; ++s) {
        const int bit0 = layout.counter_index(top, s, 0);
        const int bit1 = layout.counter_index(top, s, 1);
        leaf_count.add_offset(sign * spec.weights.objective);
        leaf_count.add_term(bit0, -sign * spec.weights.objective);
        leaf_count.add_term(bit1, -sign * spec.weights.objective);
        leaf_count.add_term(bit0, bit1, sign * spec.weights.objective);
    }

    QuboModel nonedge(total);
    add_nonedge_penalties(nonedge, layout, spec.graph, spec.weights, n - 1);
    QuboModel permutation(total);
    add_permutation_constraints_exact(permutation, layout, spec.weights);
    QuboModel connection(total);
    add_connection_constraints(connection, layout, spec.weights, ConnectionVariant::Full);

    // Level 1 counts degree - 1 at each position: the root's attachment count
    // less one, the plain attachment count elsewhere (those vertices carry an
    // attachment of their own). Deeper levels count the set bits below them.
    QuboModel counters(total);
    for (int s = 0; s + 1 < n; ++s) {
        LinearExpr level1 = layout.counter_value_expr(0, s);
        if (s == 0) level1.add_constant(1.0);
        for (int v = 0; v < n; ++v) level1.add_term(layout.attachment_index(v, s), -1.0);
        counters.add_penalty_square(level1, spec.weights.constraint);
        for (int d = 1; d <= top; ++d) {
            LinearExpr chain = layout.counter_value_expr(d, s);
            const CounterLevel& below = layout.counter_levels()[static_cast<size_t>(d - 1)];
            for (int j = 0; j < below.bits; ++j)
                chain.add_term(layout.counter_index(d - 1, s, j), -1.0);
            counters.add_penalty_square(chain, spec.weights.constraint);
        }
    }

    QuboModel model(total);
    model.add_model(leaf_count);
    model.add_model(nonedge);
    model.add_model(permutation);
    model.add_model(connection);
    model.add_model(counters);
    model.finalize();
    leaf_count.finalize();
    nonedge.finalize();
    permutation.finalize();
    connection.finalize();
    counters.finalize();

    BuildResult result{std::move(model), layout, {}};
    result.fragments.emplace_back("leaf-count", std::move(leaf_count));
    result.fragments.emplace_back("invalid-edge", std::move(nonedge));
    result.fragments.emplace_back("permutation", std::move(permutation));
    result.fragments.emplace_back("connection", std::move(connection));
    result.fragments.emplace_back("leaf-counter", std::move(counters));
    return result;
}

int leaf_count_from_tower(const VariableLayout& layout, const Assignment& a) {
    const int top = static_cast<int>(layout.counter_levels().size()) - 1;
    int count = 1; // the vertex at the last position is always a leaf
    for (int s = 0; s < layout.counter_positions(); ++s) {
        const bool bit0 = a[static_cast<size_t>(layout.counter_index(top, s, 0))];
        const bool bit1 = a[static_cast<size_t>(layout.counter_index(top, s, 1))];
        if (!bit0 && !bit1) ++count;
    }
    return count;
}

} // namespace stq
