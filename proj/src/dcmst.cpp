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

#include "dcmst.hpp"

#include <cmath>
#include <stdexcept>

namespace stq {

DcmstSpec make_dcmst_spec(Graph graph, int max_degree, double objective_weight,
                          double constraint_weight) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be at least 1");
    if (!graph.is_connected()) throw std::invalid_argument("graph is not connected");
    if (constraint_weight <= 0.0)
        constraint_weight = default_constraint_weight(graph, objective_weight, /*weighted=*/true);
    PenaltyWeights w{constraint_weight, objective_weight};
    w.validate();
    return DcmstSpec{std::move(graph), max_degree, w};
}

namespace {

int floor_log2(int value) {
    int log = 0;
    while ((1 << (log + 1)) <= value) ++log;
    return log;
}

} // namespace

long long dcmst_variable_count(int n, int max_degree) {
    const long long m = floor_log2(max_degree);
    return 2LL * n * n + static_cast<long long>(n) * m - (m + 1);
}

CounterLevel degree_counter_level(int max_degree) {
    CounterLevel level;
    level.depth = 1;
    const int m = floor_log2(max_degree);
    level.bits = m + 1;
    level.cap = max_degree;
    level.remainder_coeff = static_cast<double>(max_degree + 1 - (1 << m));
    return level;
}

BuildResult build_dcmst(const DcmstSpec& spec) {
    const int n = spec.graph.num_vertices();
    if (spec.max_degree < 1) throw std::invalid_argument("degree bound must be at least 1");
    if (!spec.graph.is_connected()) throw std::invalid_argument("graph is not connected");
    spec.weights.validate();

    VariableLayout layout(n, n, n - 1, {degree_counter_level(spec.max_degree)});
    const int total = layout.total();

    QuboModel edge_cost(total);
    add_edge_cost_terms(edge_cost, layout, spec.graph, spec.weights, n - 1);
    QuboModel permutation(total);
    add_permutation_constraints_exact(permutation, layout, spec.weights);
    QuboModel connection(total);
    add_connection_constraints(connection, layout, spec.weights, ConnectionVariant::Full);

    // Tie each counter to the attachment count of its position. Positions
    // beyond the root carry an extra attachment of their own, so the counter
    // equals attachments + 1 there; the counter's range caps the degree.
    QuboModel degree(total);
    for (int s = 0; s + 1 < n; ++s) {
        LinearExpr expr = layout.counter_value_expr(0, s);
        if (s > 0) expr.add_constant(-1.0);
        for (int v = 0; v < n; ++v) expr.add_term(layout.attachment_index(v, s), -1.0);
        degree.add_penalty_square(expr, spec.weights.constraint);
    }

    QuboModel model(total);
    model.add_model(edge_cost);
    model.add_model(permutation);
    model.add_model(connection);
    model.add_model(degree);
    model.finalize();
    edge_cost.finalize();
    permutation.finalize();
    connection.finalize();
    degree.finalize();

    BuildResult result{std::move(model), layout, {}};
    result.fragments.emplace_back("edge-cost", std::move(edge_cost));
    result.fragments.emplace_back("permutation", std::move(permutation));
    result.fragments.emplace_back("connection", std::move(connection));
    result.fragments.emplace_back("degree-counter", std::move(degree));
    return result;
}

} // namespace stq
