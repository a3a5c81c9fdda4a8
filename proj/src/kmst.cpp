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

#include "kmst.hpp"

#include <stdexcept>

namespace stq {

KmstSpec make_kmst_spec(Graph graph, int k, double objective_weight, double constraint_weight) {
    if (k < 1 || k > graph.num_vertices())
        throw std::invalid_argument("k must be between 1 and the vertex count");
    if (constraint_weight <= 0.0)
        constraint_weight = default_constraint_weight(graph, objective_weight, /*weighted=*/true);
    PenaltyWeights w{constraint_weight, objective_weight};
    w.validate();
    return KmstSpec{std::move(graph), k, w};
}

long long kmst_variable_count(int n, int k) { return 2LL * n * k - n; }

BuildResult build_kmst(const KmstSpec& spec) {
    const int n = spec.graph.num_vertices();
    const int k = spec.k;
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    spec.weights.validate();

    VariableLayout layout(n, k, 0, {});
    const int total = layout.total();

    QuboModel edge_cost(total);
    add_edge_cost_terms(edge_cost, layout, spec.graph, spec.weights, k - 1);
    QuboModel permutation(total);
    add_permutation_constraints_kcard(permutation, layout, spec.weights);
    QuboModel connection(total);
    add_connection_constraints(connection, layout, spec.weights, ConnectionVariant::kCardinality);

    QuboModel model(total);
    model.add_model(edge_cost);
    model.add_model(permutation);
    model.add_model(connection);
    model.finalize();
    edge_cost.finalize();
    permutation.finalize();
    connection.finalize();

    BuildResult result{std::move(model), layout, {}};
    result.fragments.emplace_back("edge-cost", std::move(edge_cost));
    result.fragments.emplace_back("permutation", std::move(permutation));
    result.fragments.emplace_back("connection", std::move(connection));
    return result;
}

} // namespace stq
