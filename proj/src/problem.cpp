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

#include "problem.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace stq {

BuildResult build(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> BuildResult {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, KmstSpec>) return build_kmst(s);
            else if constexpr (std::is_same_v<T, DcmstSpec>) return build_dcmst(s);
            else return build_mlst(s);
        },
        spec);
}

const Graph& graph_of(const ProblemSpec& spec) {
    return std::visit([](const auto& s) -> const Graph& { return s.graph; }, spec);
}

PenaltyWeights weights_of(const ProblemSpec& spec) {
    return std::visit([](const auto& s) { return s.weights; }, spec);
}

long long variable_count_formula(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> long long {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, KmstSpec>)
                return kmst_variable_count(s.graph.num_vertices(), s.k);
            else if constexpr (std::is_same_v<T, DcmstSpec>)
                return dcmst_variable_count(s.graph.num_vertices(), s.max_degree);
            else
                return mlst_variable_count(s.graph.num_vertices());
        },
        spec);
}

std::string problem_name(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, KmstSpec>) return "kmst";
            else if constexpr (std::is_same_v<T, DcmstSpec>) return "dcmst";
            else return s.objective == LeafObjective::Minimize ? "minleaf" : "maxleaf";
        },
        spec);
}

std::optional<Assignment> encode_solution(const ProblemSpec& spec, const VariableLayout& layout,
                                          const std::vector<int>& order,
                                          const std::vector<int>& parent_position) {
    const int positions = layout.num_positions();
    if (static_cast<int>(order.size()) != positions ||
        static_cast<int>(parent_position.size()) != positions)
        throw std::invalid_argument("encode_solution: order length mismatch");

    Assignment a(static_cast<size_t>(layout.total()), 0);
    std::vector<int> attach_count(static_cast<size_t>(positions), 0);
    for (int p = 0; p < positions; ++p)
        a[static_cast<size_t>(layout.placement_index(order[static_cast<size_t>(p)], p))] = 1;
    for (int p = 1; p < positions; ++p) {
        const int q = parent_position[static_cast<size_t>(p)];
        if (q < 0 || q >= p) throw std::invalid_argument("encode_solution: bad parent position");
        a[static_cast<size_t>(layout.attachment_index(order[static_cast<size_t>(p)], q))] = 1;
        ++attach_count[static_cast<size_t>(q)];
    }

    if (layout.counter_levels().empty()) return a;

    const bool dcmst = std::holds_alternative<DcmstSpec>(spec);
    for (int s = 0; s < layout.counter_positions(); ++s) {
        // degree counters store the full degree; leaf counters store degree-1
        int value = attach_count[static_cast<size_t>(s)];
        if (dcmst ? (s > 0) : (s == 0)) value += dcmst ? 1 : -1;
        for (size_t level = 0; level < layout.counter_levels().size(); ++level) {
            auto bits = layout.encode_counter_value(static_cast<int>(level), value);
            if (!bits) return std::nullopt;
            int popcount = 0;
            for (int j = 0; j < static_cast<int>(bits->size()); ++j) {
                a[static_cast<size_t>(layout.counter_index(static_cast<int>(level), s, j))] =
                    (*bits)[static_cast<size_t>(j)];
                popcount += (*bits)[static_cast<size_t>(j)];
            }
            value = popcount; // the next level up counts set bits
        }
    }
    return a;
}

std::string layout_json(const ProblemSpec& spec, const VariableLayout& layout) {
    nlohmann::json doc;
    doc["problem"] = problem_name(spec);
    doc["num_vertices"] = layout.num_vertices();
    doc["num_positions"] = layout.num_positions();
    doc["num_variables"] = layout.total();
    const PenaltyWeights w = weights_of(spec);
    doc["lambda_a"] = w.constraint;
    doc["lambda_b"] = w.objective;
    if (const auto* kmst = std::get_if<KmstSpec>(&spec)) doc["k"] = kmst->k;
    if (const auto* dcmst = std::get_if<DcmstSpec>(&spec)) doc["delta"] = dcmst->max_degree;

    nlohmann::json vars = nlohmann::json::array();
    for (int v = 0; v < layout.num_vertices(); ++v)
        for (int p = 0; p < layout.num_positions(); ++p)
            vars.push_back({{"index", layout.placement_index(v, p)},
                            {"kind", "x"},
                            {"vertex", v + 1},
                            {"position", p + 1}});
    for (int v = 0; v < layout.num_vertices(); ++v)
        for (int p = 0; p + 1 < layout.num_positions(); ++p)
            vars.push_back({{"index", layout.attachment_index(v, p)},
                            {"kind", "y"},
                            {"vertex", v + 1},
                            {"position", p + 1}});
    for (size_t level = 0; level < layout.counter_levels().size(); ++level) {
        const CounterLevel& l = layout.counter_levels()[level];
        for (int s = 0; s < layout.counter_positions(); ++s)
            for (int j = 0; j < l.bits; ++j)
                vars.push_back({{"index", layout.counter_index(static_cast<int>(level), s, j)},
                                {"kind", "z"},
                                {"depth", l.depth},
                                {"position", s + 1},
                                {"bit", j}});
    }
    std::sort(vars.begin(), vars.end(),
              [](const nlohmann::json& a, const nlohmann::json& b) {
                  return a["index"].get<int>() < b["index"].get<int>();
              });
    doc["variables"] = std::move(vars);
    return doc.dump(2) + "\n";
}

} // namespace stq
