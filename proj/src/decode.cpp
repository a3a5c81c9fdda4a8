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

#include "decode.hpp"

#include <charconv>
#include <cmath>

namespace stq {

namespace {

std::string edge_label(int u, int v) {
    if (u > v) std::swap(u, v);
    return "(" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")";
}

std::string format_double(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void check_counters(const ProblemSpec& spec, const VariableLayout& layout, const Assignment& a,
                    const std::vector<int>& attach_count, TreeSolution& out) {
    if (layout.counter_levels().empty()) return;
    const bool dcmst = std::holds_alternative<DcmstSpec>(spec);
    for (int s = 0; s < layout.counter_positions(); ++s) {
        int expected = attach_count[static_cast<size_t>(s)];
        if (dcmst ? (s > 0) : (s == 0)) expected += dcmst ? 1 : -1;
        for (size_t level = 0; level < layout.counter_levels().size(); ++level) {
            const double value = layout.counter_value(static_cast<int>(level), s, a);
            if (value != static_cast<double>(expected)) {
                out.slacks_consistent = false;
                out.violations.push_back("inconsistent slacks: position " + std::to_string(s + 1) +
                                         " level " + std::to_string(level + 1) + " encodes " +
                                         format_double(value) + ", expected " +
                                         std::to_string(expected));
                return;
            }
            // A level encoding zero must be all-zero bits, or the stacked
            // counters no longer reflect the leaf test truthfully (a
            // zero-weight remainder digit could be set without changing the
            // value).
            const int popcount = layout.counter_popcount(static_cast<int>(level), s, a);
            if (expected == 0 && popcount != 0) {
                out.slacks_consistent = false;
                out.violations.push_back("inconsistent slacks: position " + std::to_string(s + 1) +
                                         " level " + std::to_string(level + 1) +
                                         " encodes 0 with set bits");
                return;
            }
            expected = popcount;
        }
    }
}

} // namespace

TreeSolution decode(const ProblemSpec& spec, const VariableLayout& layout, const Assignment& a) {
    if (static_cast<int>(a.size()) != layout.total())
        throw std::invalid_argument("decode: assignment length mismatch");
    const Graph& g = graph_of(spec);

    TreeSolution out;
    const PermutationDecode perm = decode_permutation(layout, a);
    if (!perm.ok) {
        out.valid = false;
        out.violations.push_back(perm.reason);
        return out;
    }

    out.vertices = perm.vertex_at;
    std::vector<int> attach_count(static_cast<size_t>(layout.num_positions()), 0);
    bool edges_ok = true;
    for (int p = 1; p < layout.num_positions(); ++p) {
        const int child = perm.vertex_at[static_cast<size_t>(p)];
        const int q = perm.parent_position[static_cast<size_t>(p)];
        const int parent = perm.vertex_at[static_cast<size_t>(q)];
        out.parent_edges.emplace_back(child, parent);
        ++attach_count[static_cast<size_t>(q)];
        if (!g.has_edge(child, parent)) {
            edges_ok = false;
            out.violations.push_back("edge " + edge_label(child, parent) + " not in graph");
        }
    }

    std::vector<int> degree(static_cast<size_t>(layout.num_positions()), 0);
    for (int p = 0; p < layout.num_positions(); ++p) {
        degree[static_cast<size_t>(p)] = attach_count[static_cast<size_t>(p)] + (p > 0 ? 1 : 0);
    }

    bool feasible = edges_ok;
    if (const auto* kmst = std::get_if<KmstSpec>(&spec)) {
        if (static_cast<int>(out.vertices.size()) != kmst->k) {
            feasible = false;
            out.violations.push_back("expected " + std::to_string(kmst->k) + " vertices, decoded " +
                                     std::to_string(out.vertices.size()));
        }
    } else if (const auto* dcmst = std::get_if<DcmstSpec>(&spec)) {
        for (int p = 0; p < layout.num_positions(); ++p) {
            if (degree[static_cast<size_t>(p)] > dcmst->max_degree) {
                feasible = false;
                out.violations.push_back(
                    "vertex " + std::to_string(perm.vertex_at[static_cast<size_t>(p)] + 1) +
                    " has degree " + std::to_string(degree[static_cast<size_t>(p)]) +
                    ", bound is " + std::to_string(dcmst->max_degree));
            }
        }
    } else {
        if (static_cast<int>(out.vertices.size()) != g.num_vertices()) {
            feasible = false;
            out.violations.push_back("tree does not span all vertices");
        }
    }

    out.valid = feasible;
    if (!feasible) return out;

    if (std::holds_alternative<MlstSpec>(spec)) {
        int leaves = 0;
        for (int d : degree)
            if (d == 1) ++leaves;
        out.objective = static_cast<double>(leaves);
    } else {
        double weight = 0.0;
        for (const auto& [child, parent] : out.parent_edges) weight += g.weight(child, parent);
        out.objective = weight;
    }

    check_counters(spec, layout, a, attach_count, out);
    return out;
}

std::string to_text(const TreeSolution& solution) {
    std::string out;
    for (const auto& [child, parent] : solution.parent_edges) {
        int u = child, v = parent;
        if (u > v) std::swap(u, v);
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    out += "objective " + format_double(solution.objective) + "\n";
    out += std::string("valid ") + (solution.valid ? "true" : "false") + "\n";
    return out;
}

EnergyIdentityReport check_energy_identity(const ProblemSpec& spec, const BuildResult& built,
                                           const Assignment& a) {
    EnergyIdentityReport report;
    report.energy = built.model.energy(a);
    for (const auto& [name, fragment] : built.fragments)
        report.fragment_energies.emplace_back(name, fragment.energy(a));

    const TreeSolution solution = decode(spec, built.layout, a);
    if (!solution.valid || !solution.slacks_consistent) {
        report.ok = false;
        report.message = !solution.valid ? "assignment does not decode to a valid solution"
                                         : "counter bits are inconsistent with the tree";
        return report;
    }

    double sign = 1.0;
    if (const auto* mlst = std::get_if<MlstSpec>(&spec))
        sign = mlst->objective == LeafObjective::Maximize ? -1.0 : 1.0;
    report.expected = sign * weights_of(spec).objective * solution.objective;
    const double tolerance = 1e-6 * std::max(1.0, std::abs(report.energy));
    report.ok = std::abs(report.energy - report.expected) <= tolerance;
    if (!report.ok) report.message = "energy differs from scaled objective";
    return report;
}

} // namespace stq
