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

#include "problem.hpp"

namespace stq {

// A decoded tree with its own objective, recomputed from the structure and
// never taken from model energy. `objective` is meaningful when valid.
// A valid tree whose counter bits disagree with the structure is still a
// valid tree; that shows up as slacks_consistent == false plus a violation
// note, a verdict distinct from invalid.
struct TreeSolution {
    std::vector<int> vertices;                     // permutation order, 0-based ids
    std::vector<std::pair<int, int>> parent_edges; // (child, parent), 0-based
    double objective = 0.0;
    bool valid = false;
    bool slacks_consistent = true;
    std::vector<std::string> violations;
};

// Reads the permutation and attachments, materializes edges, and checks
// problem-specific feasibility: edges must exist in the graph, kMST trees
// carry exactly k vertices, degree bounds hold for DCMST, leaf problems span
// all vertices. Throws std::invalid_argument on assignment length mismatch.
TreeSolution decode(const ProblemSpec& spec, const VariableLayout& layout, const Assignment& a);

// One line per edge "u v" (1-based), then "objective <val>", "valid <bool>".
std::string to_text(const TreeSolution& solution);

struct EnergyIdentityReport {
    bool ok = false;
    double energy = 0.0;
    double expected = 0.0;
    std::string message;
    std::vector<std::pair<std::string, double>> fragment_energies;
};

// Verifies the formulation's central contract on a decoded-valid,
// counter-consistent assignment: model energy equals the objective scale
// times the decoded objective (negated for maximize-leaves), to 1e-6
// relative. The fragment breakdown localizes failures.
EnergyIdentityReport check_energy_identity(const ProblemSpec& spec, const BuildResult& built,
                                           const Assignment& a);

} // namespace stq
