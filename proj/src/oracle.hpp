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

#include <optional>

#include "mlst.hpp"
#include "problem.hpp"

namespace stq {

// Independent brute-force and classical solvers that supply ground truth for
// the formulations at small n. Deliberately the simplest auditable
// implementations: spanning trees are enumerated as (n-1)-edge subsets.

// Exact MST weight via Kruskal. Throws std::invalid_argument when
// disconnected.
double oracle_mst(const Graph& g);

// Minimum over all k-vertex subsets with a connected induced subgraph of the
// induced MST weight; nullopt when no such subset exists.
std::optional<double> oracle_kmst(const Graph& g, int k);

// Minimum spanning tree weight under the uniform degree bound; nullopt when
// no spanning tree satisfies it. Requires a connected graph, n <= 8.
std::optional<double> oracle_dcmst(const Graph& g, int max_degree);

// Minimum or maximum leaf count over all spanning trees. Requires a
// connected graph, 2 <= n <= 8.
std::optional<int> oracle_leaves(const Graph& g, LeafObjective objective);

// Convenience dispatch matching the solution objective of `decode`:
// nullopt = infeasible.
std::optional<double> oracle_solve(const ProblemSpec& spec);

// All spanning trees, each as a list of edges. n <= 8 enforced.
std::vector<std::vector<Edge>> enumerate_spanning_trees(const Graph& g);

// A tree on exactly k vertices of the graph.
struct KTree {
    std::vector<int> vertices;
    std::vector<Edge> edges;
    double weight = 0.0;
};

// All k-vertex subsets with all spanning trees of their induced subgraphs.
// For k = 1 these are the single vertices with no edges.
std::vector<KTree> enumerate_k_trees(const Graph& g, int k);

// Every vertex order of a tree in which each vertex after the first follows
// an already-placed tree neighbor, with the matching attachment positions.
// These are exactly the inputs encode_solution accepts for the tree.
struct TreeOrdering {
    std::vector<int> order;
    std::vector<int> parent_position;
};

std::vector<TreeOrdering> tree_orderings(const std::vector<Edge>& edges,
                                         const std::vector<int>& vertices);

} // namespace stq
