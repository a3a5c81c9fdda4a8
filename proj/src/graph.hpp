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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stq {

// Undirected weighted edge. Vertices are 0-based internally; the 1-based
// labels of the text format are converted at the I/O boundary only.
struct Edge {
    int u;
    int v;
    double weight;
};

// Raised by Graph::parse with the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph with non-negative edge weights. Immutable after
// construction, so values can be shared freely across threads.
class Graph {
public:
    // Validates: n >= 1, no self-loops, no duplicate pairs, endpoints in
    // range, weights non-negative and finite. Edge endpoints are 0-based.
    static Graph from_edges(int num_vertices, std::vector<Edge> edges);

    // Edge-list text format: first non-comment line "n m", then m lines
    // "u v w" with 1-based vertex ids. Lines starting with '#' are comments.
    static Graph parse(std::string_view text);

    // Inverse of parse (same format, 1-based ids, insertion order).
    std::string to_edge_list() const;

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    double weight(int u, int v) const;

    // Largest edge weight; throws std::invalid_argument on an empty edge set.
    double max_weight() const;

    // True iff every vertex is reachable from vertex 0 (vacuously for n=1).
    bool is_connected() const;

    std::vector<int> degrees() const;

private:
    Graph(int n, std::vector<Edge> edges);
    int edge_id(int u, int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> edge_ids_;               // n*n matrix, -1 = absent
    std::vector<std::vector<int>> adjacency_; // neighbor lists
};

} // namespace stq
