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

#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace stq {

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), edge_ids_(static_cast<size_t>(n) * n, -1), adjacency_(n) {
    for (size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        edge_ids_[static_cast<size_t>(e.u) * n_ + e.v] = static_cast<int>(id);
        edge_ids_[static_cast<size_t>(e.v) * n_ + e.u] = static_cast<int>(id);
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
}

Graph Graph::from_edges(int num_vertices, std::vector<Edge> edges) {
    if (num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::vector<bool> seen(static_cast<size_t>(num_vertices) * num_vertices, false);
    for (Edge& e : edges) {
        if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("edge weights must be non-negative and finite");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (seen[static_cast<size_t>(e.u) * num_vertices + e.v])
            throw std::invalid_argument("duplicate edge");
        seen[static_cast<size_t>(e.u) * num_vertices + e.v] = true;
    }
    return Graph(num_vertices, std::move(edges));
}

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Graph Graph::parse(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = 0;
    long m = -1;
    std::vector<Edge> edges;
    std::vector<bool> seen;

    while (std::getline(stream, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        if (m < 0) {
            if (!(fields >> n >> m) || !(fields >> std::ws).eof())
                throw ParseError(line_no, "malformed header, expected \"n m\"");
            if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
            if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
            seen.assign(static_cast<size_t>(n) * n, false);
            edges.reserve(static_cast<size_t>(m));
            continue;
        }
        if (static_cast<long>(edges.size()) == m)
            throw ParseError(line_no, "unexpected extra line, header declared " +
                                          std::to_string(m) + " edges");
        int u = 0, v = 0;
        double w = 0.0;
        if (!(fields >> u >> v >> w) || !(fields >> std::ws).eof())
            throw ParseError(line_no, "malformed edge line, expected \"u v w\"");
        if (u < 1 || u > n)
            throw ParseError(line_no, "vertex index " + std::to_string(u) + " out of range [1, " +
                                          std::to_string(n) + "]");
        if (v < 1 || v > n)
            throw ParseError(line_no, "vertex index " + std::to_string(v) + " out of range [1, " +
                                          std::to_string(n) + "]");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (!std::isfinite(w)) throw ParseError(line_no, "weight is not a finite number");
        if (w < 0.0) throw ParseError(line_no, "negative weight " + std::to_string(w));
        int a = u - 1, b = v - 1;
        if (a > b) std::swap(a, b);
        if (seen[static_cast<size_t>(a) * n + b])
            throw ParseError(line_no, "duplicate edge (" + std::to_string(u) + ", " +
                                          std::to_string(v) + ")");
        seen[static_cast<size_t>(a) * n + b] = true;
        edges.push_back({a, b, w});
    }
    if (m < 0) throw ParseError(line_no + 1, "missing header line \"n m\"");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

namespace {

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

} // namespace

std::string Graph::to_edge_list() const {
    std::string out = std::to_string(n_) + " " + std::to_string(num_edges()) + "\n";
    for (const Edge& e : edges_) {
        out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
               format_double(e.weight) + "\n";
    }
    return out;
}

int Graph::edge_id(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
    return edge_ids_[static_cast<size_t>(u) * n_ + v];
}

double Graph::weight(int u, int v) const {
    int id = edge_id(u, v);
    if (id < 0) throw std::invalid_argument("no such edge");
    return edges_[static_cast<size_t>(id)].weight;
}

double Graph::max_weight() const {
    if (edges_.empty()) throw std::invalid_argument("max_weight: graph has no edges");
    double best = 0.0;
    for (const Edge& e : edges_) best = std::max(best, e.weight);
    return best;
}

bool Graph::is_connected() const {
    std::vector<bool> visited(n_, false);
    std::vector<int> stack{0};
    visited[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v]) {
            if (!visited[w]) {
                visited[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

} // namespace stq
