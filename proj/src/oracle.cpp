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

#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stq {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

// Kruskal over an explicit vertex subset (empty = all vertices).
std::optional<double> mst_weight(const Graph& g, const std::vector<int>& subset) {
    std::vector<int> vertices = subset;
    if (vertices.empty()) {
        vertices.resize(static_cast<size_t>(g.num_vertices()));
        std::iota(vertices.begin(), vertices.end(), 0);
    }
    std::vector<char> in_subset(static_cast<size_t>(g.num_vertices()), 0);
    for (int v : vertices) in_subset[static_cast<size_t>(v)] = 1;

    std::vector<const Edge*> edges;
    for (const Edge& e : g.edges())
        if (in_subset[static_cast<size_t>(e.u)] && in_subset[static_cast<size_t>(e.v)])
            edges.push_back(&e);
    std::sort(edges.begin(), edges.end(),
              [](const Edge* a, const Edge* b) { return a->weight < b->weight; });

    UnionFind uf(g.num_vertices());
    double weight = 0.0;
    size_t joined = 1;
    for (const Edge* e : edges) {
        if (uf.unite(e->u, e->v)) {
            weight += e->weight;
            ++joined;
        }
    }
    if (joined != vertices.size()) return std::nullopt;
    return weight;
}

template <typename Fn>
void for_each_subset(int n, int k, std::vector<int>& chosen, int next, Fn&& fn) {
    if (static_cast<int>(chosen.size()) == k) {
        fn(chosen);
        return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(chosen.size())); ++v) {
        chosen.push_back(v);
        for_each_subset(n, k, chosen, v + 1, fn);
        chosen.pop_back();
    }
}

} // namespace

double oracle_mst(const Graph& g) {
    auto weight = mst_weight(g, {});
    if (!weight) throw std::invalid_argument("oracle_mst: graph is not connected");
    return *weight;
}

std::optional<double> oracle_kmst(const Graph& g, int k) {
    const int n = g.num_vertices();
    if (k < 1 || k > n) throw std::invalid_argument("oracle_kmst: k out of range");
    if (n > 20) throw std::invalid_argument("oracle_kmst: graphs above n = 20 are not supported");
    if (k == 1) return 0.0;
    std::optional<double> best;
    std::vector<int> chosen;
    for_each_subset(n, k, chosen, 0, [&](const std::vector<int>& subset) {
        auto weight = mst_weight(g, subset);
        if (weight && (!best || *weight < *best)) best = weight;
    });
    return best;
}

std::vector<std::vector<Edge>> enumerate_spanning_trees(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 8) throw std::invalid_argument("spanning tree enumeration supports n <= 8 only");
    std::vector<std::vector<Edge>> trees;
    if (n == 1) {
        trees.push_back({});
        return trees;
    }
    const int m = g.num_edges();
    std::vector<int> chosen;
    for_each_subset(m, n - 1, chosen, 0, [&](const std::vector<int>& subset) {
        UnionFind uf(n);
        for (int id : subset)
            if (!uf.unite(g.edges()[static_cast<size_t>(id)].u,
                          g.edges()[static_cast<size_t>(id)].v))
                return; // cycle
        // n-1 acyclic edges span iff they form one component
        std::vector<Edge> tree;
        tree.reserve(subset.size());
        for (int id : subset) tree.push_back(g.edges()[static_cast<size_t>(id)]);
        trees.push_back(std::move(tree));
    });
    return trees;
}

std::optional<double> oracle_dcmst(const Graph& g, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("oracle_dcmst: degree bound must be >= 1");
    if (!g.is_connected()) throw std::invalid_argument("oracle_dcmst: graph is not connected");
    std::optional<double> best;
    for (const auto& tree : enumerate_spanning_trees(g)) {
        std::vector<int> degree(static_cast<size_t>(g.num_vertices()), 0);
        double weight = 0.0;
        for (const Edge& e : tree) {
            ++degree[static_cast<size_t>(e.u)];
            ++degree[static_cast<size_t>(e.v)];
            weight += e.weight;
        }
        if (*std::max_element(degree.begin(), degree.end()) > max_degree) continue;
        if (!best || weight < *best) best = weight;
    }
    return best;
}

std::optional<int> oracle_leaves(const Graph& g, LeafObjective objective) {
    if (g.num_vertices() < 2)
        throw std::invalid_argument("oracle_leaves: need at least 2 vertices");
    if (!g.is_connected()) throw std::invalid_argument("oracle_leaves: graph is not connected");
    std::optional<int> best;
    for (const auto& tree : enumerate_spanning_trees(g)) {
        std::vector<int> degree(static_cast<size_t>(g.num_vertices()), 0);
        for (const Edge& e : tree) {
            ++degree[static_cast<size_t>(e.u)];
            ++degree[static_cast<size_t>(e.v)];
        }
        const int leaves =
            static_cast<int>(std::count(degree.begin(), degree.end(), 1));
        if (!best || (objective == LeafObjective::Minimize ? leaves < *best : leaves > *best))
            best = leaves;
    }
    return best;
}

std::optional<double> oracle_solve(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, KmstSpec>) {
                return oracle_kmst(s.graph, s.k);
            } else if constexpr (std::is_same_v<T, DcmstSpec>) {
                return oracle_dcmst(s.graph, s.max_degree);
            } else {
                auto leaves = oracle_leaves(s.graph, s.objective);
                if (!leaves) return std::nullopt;
                return static_cast<double>(*leaves);
            }
        },
        spec);
}

std::vector<TreeOrdering> tree_orderings(const std::vector<Edge>& edges,
                                         const std::vector<int>& vertices) {
    std::vector<TreeOrdering> result;
    if (vertices.empty()) return result;
    if (vertices.size() == 1) {
        result.push_back({{vertices[0]}, {-1}});
        return result;
    }
    std::vector<TreeOrdering> stack;
    for (int root : vertices) stack.push_back({{root}, {-1}});
    while (!stack.empty()) {
        TreeOrdering partial = std::move(stack.back());
        stack.pop_back();
        if (partial.order.size() == vertices.size()) {
            result.push_back(std::move(partial));
            continue;
        }
        for (const Edge& e : edges) {
            for (const auto [next, anchor] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (std::find(partial.order.begin(), partial.order.end(), next) !=
                    partial.order.end())
                    continue;
                const auto at = std::find(partial.order.begin(), partial.order.end(), anchor);
                if (at == partial.order.end()) continue;
                TreeOrdering extended = partial;
                extended.order.push_back(next);
                extended.parent_position.push_back(
                    static_cast<int>(at - partial.order.begin()));
                stack.push_back(std::move(extended));
            }
        }
    }
    return result;
}

std::vector<KTree> enumerate_k_trees(const Graph& g, int k) {
    const int n = g.num_vertices();
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_k_trees: k out of range");
    if (n > 8) throw std::invalid_argument("enumerate_k_trees supports n <= 8 only");
    std::vector<KTree> result;
    std::vector<int> chosen;
    for_each_subset(n, k, chosen, 0, [&](const std::vector<int>& subset) {
        if (k == 1) {
            result.push_back({subset, {}, 0.0});
            return;
        }
        std::vector<char> in_subset(static_cast<size_t>(n), 0);
        for (int v : subset) in_subset[static_cast<size_t>(v)] = 1;
        std::vector<Edge> induced;
        for (const Edge& e : g.edges())
            if (in_subset[static_cast<size_t>(e.u)] && in_subset[static_cast<size_t>(e.v)])
                induced.push_back(e);
        if (static_cast<int>(induced.size()) < k - 1) return;

        std::vector<int> edge_ids;
        for_each_subset(static_cast<int>(induced.size()), k - 1, edge_ids, 0,
                        [&](const std::vector<int>& ids) {
                            UnionFind uf(n);
                            double weight = 0.0;
                            for (int id : ids) {
                                const Edge& e = induced[static_cast<size_t>(id)];
                                if (!uf.unite(e.u, e.v)) return;
                                weight += e.weight;
                            }
                            KTree tree;
                            tree.vertices = subset;
                            for (int id : ids) tree.edges.push_back(induced[static_cast<size_t>(id)]);
                            tree.weight = weight;
                            result.push_back(std::move(tree));
                        });
    });
    return result;
}

} // namespace stq
