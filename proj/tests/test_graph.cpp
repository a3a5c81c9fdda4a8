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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "graph.hpp"

using stq::Edge;
using stq::Graph;
using stq::ParseError;

TEST_CASE("parse reads the edge-list format") {
    const Graph g = Graph::parse("3 3\n1 2 1\n1 3 2\n2 3 3");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.weight(0, 1) == 1.0);
    CHECK(g.weight(0, 2) == 2.0);
    CHECK(g.weight(1, 2) == 3.0);
    CHECK(g.has_edge(2, 1)); // symmetric lookup
    CHECK(!g.has_edge(0, 0));

    const Graph single = Graph::parse("2 1\n1 2 5");
    CHECK(single.num_vertices() == 2);
    CHECK(single.num_edges() == 1);
    CHECK(single.weight(0, 1) == 5.0);
}

TEST_CASE("parse skips comments and blank lines") {
    const Graph g = Graph::parse("# a triangle\n3 3\n\n1 2 1\n# middle comment\n1 3 2\n2 3 3\n");
    CHECK(g.num_edges() == 3);
}

TEST_CASE("parse accepts fractional and scientific weights") {
    CHECK(Graph::parse("2 1\n1 2 0.25").weight(0, 1) == 0.25);
    CHECK(Graph::parse("2 1\n1 2 1e-3").weight(0, 1) == 1e-3);
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("vertex out of range") {
        try {
            Graph::parse("3 1\n1 4 1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("out of range") != std::string::npos);
        }
    }
    SUBCASE("negative weight") {
        try {
            Graph::parse("2 1\n1 2 -1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("negative weight") != std::string::npos);
        }
    }
    SUBCASE("duplicate edge, either orientation") {
        try {
            Graph::parse("3 3\n1 2 1\n2 1 2\n2 3 1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).find("duplicate edge") != std::string::npos);
        }
    }
    SUBCASE("self loop") {
        CHECK_THROWS_AS(Graph::parse("2 1\n1 1 1"), ParseError);
    }
    SUBCASE("malformed lines") {
        CHECK_THROWS_AS(Graph::parse("2 1\n1 2"), ParseError);
        CHECK_THROWS_AS(Graph::parse("2 1\n1 2 1 7"), ParseError);
        CHECK_THROWS_AS(Graph::parse("nonsense"), ParseError);
        CHECK_THROWS_AS(Graph::parse("2 1\n1 2 abc"), ParseError);
    }
    SUBCASE("edge count mismatches") {
        CHECK_THROWS_AS(Graph::parse("3 2\n1 2 1"), ParseError);
        CHECK_THROWS_AS(Graph::parse("3 1\n1 2 1\n2 3 1"), ParseError);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(Graph::parse(""), ParseError);
    }
    SUBCASE("bad header values") {
        CHECK_THROWS_AS(Graph::parse("0 0"), ParseError);
        CHECK_THROWS_AS(Graph::parse("2 -1"), ParseError);
    }
}

TEST_CASE("parse of serialize is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    edges.push_back({u, v, static_cast<double>(rng() % 100) / 4.0});
        const Graph g = Graph::from_edges(n, edges);
        const Graph h = Graph::parse(g.to_edge_list());
        REQUIRE(h.num_vertices() == g.num_vertices());
        REQUIRE(h.num_edges() == g.num_edges());
        for (const Edge& e : g.edges()) {
            REQUIRE(h.has_edge(e.u, e.v));
            REQUIRE(h.weight(e.u, e.v) == e.weight);
        }
    }
}

namespace {

// independent connectivity oracle
bool union_find_connected(int n, const std::vector<Edge>& edges) {
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)];
        return v;
    };
    int components = n;
    for (const Edge& e : edges) {
        const int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

} // namespace

TEST_CASE("is_connected") {
    CHECK(Graph::parse("3 3\n1 2 1\n1 3 2\n2 3 3").is_connected());
    CHECK(!Graph::parse("3 1\n1 2 1").is_connected());
    CHECK(Graph::parse("1 0").is_connected()); // vacuous

    SUBCASE("agrees with a union-find oracle on random graphs") {
        std::mt19937 rng(123);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 10);
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 10 < 3) edges.push_back({u, v, 1.0});
            const Graph g = Graph::from_edges(n, edges);
            CHECK(g.is_connected() == union_find_connected(n, g.edges()));
        }
    }
}

TEST_CASE("max_weight") {
    CHECK(Graph::parse("3 3\n1 2 1\n1 3 2\n2 3 3").max_weight() == 3.0);
    CHECK(Graph::parse("2 1\n1 2 5").max_weight() == 5.0);
    CHECK(Graph::parse("3 2\n1 2 0\n2 3 0").max_weight() == 0.0);
    CHECK_THROWS_AS(Graph::parse("2 0").max_weight(), std::invalid_argument);
}

TEST_CASE("from_edges validates invariants") {
    CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, -1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
    CHECK(Graph::from_edges(2, {{1, 0, 2.0}}).weight(0, 1) == 2.0); // endpoints normalized
}

TEST_CASE("degrees") {
    const Graph g = Graph::parse("4 3\n1 2 1\n1 3 1\n1 4 1");
    CHECK(g.degrees() == std::vector<int>{3, 1, 1, 1});
}
