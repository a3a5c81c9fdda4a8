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

#include <random>

#include "oracle.hpp"

using namespace stq;

namespace {

const char* kTriangle = "3 3\n1 2 1\n1 3 2\n2 3 3";

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return Graph::from_edges(n, edges);
}

Graph random_connected(std::mt19937& rng, int n) {
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 5)
                    edges.push_back({u, v, static_cast<double>(1 + rng() % 5)});
        const Graph g = Graph::from_edges(n, edges);
        if (g.is_connected()) return g;
    }
}

} // namespace

TEST_CASE("oracle_mst") {
    CHECK(oracle_mst(Graph::parse(kTriangle)) == 3.0); // edges 1 and 2
    CHECK(oracle_mst(Graph::parse("3 2\n1 2 1\n2 3 1")) == 2.0);
    CHECK(oracle_mst(Graph::parse("2 1\n1 2 5")) == 5.0);
    CHECK_THROWS_AS(oracle_mst(Graph::parse("3 1\n1 2 1")), std::invalid_argument);
}

TEST_CASE("oracle_kmst") {
    CHECK(*oracle_kmst(Graph::parse(kTriangle), 2) == 1.0); // cheapest single edge
    CHECK(*oracle_kmst(Graph::parse(kTriangle), 3) == 3.0); // the full MST
    CHECK(!oracle_kmst(Graph::parse("4 2\n1 2 1\n3 4 1"), 3).has_value());
    CHECK(*oracle_kmst(Graph::parse("4 2\n1 2 1\n3 4 1"), 1) == 0.0);
    CHECK_THROWS_AS(oracle_kmst(Graph::parse(kTriangle), 0), std::invalid_argument);
    CHECK_THROWS_AS(oracle_kmst(Graph::parse(kTriangle), 4), std::invalid_argument);
}

TEST_CASE("oracle_dcmst") {
    CHECK(*oracle_dcmst(Graph::parse(kTriangle), 2) == 3.0); // trees weigh 3, 4, 5
    CHECK(!oracle_dcmst(Graph::parse("3 2\n1 2 1\n2 3 1"), 1).has_value());
    CHECK(*oracle_dcmst(complete(4), 3) == 3.0); // any unit spanning tree
    CHECK_THROWS_AS(oracle_dcmst(Graph::parse("3 1\n1 2 1"), 2), std::invalid_argument);
    CHECK_THROWS_AS(oracle_dcmst(complete(9), 3), std::invalid_argument); // size cap
}

TEST_CASE("oracle_leaves") {
    CHECK(*oracle_leaves(Graph::parse(kTriangle), LeafObjective::Minimize) == 2);
    CHECK(*oracle_leaves(Graph::parse(kTriangle), LeafObjective::Maximize) == 2);
    CHECK(*oracle_leaves(complete(4), LeafObjective::Minimize) == 2); // paths
    CHECK(*oracle_leaves(complete(4), LeafObjective::Maximize) == 3); // stars
    const Graph star = Graph::parse("4 3\n1 2 1\n1 3 1\n1 4 1");
    CHECK(*oracle_leaves(star, LeafObjective::Minimize) == 3); // unique spanning tree
    CHECK(*oracle_leaves(star, LeafObjective::Maximize) == 3);
    CHECK_THROWS_AS(oracle_leaves(complete(9), LeafObjective::Minimize), std::invalid_argument);
}

TEST_CASE("spanning tree enumeration") {
    CHECK(enumerate_spanning_trees(Graph::parse(kTriangle)).size() == 3);
    CHECK(enumerate_spanning_trees(complete(4)).size() == 16); // Cayley: 4^2
    CHECK(enumerate_spanning_trees(complete(5)).size() == 125);
    CHECK(enumerate_spanning_trees(Graph::parse("2 1\n1 2 1")).size() == 1);
    CHECK(enumerate_spanning_trees(Graph::parse("3 1\n1 2 1")).empty());
}

TEST_CASE("k-tree enumeration") {
    // triangle, k = 2: one tree per edge
    CHECK(enumerate_k_trees(Graph::parse(kTriangle), 2).size() == 3);
    // k = n: the spanning trees
    CHECK(enumerate_k_trees(Graph::parse(kTriangle), 3).size() == 3);
    // k = 1: one per vertex, weight 0
    const auto singles = enumerate_k_trees(Graph::parse(kTriangle), 1);
    REQUIRE(singles.size() == 3);
    for (const KTree& t : singles) {
        CHECK(t.vertices.size() == 1);
        CHECK(t.edges.empty());
        CHECK(t.weight == 0.0);
    }
}

TEST_CASE("full-size kmst equals the plain MST") {
    std::mt19937 rng(77);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const Graph g = random_connected(rng, n);
            CHECK(*oracle_kmst(g, n) == oracle_mst(g));
        }
    }
}

TEST_CASE("a degree bound of n - 1 never binds") {
    std::mt19937 rng(78);
    for (int n = 2; n <= 6; ++n) {
        const Graph g = random_connected(rng, n);
        CHECK(*oracle_dcmst(g, std::max(1, n - 1)) == oracle_mst(g));
    }
}

TEST_CASE("leaf bounds: 2 <= min <= max <= n - 1") {
    std::mt19937 rng(79);
    for (int n = 3; n <= 7; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const Graph g = random_connected(rng, n);
            const int low = *oracle_leaves(g, LeafObjective::Minimize);
            const int high = *oracle_leaves(g, LeafObjective::Maximize);
            CHECK(2 <= low);
            CHECK(low <= high);
            CHECK(high <= n - 1);
        }
    }
}

TEST_CASE("oracle_solve dispatches on the problem kind") {
    const Graph g = Graph::parse(kTriangle);
    CHECK(*oracle_solve(ProblemSpec{make_kmst_spec(g, 2)}) == 1.0);
    CHECK(*oracle_solve(ProblemSpec{make_dcmst_spec(g, 2)}) == 3.0);
    CHECK(*oracle_solve(ProblemSpec{make_mlst_spec(g, LeafObjective::Minimize)}) == 2.0);
    CHECK(*oracle_solve(ProblemSpec{make_mlst_spec(g, LeafObjective::Maximize)}) == 2.0);
    CHECK(!oracle_solve(ProblemSpec{make_dcmst_spec(Graph::parse("3 2\n1 2 1\n2 3 1"), 1)})
               .has_value());
}
