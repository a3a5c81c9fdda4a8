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

#include "dcmst.hpp"
#include "encoding.hpp"
#include "mlst.hpp"

using namespace stq;

namespace {

Assignment zeros(const VariableLayout& layout) {
    return Assignment(static_cast<size_t>(layout.total()), 0);
}

Assignment bits_of(std::uint32_t mask, int n) {
    Assignment a(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = (mask >> i) & 1;
    return a;
}

const PenaltyWeights kWeights{10.0, 1.0};

} // namespace

TEST_CASE("default constraint weight sits strictly above the bound") {
    const Graph k3 = Graph::parse("3 3\n1 2 1\n1 3 2\n2 3 3");
    CHECK(default_constraint_weight(k3, 1.0, /*weighted=*/true) == 10.0); // 1*3*3 + 1
    CHECK(default_constraint_weight(k3, 2.0, /*weighted=*/true) == 19.0); // 2*3*3 + 1

    const Graph p5 = Graph::parse("5 4\n1 2 1\n2 3 1\n3 4 1\n4 5 1");
    CHECK(default_constraint_weight(p5, 1.0, /*weighted=*/false) == 6.0); // 1*5 + 1

    const Graph zero = Graph::parse("2 1\n1 2 0");
    CHECK(default_constraint_weight(zero, 1.0, /*weighted=*/true) == 1.0);
    CHECK_THROWS_AS(default_constraint_weight(k3, 0.0, true), std::invalid_argument);
}

TEST_CASE("edge cost terms") {
    const Graph k3 = Graph::parse("3 3\n1 2 1\n1 3 2\n2 3 3");

    SUBCASE("a valid encoded tree is priced at objective * weight") {
        // positions (v1, v2, v3); v2 and v3 both attach to position 0:
        // the star around vertex 1, weight 1 + 2.
        VariableLayout layout(3, 3, 0, {});
        QuboModel m(layout.total());
        add_edge_cost_terms(m, layout, k3, kWeights, 2);
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.placement_index(1, 1))] = 1;
        a[static_cast<size_t>(layout.placement_index(2, 2))] = 1;
        a[static_cast<size_t>(layout.attachment_index(1, 0))] = 1;
        a[static_cast<size_t>(layout.attachment_index(2, 0))] = 1;
        CHECK(m.energy(a) == 3.0);
    }

    SUBCASE("using a missing edge costs the constraint weight") {
        const Graph p3 = Graph::parse("3 2\n1 2 1\n2 3 1"); // no edge {1, 3}
        VariableLayout layout(3, 3, 0, {});
        QuboModel m(layout.total());
        add_edge_cost_terms(m, layout, p3, kWeights, 2);
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.attachment_index(2, 0))] = 1;
        CHECK(m.energy(a) == kWeights.constraint);
    }

    SUBCASE("edgeless graph prices nothing on the all-zero assignment") {
        const Graph empty = Graph::parse("3 0");
        VariableLayout layout(3, 3, 0, {});
        QuboModel m(layout.total());
        add_edge_cost_terms(m, layout, empty, kWeights, 2);
        CHECK(m.energy(zeros(layout)) == 0.0);
    }

    SUBCASE("upto beyond the attachment block is rejected") {
        VariableLayout layout(3, 3, 0, {});
        QuboModel m(layout.total());
        CHECK_THROWS_AS(add_edge_cost_terms(m, layout, k3, kWeights, 3), std::invalid_argument);
    }
}

TEST_CASE("full permutation constraints") {
    VariableLayout layout(3, 3, 0, {});
    QuboModel m(layout.total());
    add_permutation_constraints_exact(m, layout, kWeights);

    SUBCASE("zero exactly on permutation matrices") {
        Assignment a = zeros(layout);
        for (int v = 0; v < 3; ++v) a[static_cast<size_t>(layout.placement_index(v, v))] = 1;
        CHECK(m.energy(a) == 0.0);
    }
    SUBCASE("all-zero placements cost 2n squares") {
        CHECK(m.energy(zeros(layout)) == 2 * 3 * kWeights.constraint);
    }
    SUBCASE("a vertex in two positions is penalized") {
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.placement_index(0, 1))] = 1;
        a[static_cast<size_t>(layout.placement_index(1, 2))] = 1;
        CHECK(m.energy(a) >= kWeights.constraint);
    }
    SUBCASE("positions must match the vertex count") {
        VariableLayout short_layout(3, 2, 0, {});
        QuboModel bad(short_layout.total());
        CHECK_THROWS_AS(add_permutation_constraints_exact(bad, short_layout, kWeights),
                        std::invalid_argument);
    }
}

TEST_CASE("cardinality-k permutation constraints") {
    VariableLayout layout(3, 2, 0, {}); // k = 2 of n = 3
    QuboModel m(layout.total());
    add_permutation_constraints_kcard(m, layout, kWeights);

    SUBCASE("an injective arrangement is free") {
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.placement_index(1, 1))] = 1;
        CHECK(m.energy(a) == 0.0);
    }
    SUBCASE("two vertices in one position with the other empty") {
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.placement_index(1, 0))] = 1;
        CHECK(m.energy(a) >= 2 * kWeights.constraint);
    }
    SUBCASE("one vertex in both positions") {
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.placement_index(0, 1))] = 1;
        CHECK(m.energy(a) >= kWeights.constraint);
    }
}

TEST_CASE("connection constraints") {
    SUBCASE("full variant: a path encoding is free") {
        VariableLayout layout(3, 3, 0, {});
        QuboModel m(layout.total());
        add_connection_constraints(m, layout, kWeights, ConnectionVariant::Full);
        Assignment a = zeros(layout);
        for (int v = 0; v < 3; ++v) a[static_cast<size_t>(layout.placement_index(v, v))] = 1;
        a[static_cast<size_t>(layout.attachment_index(1, 0))] = 1;
        a[static_cast<size_t>(layout.attachment_index(2, 1))] = 1;
        CHECK(m.energy(a) == 0.0);
    }
    SUBCASE("attaching at one's own position or later is penalized") {
        VariableLayout layout(4, 4, 0, {});
        QuboModel m(layout.total());
        add_connection_constraints(m, layout, kWeights, ConnectionVariant::Full);
        Assignment a = zeros(layout);
        for (int v = 0; v < 4; ++v) a[static_cast<size_t>(layout.placement_index(v, v))] = 1;
        a[static_cast<size_t>(layout.attachment_index(1, 0))] = 1;
        a[static_cast<size_t>(layout.attachment_index(2, 2))] = 1; // position 2 attaching to 2
        a[static_cast<size_t>(layout.attachment_index(3, 0))] = 1;
        CHECK(m.energy(a) >= kWeights.constraint);
    }
    SUBCASE("cardinality variant: an absent vertex with an attachment bit is penalized") {
        VariableLayout layout(3, 2, 0, {});
        QuboModel m(layout.total());
        add_connection_constraints(m, layout, kWeights, ConnectionVariant::kCardinality);
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.placement_index(1, 1))] = 1;
        a[static_cast<size_t>(layout.attachment_index(1, 0))] = 1; // fine: placed at position 1
        a[static_cast<size_t>(layout.attachment_index(2, 0))] = 1; // vertex 3 is absent
        CHECK(m.energy(a) >= kWeights.constraint);
    }
}

TEST_CASE("decode_permutation") {
    VariableLayout layout(3, 3, 0, {});

    SUBCASE("a hand-built path decodes to its mappings") {
        Assignment a = zeros(layout);
        for (int v = 0; v < 3; ++v) a[static_cast<size_t>(layout.placement_index(v, v))] = 1;
        a[static_cast<size_t>(layout.attachment_index(1, 0))] = 1;
        a[static_cast<size_t>(layout.attachment_index(2, 1))] = 1;
        const PermutationDecode decoded = decode_permutation(layout, a);
        REQUIRE(decoded.ok);
        CHECK(decoded.vertex_at == std::vector<int>{0, 1, 2});
        CHECK(decoded.parent_position == std::vector<int>{-1, 0, 1});
        CHECK(decoded.position_of == std::vector<int>{0, 1, 2});
    }
    SUBCASE("all-zero is invalid at the first position") {
        const PermutationDecode decoded = decode_permutation(layout, zeros(layout));
        CHECK(!decoded.ok);
        CHECK(decoded.reason == "empty position 1");
    }
    SUBCASE("two vertices in one position") {
        Assignment a = zeros(layout);
        a[static_cast<size_t>(layout.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(layout.placement_index(1, 0))] = 1;
        const PermutationDecode decoded = decode_permutation(layout, a);
        CHECK(!decoded.ok);
        CHECK(decoded.reason == "multiple vertices at position 1");
    }
    SUBCASE("attachment at or after the own position") {
        Assignment a = zeros(layout);
        for (int v = 0; v < 3; ++v) a[static_cast<size_t>(layout.placement_index(v, v))] = 1;
        a[static_cast<size_t>(layout.attachment_index(1, 1))] = 1; // position 1 attaching to 1
        a[static_cast<size_t>(layout.attachment_index(2, 0))] = 1;
        const PermutationDecode decoded = decode_permutation(layout, a);
        CHECK(!decoded.ok);
        CHECK(decoded.reason == "vertex 2 attaches at or after its own position");
    }
    SUBCASE("absent vertex with attachment bits (cardinality layout)") {
        VariableLayout kcard(3, 2, 0, {});
        Assignment a = Assignment(static_cast<size_t>(kcard.total()), 0);
        a[static_cast<size_t>(kcard.placement_index(0, 0))] = 1;
        a[static_cast<size_t>(kcard.placement_index(1, 1))] = 1;
        a[static_cast<size_t>(kcard.attachment_index(1, 0))] = 1;
        a[static_cast<size_t>(kcard.attachment_index(2, 0))] = 1;
        const PermutationDecode decoded = decode_permutation(kcard, a);
        CHECK(!decoded.ok);
        CHECK(decoded.reason == "absent vertex 3 has attachment bits");
    }
}

TEST_CASE("index maps are bijections onto their declared ranges") {
    auto check_layout = [](const VariableLayout& layout, long long expected_total) {
        REQUIRE(layout.total() == expected_total);
        std::vector<int> hits(static_cast<size_t>(layout.total()), 0);
        for (int v = 0; v < layout.num_vertices(); ++v)
            for (int p = 0; p < layout.num_positions(); ++p)
                ++hits[static_cast<size_t>(layout.placement_index(v, p))];
        for (int v = 0; v < layout.num_vertices(); ++v)
            for (int p = 0; p + 1 < layout.num_positions(); ++p)
                ++hits[static_cast<size_t>(layout.attachment_index(v, p))];
        for (size_t level = 0; level < layout.counter_levels().size(); ++level)
            for (int s = 0; s < layout.counter_positions(); ++s)
                for (int j = 0; j < layout.counter_levels()[level].bits; ++j)
                    ++hits[static_cast<size_t>(layout.counter_index(static_cast<int>(level), s, j))];
        for (int hit : hits) REQUIRE(hit == 1);
    };

    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            check_layout(VariableLayout(n, k, 0, {}), kmst_variable_count(n, k));
    for (int n = 2; n <= 8; ++n)
        for (int delta = 1; delta <= 4; ++delta)
            check_layout(VariableLayout(n, n, n - 1, {degree_counter_level(delta)}),
                         dcmst_variable_count(n, delta));
    for (int n = 2; n <= 8; ++n)
        check_layout(VariableLayout(n, n, n - 1, make_leaf_tower(n).levels()),
                     mlst_variable_count(n));
}

TEST_CASE("invalid permutation decodes always cost at least the constraint weight") {
    // Exhaustive n = 3: every assignment the decoder rejects picks up at
    // least one positive constraint fragment, and every fragment is a
    // multiple of the constraint weight.
    SUBCASE("full variant") {
        VariableLayout layout(3, 3, 0, {});
        QuboModel constraints(layout.total());
        add_permutation_constraints_exact(constraints, layout, kWeights);
        add_connection_constraints(constraints, layout, kWeights, ConnectionVariant::Full);
        for (std::uint32_t mask = 0; mask < (1u << layout.total()); ++mask) {
            const Assignment a = bits_of(mask, layout.total());
            const PermutationDecode decoded = decode_permutation(layout, a);
            const double energy = constraints.energy(a);
            if (decoded.ok)
                CHECK(energy == 0.0);
            else
                CHECK(energy >= kWeights.constraint);
        }
    }
    SUBCASE("cardinality variant, k = 2") {
        VariableLayout layout(3, 2, 0, {});
        QuboModel constraints(layout.total());
        add_permutation_constraints_kcard(constraints, layout, kWeights);
        add_connection_constraints(constraints, layout, kWeights,
                                   ConnectionVariant::kCardinality);
        for (std::uint32_t mask = 0; mask < (1u << layout.total()); ++mask) {
            const Assignment a = bits_of(mask, layout.total());
            const PermutationDecode decoded = decode_permutation(layout, a);
            const double energy = constraints.energy(a);
            if (decoded.ok)
                CHECK(energy == 0.0);
            else
                CHECK(energy >= kWeights.constraint);
        }
    }
}
