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
#include <vector>

#include "qubo.hpp"

namespace stq {

// One level of binary counter bits attached to each permutation position.
// A level stores values 0..cap in `bits` binary digits: plain digits weigh
// 2^j, the top digit weighs `remainder_coeff` = cap + 1 - 2^(bits-1) so no
// bit pattern exceeds cap.
struct CounterLevel {
    int depth = 1;              // 1-based level depth
    int bits = 0;               // digits per position, including the remainder
    int cap = 0;                // largest representable value
    double remainder_coeff = 0; // weight of the top digit (can be 0)
    int base = 0;               // flat index of this level's first bit
};

// Bijection between the encoding's semantic variables and flat bit indices.
//
// A tree over the chosen vertices is encoded by the order vertices join it:
//   placement(v, p)  - vertex v occupies position p (p in [0, positions))
//   attachment(v, p) - vertex v attaches to the vertex at position p
//                      (p in [0, positions - 1): nothing attaches to the last
//                      position, and position 0 has no attachment of its own)
//   counter(l, s, j) - bit j of counter level l at position s
//                      (s in [0, counter_positions))
// Blocks are laid out in that order and jointly cover [0, total).
class VariableLayout {
public:
    VariableLayout(int num_vertices, int num_positions, int counter_positions,
                   std::vector<CounterLevel> levels);

    int num_vertices() const { return num_vertices_; }
    int num_positions() const { return num_positions_; }
    int counter_positions() const { return counter_positions_; }
    const std::vector<CounterLevel>& counter_levels() const { return levels_; }
    int total() const { return total_; }

    int placement_index(int vertex, int position) const {
        return vertex * num_positions_ + position;
    }
    int attachment_index(int vertex, int position) const {
        return num_vertices_ * num_positions_ + vertex * (num_positions_ - 1) + position;
    }
    int counter_index(int level, int slack_position, int bit) const {
        const CounterLevel& l = levels_[static_cast<size_t>(level)];
        return l.base + slack_position * l.bits + bit;
    }

    // Weight of a counter bit in the level's value expression.
    double counter_bit_coeff(int level, int bit) const;

    // Value expression of one level at one position, as a linear form.
    LinearExpr counter_value_expr(int level, int slack_position) const;

    double counter_value(int level, int slack_position, const Assignment& a) const;
    int counter_popcount(int level, int slack_position, const Assignment& a) const;

    // Canonical bit pattern for a value: plain binary when it fits, otherwise
    // remainder digit plus binary rest. Returns nullopt when out of range.
    std::optional<std::vector<std::uint8_t>> encode_counter_value(int level, int value) const;

private:
    int num_vertices_;
    int num_positions_;
    int counter_positions_;
    std::vector<CounterLevel> levels_;
    int total_;
};

} // namespace stq
