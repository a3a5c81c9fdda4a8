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

#include "layout.hpp"

#include <stdexcept>

namespace stq {

VariableLayout::VariableLayout(int num_vertices, int num_positions, int counter_positions,
                               std::vector<CounterLevel> levels)
    : num_vertices_(num_vertices),
      num_positions_(num_positions),
      counter_positions_(counter_positions),
      levels_(std::move(levels)) {
    if (num_vertices < 1 || num_positions < 1 || num_positions > num_vertices)
        throw std::invalid_argument("VariableLayout: bad dimensions");
    int base = num_vertices_ * num_positions_ + num_vertices_ * (num_positions_ - 1);
    for (CounterLevel& level : levels_) {
        level.base = base;
        base += counter_positions_ * level.bits;
    }
    total_ = base;
}

double VariableLayout::counter_bit_coeff(int level, int bit) const {
    const CounterLevel& l = levels_[static_cast<size_t>(level)];
    if (bit == l.bits - 1) return l.remainder_coeff;
    return static_cast<double>(1 << bit);
}

LinearExpr VariableLayout::counter_value_expr(int level, int slack_position) const {
    LinearExpr expr;
    const CounterLevel& l = levels_[static_cast<size_t>(level)];
    for (int j = 0; j < l.bits; ++j)
        expr.add_term(counter_index(level, slack_position, j), counter_bit_coeff(level, j));
    return expr;
}

double VariableLayout::counter_value(int level, int slack_position, const Assignment& a) const {
    const CounterLevel& l = levels_[static_cast<size_t>(level)];
    double value = 0.0;
    for (int j = 0; j < l.bits; ++j)
        if (a[static_cast<size_t>(counter_index(level, slack_position, j))])
            value += counter_bit_coeff(level, j);
    return value;
}

int VariableLayout::counter_popcount(int level, int slack_position, const Assignment& a) const {
    const CounterLevel& l = levels_[static_cast<size_t>(level)];
    int count = 0;
    for (int j = 0; j < l.bits; ++j)
        count += a[static_cast<size_t>(counter_index(level, slack_position, j))] ? 1 : 0;
    return count;
}

std::optional<std::vector<std::uint8_t>> VariableLayout::encode_counter_value(int level,
                                                                              int value) const {
    const CounterLevel& l = levels_[static_cast<size_t>(level)];
    if (value < 0 || value > l.cap) return std::nullopt;
    std::vector<std::uint8_t> bits(static_cast<size_t>(l.bits), 0);
    const int plain_limit = 1 << (l.bits - 1);
    int rest = value;
    if (rest >= plain_limit) {
        bits[static_cast<size_t>(l.bits - 1)] = 1;
        rest -= static_cast<int>(l.remainder_coeff);
        if (rest < 0 || rest >= plain_limit) return std::nullopt;
    }
    for (int j = 0; j < l.bits - 1; ++j) bits[static_cast<size_t>(j)] = (rest >> j) & 1;
    return bits;
}

} // namespace stq
