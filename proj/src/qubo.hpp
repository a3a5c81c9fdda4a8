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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stq {

// One bit per variable, in flat index order.
using Assignment = std::vector<std::uint8_t>;

// constant + sum of coeff_i * x_i over binary variables. Building block for
// expanding squared penalty terms into a quadratic model.
class LinearExpr {
public:
    LinearExpr() = default;
    explicit LinearExpr(double constant) : constant_(constant) {}

    LinearExpr& add_constant(double c) {
        constant_ += c;
        return *this;
    }
    LinearExpr& add_term(int index, double coeff);

    double constant() const { return constant_; }
    const std::map<int, double>& terms() const { return terms_; }
    double value_at(const Assignment& a) const;

private:
    double constant_ = 0.0;
    std::map<int, double> terms_;
};

// Sparse quadratic pseudo-Boolean objective
//   energy(x) = offset + sum_i linear_i x_i + sum_{i<j} quadratic_{i,j} x_i x_j.
// Coefficients accumulate additively while building; finalize() drops exact
// zeros. Mutation is single-writer; evaluation and export are const and safe
// for concurrent readers.
class QuboModel {
public:
    explicit QuboModel(int num_vars);

    int num_vars() const { return num_vars_; }
    double offset() const { return offset_; }
    void add_offset(double c) { offset_ += c; }

    // Accumulates into the linear slot. Throws std::out_of_range on bad index.
    void add_term(int i, double coeff);
    // Accumulates into the quadratic slot; commutative in (i, j). A diagonal
    // term (i == j) folds into the linear slot since x^2 = x on binaries.
    void add_term(int i, int j, double coeff);

    // Adds weight * expr^2 expanded to quadratic form. weight must be > 0.
    void add_penalty_square(const LinearExpr& expr, double weight);

    // Accumulates all terms of other (same num_vars) into this model.
    void add_model(const QuboModel& other);

    // Drops exactly-zero stored coefficients.
    void finalize();

    // Exact polynomial value; throws std::invalid_argument on length mismatch.
    double energy(const Assignment& a) const;

    int num_linear_terms() const;
    int num_quadratic_terms() const { return static_cast<int>(quadratic_.size()); }
    double linear(int i) const { return linear_[static_cast<size_t>(i)]; }
    const std::vector<double>& linear_coeffs() const { return linear_; }
    const std::map<std::pair<int, int>, double>& quadratic() const { return quadratic_; }

private:
    int num_vars_;
    double offset_ = 0.0;
    std::vector<double> linear_;
    std::map<std::pair<int, int>, double> quadratic_; // keys with i < j
};

// Spin model over sigma_i in {-1, +1}:
//   energy(sigma) = offset - sum_{i<j} J_{i,j} sigma_i sigma_j - mu * sum_i h_i sigma_i
struct IsingModel {
    int num_vars = 0;
    double offset = 0.0;
    double mu = 1.0;
    std::vector<double> fields;                        // h_i
    std::map<std::pair<int, int>, double> couplings;   // J_{i,j}, i < j

    double energy(const std::vector<int>& spins) const;
};

// Maps x_i -> sigma_i = 2 x_i - 1 so that energies agree on every assignment.
IsingModel to_ising(const QuboModel& m);

// Sparse text export: a leading comment, one "p qubo 0 <vars> <linear>
// <quadratic>" line, "<i> <i> <a_i>" lines, "<i> <j> <b_ij>" lines with
// i < j (0-based, ascending), and a trailing "c offset <value>" comment.
std::string to_qubo_text(const QuboModel& m);

// Inverse of to_qubo_text. Throws std::invalid_argument on malformed input.
QuboModel parse_qubo_text(std::string_view text);

} // namespace stq
