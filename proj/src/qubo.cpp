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

#include "qubo.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stq {

LinearExpr& LinearExpr::add_term(int index, double coeff) {
    if (index < 0) throw std::out_of_range("LinearExpr: negative variable index");
    terms_[index] += coeff;
    return *this;
}

double LinearExpr::value_at(const Assignment& a) const {
    double value = constant_;
    for (const auto& [index, coeff] : terms_) {
        if (a[static_cast<size_t>(index)]) value += coeff;
    }
    return value;
}

QuboModel::QuboModel(int num_vars) : num_vars_(num_vars), linear_(static_cast<size_t>(num_vars), 0.0) {
    if (num_vars < 0) throw std::invalid_argument("QuboModel: negative variable count");
}

void QuboModel::add_term(int i, double coeff) {
    if (i < 0 || i >= num_vars_) throw std::out_of_range("QuboModel: variable index out of range");
    linear_[static_cast<size_t>(i)] += coeff;
}

void QuboModel::add_term(int i, int j, double coeff) {
    if (i < 0 || i >= num_vars_ || j < 0 || j >= num_vars_)
        throw std::out_of_range("QuboModel: variable index out of range");
    if (i == j) {
        linear_[static_cast<size_t>(i)] += coeff;
        return;
    }
    if (i > j) std::swap(i, j);
    quadratic_[{i, j}] += coeff;
}

void QuboModel::add_penalty_square(const LinearExpr& expr, double weight) {
    if (!(weight > 0.0)) throw std::invalid_argument("penalty weight must be positive");
    const double c = expr.constant();
    offset_ += weight * c * c;
    for (auto it = expr.terms().begin(); it != expr.terms().end(); ++it) {
        const auto [i, alpha] = *it;
        add_term(i, weight * (alpha * alpha + 2.0 * c * alpha));
        for (auto jt = std::next(it); jt != expr.terms().end(); ++jt) {
            const auto [j, beta] = *jt;
            add_term(i, j, weight * 2.0 * alpha * beta);
        }
    }
}

void QuboModel::add_model(const QuboModel& other) {
    if (other.num_vars_ != num_vars_)
        throw std::invalid_argument("add_model: variable counts differ");
    offset_ += other.offset_;
    for (int i = 0; i < num_vars_; ++i) linear_[static_cast<size_t>(i)] += other.linear_[static_cast<size_t>(i)];
    for (const auto& [key, coeff] : other.quadratic_) quadratic_[key] += coeff;
}

void QuboModel::finalize() {
    for (auto it = quadratic_.begin(); it != quadratic_.end();) {
        if (it->second == 0.0)
            it = quadratic_.erase(it);
        else
            ++it;
    }
}

double QuboModel::energy(const Assignment& a) const {
    if (static_cast<int>(a.size()) != num_vars_)
        throw std::invalid_argument("energy: assignment length mismatch");
    double value = offset_;
    for (int i = 0; i < num_vars_; ++i) {
        if (a[static_cast<size_t>(i)]) value += linear_[static_cast<size_t>(i)];
    }
    for (const auto& [key, coeff] : quadratic_) {
        if (a[static_cast<size_t>(key.first)] && a[static_cast<size_t>(key.second)]) value += coeff;
    }
    return value;
}

int QuboModel::num_linear_terms() const {
    int count = 0;
    for (double c : linear_)
        if (c != 0.0) ++count;
    return count;
}

double IsingModel::energy(const std::vector<int>& spins) const {
    if (static_cast<int>(spins.size()) != num_vars)
        throw std::invalid_argument("energy: spin vector length mismatch");
    double value = offset;
    for (const auto& [key, J] : couplings)
        value -= J * spins[static_cast<size_t>(key.first)] * spins[static_cast<size_t>(key.second)];
    for (int i = 0; i < num_vars; ++i) value -= mu * fields[static_cast<size_t>(i)] * spins[static_cast<size_t>(i)];
    return value;
}

IsingModel to_ising(const QuboModel& m) {
    // With x = (sigma + 1) / 2:
    //   a_i x_i             -> a_i/2 + (a_i/2) sigma_i
    //   b_ij x_i x_j        -> b_ij/4 (1 + sigma_i + sigma_j + sigma_i sigma_j)
    // matched against offset - sum J sigma sigma - mu sum h sigma with mu = 1.
    IsingModel ising;
    ising.num_vars = m.num_vars();
    ising.mu = 1.0;
    ising.fields.assign(static_cast<size_t>(m.num_vars()), 0.0);
    ising.offset = m.offset();
    for (int i = 0; i < m.num_vars(); ++i) {
        const double a = m.linear(i);
        ising.offset += a / 2.0;
        ising.fields[static_cast<size_t>(i)] -= a / 2.0;
    }
    for (const auto& [key, b] : m.quadratic()) {
        ising.offset += b / 4.0;
        ising.fields[static_cast<size_t>(key.first)] -= b / 4.0;
        ising.fields[static_cast<size_t>(key.second)] -= b / 4.0;
        ising.couplings[key] -= b / 4.0;
    }
    return ising;
}

namespace {

std::string format_double(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

} // namespace

std::string to_qubo_text(const QuboModel& m) {
    std::string out = "c stqubo qubo export\n";
    out += "p qubo 0 " + std::to_string(m.num_vars()) + " " + std::to_string(m.num_linear_terms()) +
           " " + std::to_string(m.num_quadratic_terms()) + "\n";
    for (int i = 0; i < m.num_vars(); ++i) {
        const double a = m.linear(i);
        if (a != 0.0) out += std::to_string(i) + " " + std::to_string(i) + " " + format_double(a) + "\n";
    }
    for (const auto& [key, b] : m.quadratic()) {
        out += std::to_string(key.first) + " " + std::to_string(key.second) + " " +
               format_double(b) + "\n";
    }
    out += "c offset " + format_double(m.offset()) + "\n";
    return out;
}

QuboModel parse_qubo_text(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    bool have_header = false;
    int num_vars = 0;
    long expect_linear = 0, expect_quadratic = 0;
    double offset = 0.0;
    std::vector<std::tuple<int, int, double>> terms;

    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream fields(line);
            std::string c, word;
            if (fields >> c >> word && word == "offset") {
                if (!(fields >> offset)) throw std::invalid_argument("qubo text: bad offset comment");
            }
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream fields(line);
            std::string p, fmt;
            int zero = 0;
            if (!(fields >> p >> fmt >> zero >> num_vars >> expect_linear >> expect_quadratic) ||
                fmt != "qubo")
                throw std::invalid_argument("qubo text: malformed problem line");
            have_header = true;
            continue;
        }
        if (!have_header) throw std::invalid_argument("qubo text: term before problem line");
        std::istringstream fields(line);
        int i = 0, j = 0;
        double coeff = 0.0;
        if (!(fields >> i >> j >> coeff)) throw std::invalid_argument("qubo text: malformed term line");
        terms.emplace_back(i, j, coeff);
    }
    if (!have_header) throw std::invalid_argument("qubo text: missing problem line");

    QuboModel m(num_vars);
    m.add_offset(offset);
    long n_linear = 0, n_quadratic = 0;
    for (const auto& [i, j, coeff] : terms) {
        if (i == j) {
            m.add_term(i, coeff);
            ++n_linear;
        } else {
            m.add_term(i, j, coeff);
            ++n_quadratic;
        }
    }
    if (n_linear != expect_linear || n_quadratic != expect_quadratic)
        throw std::invalid_argument("qubo text: term counts disagree with problem line");
    m.finalize();
    return m;
}

} // namespace stq
