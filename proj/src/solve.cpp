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

#include "solve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace stq {

FlipEvaluator::FlipEvaluator(const QuboModel& m)
    : offset_(m.offset()), linear_(m.linear_coeffs()), adjacency_(m.linear_coeffs().size()) {
    for (const auto& [key, coeff] : m.quadratic()) {
        if (coeff == 0.0) continue;
        adjacency_[static_cast<size_t>(key.first)].emplace_back(key.second, coeff);
        adjacency_[static_cast<size_t>(key.second)].emplace_back(key.first, coeff);
    }
}

double FlipEvaluator::full_energy(const Assignment& a) const {
    double value = offset_;
    for (size_t i = 0; i < linear_.size(); ++i) {
        if (!a[i]) continue;
        value += linear_[i];
        for (const auto& [j, coeff] : adjacency_[i]) {
            if (static_cast<size_t>(j) > i && a[static_cast<size_t>(j)]) value += coeff;
        }
    }
    return value;
}

std::vector<double> FlipEvaluator::fields(const Assignment& a) const {
    std::vector<double> phi(linear_);
    for (size_t i = 0; i < linear_.size(); ++i) {
        if (!a[i]) continue;
        for (const auto& [j, coeff] : adjacency_[i]) phi[static_cast<size_t>(j)] += coeff;
    }
    return phi;
}

void FlipEvaluator::apply_flip(Assignment& a, std::vector<double>& phi, int i) const {
    const double sign = a[static_cast<size_t>(i)] ? -1.0 : 1.0;
    a[static_cast<size_t>(i)] ^= 1;
    for (const auto& [j, coeff] : adjacency_[static_cast<size_t>(i)])
        phi[static_cast<size_t>(j)] += sign * coeff;
}

double FlipEvaluator::flip_delta_direct(const Assignment& a, int i) const {
    double field = linear_[static_cast<size_t>(i)];
    for (const auto& [j, coeff] : adjacency_[static_cast<size_t>(i)])
        if (a[static_cast<size_t>(j)]) field += coeff;
    return (a[static_cast<size_t>(i)] ? -1.0 : 1.0) * field;
}

namespace {

bool lex_less(const Assignment& a, const Assignment& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

SolveResult solve_exhaustive(const QuboModel& m) {
    const int n = m.num_vars();
    if (n > 26) throw std::invalid_argument("solve_exhaustive: model exceeds the 26-variable cap");
    if (n == 0) return {Assignment{}, m.offset()};

    const FlipEvaluator eval(m);
    Assignment current(static_cast<size_t>(n), 0);
    std::vector<double> phi = eval.fields(current);
    double energy = eval.full_energy(current);

    Assignment best = current;
    double best_energy = energy;
    const double eps = 1e-9 * std::max(1.0, std::abs(best_energy));

    // Gray-code walk: step t flips bit ctz(t), visiting every assignment once.
    const std::uint64_t states = 1ULL << n;
    for (std::uint64_t t = 1; t < states; ++t) {
        const int bit = std::countr_zero(t);
        energy += eval.flip_delta(current, phi, bit);
        eval.apply_flip(current, phi, bit);
        if (energy < best_energy + eps) {
            // re-anchor on an exact evaluation before comparing
            const double exact = eval.full_energy(current);
            if (exact < best_energy - eps) {
                best_energy = exact;
                best = current;
            } else if (std::abs(exact - best_energy) <= eps && lex_less(current, best)) {
                best_energy = exact;
                best = current;
            }
        }
    }
    return {std::move(best), best_energy};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SolveResult anneal_one_restart(const FlipEvaluator& eval, const AnnealSchedule& schedule,
                               int restart) {
    const int n = eval.num_vars();
    std::mt19937_64 rng(splitmix64(schedule.seed + 0x9E3779B97F4A7C15ULL *
                                                       static_cast<std::uint64_t>(restart + 1)));
    Assignment a(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = static_cast<std::uint8_t>(rng() & 1);
    std::vector<double> phi = eval.fields(a);

    const double ratio = schedule.beta_final / schedule.beta_initial;
    for (int sweep = 0; sweep < schedule.sweeps; ++sweep) {
        const double t = schedule.sweeps > 1
                             ? static_cast<double>(sweep) / static_cast<double>(schedule.sweeps - 1)
                             : 1.0;
        const double beta = schedule.beta_initial * std::pow(ratio, t);
        for (int i = 0; i < n; ++i) {
            const double delta = eval.flip_delta(a, phi, i);
            if (delta <= 0.0) {
                eval.apply_flip(a, phi, i);
                continue;
            }
            const double scaled = beta * delta;
            if (scaled > 44.0) continue; // exp(-44) is below any drawable uniform
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < std::exp(-scaled)) eval.apply_flip(a, phi, i);
        }
    }

    // steepest-descent finish: the result is 1-flip locally optimal
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n; ++i) {
            if (eval.flip_delta(a, phi, i) < -1e-12) {
                eval.apply_flip(a, phi, i);
                improved = true;
            }
        }
    }
    const double energy = eval.full_energy(a);
    return {std::move(a), energy};
}

void take_better(SolveResult& best, SolveResult&& candidate) {
    if (best.assignment.empty() || candidate.energy < best.energy ||
        (candidate.energy == best.energy && lex_less(candidate.assignment, best.assignment)))
        best = std::move(candidate);
}

} // namespace

SolveResult solve_anneal(const QuboModel& m, const AnnealSchedule& schedule, int num_threads) {
    if (schedule.sweeps < 1) throw std::invalid_argument("anneal: sweeps must be at least 1");
    if (schedule.restarts < 1) throw std::invalid_argument("anneal: restarts must be at least 1");
    if (!(schedule.beta_initial > 0.0) || schedule.beta_final < schedule.beta_initial)
        throw std::invalid_argument("anneal: need beta_final >= beta_initial > 0");
    if (m.num_vars() == 0) return {Assignment{}, m.offset()};

    const FlipEvaluator eval(m);
    if (num_threads <= 0)
        num_threads = static_cast<int>(std::thread::hardware_concurrency());
    num_threads = std::clamp(num_threads, 1, schedule.restarts);

    std::vector<SolveResult> chunk_best(static_cast<size_t>(num_threads));
    auto run_chunk = [&](int chunk) {
        SolveResult local;
        for (int r = chunk; r < schedule.restarts; r += num_threads)
            take_better(local, anneal_one_restart(eval, schedule, r));
        chunk_best[static_cast<size_t>(chunk)] = std::move(local);
    };

    if (num_threads == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(num_threads));
        for (int c = 0; c < num_threads; ++c) workers.emplace_back(run_chunk, c);
        for (std::thread& w : workers) w.join();
    }

    SolveResult best;
    for (SolveResult& candidate : chunk_best)
        if (!candidate.assignment.empty()) take_better(best, std::move(candidate));
    return best;
}

namespace {

// Enumerates attachment choices: position p >= 1 attaches to any q < p.
template <typename Fn>
void for_each_parent_function(int positions, std::vector<int>& parent, int p, Fn&& fn) {
    if (p == positions) {
        fn(parent);
        return;
    }
    for (int q = 0; q < p; ++q) {
        parent[static_cast<size_t>(p)] = q;
        for_each_parent_function(positions, parent, p + 1, fn);
    }
}

template <typename Fn>
void for_each_arrangement(int n, int k, std::vector<int>& order, std::vector<bool>& used,
                          Fn&& fn) {
    if (static_cast<int>(order.size()) == k) {
        fn(order);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        used[static_cast<size_t>(v)] = true;
        order.push_back(v);
        for_each_arrangement(n, k, order, used, fn);
        order.pop_back();
        used[static_cast<size_t>(v)] = false;
    }
}

} // namespace

std::optional<SolveResult> solve_structured(const ProblemSpec& spec, const BuildResult& built) {
    const VariableLayout& layout = built.layout;
    const int n = layout.num_vertices();
    const int positions = layout.num_positions();
    if (n > 7) throw std::invalid_argument("solve_structured: graphs above n = 7 are not supported");

    const FlipEvaluator eval(built.model);
    std::optional<SolveResult> best;
    std::vector<int> order;
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<int> parent(static_cast<size_t>(positions), -1);

    for_each_arrangement(n, positions, order, used, [&](const std::vector<int>& arrangement) {
        for_each_parent_function(positions, parent, 1, [&](const std::vector<int>& parents) {
            auto encoded = encode_solution(spec, layout, arrangement, parents);
            if (!encoded) return;
            SolveResult candidate{std::move(*encoded), 0.0};
            candidate.energy = eval.full_energy(candidate.assignment);
            if (!best) {
                best = std::move(candidate);
                return;
            }
            if (candidate.energy < best->energy ||
                (candidate.energy == best->energy &&
                 lex_less(candidate.assignment, best->assignment)))
                best = std::move(candidate);
        });
    });
    return best;
}

} // namespace stq
