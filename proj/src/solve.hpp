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

#include "problem.hpp"

namespace stq {

// Geometric inverse-temperature ramp. No schedule is problem-derived; the
// defaults reliably solve every desk-scale instance in the test suite.
struct AnnealSchedule {
    int sweeps = 1000;
    double beta_initial = 0.1;
    double beta_final = 10.0;
    int restarts = 100;
    std::uint64_t seed = 1;
};

struct SolveResult {
    Assignment assignment;
    double energy = 0.0;
};

// Coefficient arrays compiled for O(degree) single-flip energy deltas.
// phi[i] = linear_i + sum_j quadratic_{i,j} x_j is the local field of
// variable i; flipping i changes the energy by (1 - 2 x_i) * phi[i].
class FlipEvaluator {
public:
    explicit FlipEvaluator(const QuboModel& m);

    int num_vars() const { return static_cast<int>(linear_.size()); }
    double offset() const { return offset_; }
    double full_energy(const Assignment& a) const;
    std::vector<double> fields(const Assignment& a) const;

    double flip_delta(const Assignment& a, const std::vector<double>& phi, int i) const {
        return (a[static_cast<size_t>(i)] ? -1.0 : 1.0) * phi[static_cast<size_t>(i)];
    }
    // Flips bit i and updates the neighboring fields.
    void apply_flip(Assignment& a, std::vector<double>& phi, int i) const;

    // O(degree) recomputation without a field vector (reference for tests).
    double flip_delta_direct(const Assignment& a, int i) const;

private:
    double offset_ = 0.0;
    std::vector<double> linear_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

// Exact minimizer by Gray-code enumeration of all 2^N assignments,
// N <= 26 enforced. Ties break toward the lexicographically smallest
// bit vector.
SolveResult solve_exhaustive(const QuboModel& m);

// Metropolis single-bit-flip annealing with incremental deltas, a geometric
// beta ramp per restart, and a final steepest-descent pass (the result is
// always 1-flip locally optimal). Deterministic for a fixed seed: restart r
// draws its stream from seed and r, and results merge by (energy, bit
// vector) regardless of execution order. num_threads 0 picks the hardware
// concurrency.
SolveResult solve_anneal(const QuboModel& m, const AnnealSchedule& schedule, int num_threads = 0);

// Enumerates only constraint-satisfying encodings (vertex arrangements x
// attachment choices x canonical counters) and returns the lowest-energy
// one, or nullopt when no such encoding exists. Validates formulations whose
// full 2^N search is out of reach; n <= 7 enforced.
std::optional<SolveResult> solve_structured(const ProblemSpec& spec, const BuildResult& built);

} // namespace stq
