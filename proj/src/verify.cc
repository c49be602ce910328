// Copyright 2026 The grover-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grover_sim/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grover_sim/fast_engine.h"
#include "grover_sim/gate_engine.h"
#include "grover_sim/grover.h"

namespace grover_sim {

StateVector random_state(unsigned num_qubits, SplitMix64& rng) {
    StateVector state = StateVector::zero(num_qubits);
    auto gaussian = [&rng] {
        // Box-Muller; 1 - u keeps the log argument in (0, 1].
        const double u1 = 1.0 - rng.next_unit();
        const double u2 = rng.next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    };
    for (Amplitude& a : state.amplitudes()) {
        a = Amplitude{gaussian(), gaussian()};
    }
    const double scale = 1.0 / std::sqrt(norm_squared(state));
    for (Amplitude& a : state.amplitudes()) {
        a *= scale;
    }
    return state;
}

OracleSpec random_oracle(unsigned num_qubits, SplitMix64& rng) {
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    const std::uint64_t first = rng.next() % dim;
    if (dim < 4 || rng.next() % 2 == 0) {
        return OracleSpec({first});
    }
    std::uint64_t second = rng.next() % (dim - 1);
    if (second >= first) ++second;
    return OracleSpec({first, second});
}

std::vector<CheckResult> verify_engines(unsigned num_qubits, unsigned trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    CheckResult oracle_check{"gate oracle == phase-flip oracle", true, 0.0, 1e-12};
    CheckResult diffusion_check{"H.phase_shift.H == inversion about mean (mod phase)", true, 0.0,
                                1e-10};
    CheckResult run_check{"per-iteration engine agreement (mod phase)", true, 0.0, 1e-9};

    for (unsigned t = 0; t < trials; ++t) {
        const OracleSpec oracle = random_oracle(num_qubits, rng);

        StateVector via_gates = random_state(num_qubits, rng);
        StateVector via_flip = via_gates;
        gate_oracle(via_gates, oracle);
        phase_flip_oracle(via_flip, oracle);
        oracle_check.worst = std::max(oracle_check.worst, max_abs_difference(via_gates, via_flip));

        StateVector circuit = random_state(num_qubits, rng);
        StateVector direct = circuit;
        hadamard_all(circuit);
        conditional_phase_shift(circuit);
        hadamard_all(circuit);
        invert_about_mean(direct);
        diffusion_check.worst = std::max(diffusion_check.worst, phase_aligned_distance(circuit, direct));

        StateVector gate_state = prepare_uniform(num_qubits);
        StateVector fast_state = gate_state;
        const std::int64_t k_max = optimal_iterations(num_qubits, oracle.size());
        for (std::int64_t k = 0; k < k_max; ++k) {
            grover_step(gate_state, oracle, EngineKind::kGate);
            grover_step(fast_state, oracle, EngineKind::kFast);
            run_check.worst = std::max(run_check.worst, phase_aligned_distance(gate_state, fast_state));
        }
    }

    std::vector<CheckResult> results{oracle_check, diffusion_check, run_check};

    const unsigned dense_n = std::min(num_qubits, 10U);
    CheckResult dense_check{"inversion about mean == dense matrix (n=" + std::to_string(dense_n) + ")",
                            true, 0.0, 1e-12};
    const DenseMatrix delta = dense_diffusion_reference(dense_n);
    for (unsigned t = 0; t < trials; ++t) {
        StateVector s = random_state(dense_n, rng);
        const StateVector expected = apply_dense(delta, s);
        invert_about_mean(s);
        dense_check.worst = std::max(dense_check.worst, max_abs_difference(s, expected));
    }
    results.push_back(dense_check);

    const unsigned square_n = std::min(num_qubits, 6U);
    const DenseMatrix small = dense_diffusion_reference(square_n);
    CheckResult square_check{"dense matrix squared == identity (n=" + std::to_string(square_n) + ")",
                             true, 0.0, 1e-12};
    for (std::size_t i = 0; i < small.dim; ++i) {
        for (std::size_t j = 0; j < small.dim; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < small.dim; ++k) {
                acc += small(i, k) * small(k, j);
            }
            square_check.worst = std::max(square_check.worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    results.push_back(square_check);

    for (CheckResult& r : results) {
        r.passed = r.worst < r.tolerance;
    }
    return results;
}

}  // namespace grover_sim
