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

#include "grover_sim/qstate.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "grover_sim/errors.h"

namespace grover_sim {

StateVector StateVector::zero(unsigned num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    amps[0] = Amplitude{1.0, 0.0};
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    const std::size_t n = amps.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw DimensionError("amplitude count " + std::to_string(n) +
                             " is not a power of two >= 2");
    }
    const auto num_qubits = static_cast<unsigned>(std::countr_zero(n));
    if (num_qubits > kMaxQubits) {
        throw CapacityError("state exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector new_zero_state(unsigned num_qubits) { return StateVector::zero(num_qubits); }

double norm_squared(const StateVector& state) {
    double total = 0.0;
    for (const Amplitude& a : state.amplitudes()) {
        total += a.real() * a.real() + a.imag() * a.imag();
    }
    return total;
}

double max_abs_imag(const StateVector& state) {
    double worst = 0.0;
    for (const Amplitude& a : state.amplitudes()) {
        worst = std::max(worst, std::abs(a.imag()));
    }
    return worst;
}

namespace {

void require_same_shape(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("qubit count mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                             std::to_string(b.num_qubits()));
    }
}

// max_i |a[i] - phase * b[i]| with the phase pinned on a's dominant amplitude.
double aligned_distance_one_way(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    std::size_t pivot = 0;
    double pivot_mag = -1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double m = std::norm(a[i]);
        if (m > pivot_mag) {
            pivot_mag = m;
            pivot = i;
        }
    }
    Amplitude phase{1.0, 0.0};
    const double b_mag = std::abs(b[pivot]);
    if (b_mag > 0.0 && pivot_mag > 0.0) {
        // Unit scalar rotating b[pivot] onto a[pivot].
        phase = (a[pivot] * std::conj(b[pivot])) / (std::sqrt(pivot_mag) * b_mag);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

}  // namespace

double phase_aligned_distance(const StateVector& a, const StateVector& b) {
    require_same_shape(a, b);
    return std::max(aligned_distance_one_way(a.amplitudes(), b.amplitudes()),
                    aligned_distance_one_way(b.amplitudes(), a.amplitudes()));
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
    require_same_shape(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::string basis_label(std::uint64_t index, unsigned num_qubits) {
    std::string bits(num_qubits, '0');
    for (unsigned q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) {
            bits[num_qubits - 1 - q] = '1';
        }
    }
    return bits;
}

}  // namespace grover_sim
