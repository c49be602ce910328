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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace grover_sim {

using Amplitude = std::complex<double>;

/// Largest register the simulator will allocate (16 GiB of amplitudes).
inline constexpr unsigned kMaxQubits = 30;

/// Default absolute tolerance for amplitude comparisons.
inline constexpr double kAmplitudeTolerance = 1e-9;

/// Dense state vector: 2^n amplitudes stored contiguously, indexed by basis state.
///
/// Bit q of a basis index is the value of qubit q, so the big-endian bitstring
/// "101" names index 5.
class StateVector {
   public:
    /// |0...0> on `num_qubits` qubits. Throws CapacityError outside [1, kMaxQubits].
    static StateVector zero(unsigned num_qubits);

    /// Adopts `amps` as the state. The length must be a power of two >= 2;
    /// the amplitudes are taken as-is (no renormalization).
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }

    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    bool operator==(const StateVector&) const = default;

   private:
    StateVector(unsigned num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    unsigned num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Free-function spelling of StateVector::zero.
StateVector new_zero_state(unsigned num_qubits);

/// Sum of |amp|^2, accumulated in ascending index order.
double norm_squared(const StateVector& state);

/// Largest |im| over all amplitudes.
double max_abs_imag(const StateVector& state);

/// Distance between two states modulo a global phase.
///
/// The phase is fixed by aligning on the largest-magnitude amplitude of the
/// first operand; the result is max_i |a[i] - phase * b[i]|. The measure is
/// evaluated in both directions and the larger value is returned, so it is
/// exactly symmetric. Throws DimensionError on qubit-count mismatch.
double phase_aligned_distance(const StateVector& a, const StateVector& b);

/// Plain elementwise max |a[i] - b[i]| (no phase alignment).
double max_abs_difference(const StateVector& a, const StateVector& b);

/// Big-endian bitstring of `index` with `num_qubits` characters.
std::string basis_label(std::uint64_t index, unsigned num_qubits);

}  // namespace grover_sim
