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

#include "grover_sim/gate_engine.h"

#include <cmath>
#include <string>

#include "grover_sim/errors.h"

namespace grover_sim {

namespace {

constexpr double kUnitarityTolerance = 1e-12;

// Plain complex product; std::complex's operator* routes through the
// Annex G NaN/Inf recovery path, which we never need for finite amplitudes.
inline Amplitude mul(Amplitude a, Amplitude b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

Unitary2x2::Unitary2x2(Amplitude a11, Amplitude a12, Amplitude a21, Amplitude a22)
    : a11_(a11), a12_(a12), a21_(a21), a22_(a22) {
    // Rows of U must be orthonormal for U U^dagger = I.
    const Amplitude p11 = a11 * std::conj(a11) + a12 * std::conj(a12);
    const Amplitude p12 = a11 * std::conj(a21) + a12 * std::conj(a22);
    const Amplitude p22 = a21 * std::conj(a21) + a22 * std::conj(a22);
    if (std::abs(p11 - 1.0) > kUnitarityTolerance || std::abs(p22 - 1.0) > kUnitarityTolerance ||
        std::abs(p12) > kUnitarityTolerance) {
        throw SpecError("matrix is not unitary");
    }
}

Unitary2x2 Unitary2x2::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return Unitary2x2({h, 0}, {h, 0}, {h, 0}, {-h, 0});
}

Unitary2x2 Unitary2x2::pauli_x() { return Unitary2x2({0, 0}, {1, 0}, {1, 0}, {0, 0}); }

void apply_single_qubit_unitary(StateVector& state, const Unitary2x2& u, unsigned target) {
    if (target >= state.num_qubits()) {
        throw IndexError("target qubit " + std::to_string(target) + " out of range for " +
                         std::to_string(state.num_qubits()) + " qubits");
    }
    const Amplitude a11 = u.a11(), a12 = u.a12(), a21 = u.a21(), a22 = u.a22();
    auto amps = state.amplitudes();
    for_each_target_pair(amps.size(), target, [&](std::size_t i0, std::size_t i1) {
        const Amplitude c0 = amps[i0];
        const Amplitude c1 = amps[i1];
        amps[i0] = mul(a11, c0) + mul(a12, c1);
        amps[i1] = mul(a21, c0) + mul(a22, c1);
    });
}

void multi_controlled_z(StateVector& state) {
    auto amps = state.amplitudes();
    const std::size_t controls = amps.size() - 1;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & controls) == controls) {
            amps[i] = -amps[i];
        }
    }
}

void apply_gate(StateVector& state, const GateOp& gate) {
    std::visit(Overloaded{
                   [&](const SingleQubitGate& g) { apply_single_qubit_unitary(state, g.u, g.target); },
                   [&](const MultiControlledZ&) { multi_controlled_z(state); },
               },
               gate);
}

void apply_gates(StateVector& state, const GateList& gates) {
    for (const GateOp& g : gates) {
        apply_gate(state, g);
    }
}

GateList hadamard_layer(unsigned num_qubits) {
    GateList gates;
    gates.reserve(num_qubits);
    const Unitary2x2 h = Unitary2x2::hadamard();
    for (unsigned q = 0; q < num_qubits; ++q) {
        gates.emplace_back(SingleQubitGate{h, q});
    }
    return gates;
}

GateList oracle_gates(unsigned num_qubits, const OracleSpec& oracle) {
    oracle.validate_for(num_qubits);
    const Unitary2x2 x = Unitary2x2::pauli_x();
    GateList gates;
    for (std::uint64_t s : oracle.solutions()) {
        GateList flips;
        for (unsigned q = 0; q < num_qubits; ++q) {
            if (((s >> q) & 1U) == 0) {
                flips.emplace_back(SingleQubitGate{x, q});
            }
        }
        gates.insert(gates.end(), flips.begin(), flips.end());
        gates.emplace_back(MultiControlledZ{});
        gates.insert(gates.end(), flips.begin(), flips.end());
    }
    return gates;
}

GateList phase_shift_gates(unsigned num_qubits) {
    const Unitary2x2 x = Unitary2x2::pauli_x();
    GateList gates;
    gates.reserve(2 * num_qubits + 1);
    for (unsigned q = 0; q < num_qubits; ++q) {
        gates.emplace_back(SingleQubitGate{x, q});
    }
    gates.emplace_back(MultiControlledZ{});
    // X^n MCZ X^n alone is I - 2|0><0|; closing with -X on the top qubit
    // absorbs the global phase -1 without adding a gate.
    for (unsigned q = 0; q + 1 < num_qubits; ++q) {
        gates.emplace_back(SingleQubitGate{x, q});
    }
    gates.emplace_back(SingleQubitGate{Unitary2x2({0, 0}, {-1, 0}, {-1, 0}, {0, 0}), num_qubits - 1});
    return gates;
}

void hadamard_all(StateVector& state) { apply_gates(state, hadamard_layer(state.num_qubits())); }

void gate_oracle(StateVector& state, const OracleSpec& oracle) {
    apply_gates(state, oracle_gates(state.num_qubits(), oracle));
}

void conditional_phase_shift(StateVector& state) {
    apply_gates(state, phase_shift_gates(state.num_qubits()));
}

GateCounts gate_counts(unsigned num_qubits, const OracleSpec& oracle) {
    return GateCounts{
        .oracle_gates = oracle_gates(num_qubits, oracle).size(),
        .phase_shift_gates = phase_shift_gates(num_qubits).size(),
        // One H layer on each side of the phase shift.
        .hadamard_gates = 2 * hadamard_layer(num_qubits).size(),
    };
}

}  // namespace grover_sim
