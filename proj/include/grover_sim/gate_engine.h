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

/**
 * @file
 * Circuit-level baseline engine. Every operator here is expanded into an
 * explicit list of gates, and every gate is one full pass over the state
 * vector, so the cost of a Grover iteration scales with the gate count.
 */

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "grover_sim/oracle_spec.h"
#include "grover_sim/qstate.h"

namespace grover_sim {

/// 2x2 unitary [[a11, a12], [a21, a22]]; construction checks U U^dagger = I to 1e-12.
class Unitary2x2 {
   public:
    Unitary2x2(Amplitude a11, Amplitude a12, Amplitude a21, Amplitude a22);

    static Unitary2x2 hadamard();
    static Unitary2x2 pauli_x();

    Amplitude a11() const { return a11_; }
    Amplitude a12() const { return a12_; }
    Amplitude a21() const { return a21_; }
    Amplitude a22() const { return a22_; }

   private:
    Amplitude a11_, a12_, a21_, a22_;
};

struct SingleQubitGate {
    Unitary2x2 u;
    unsigned target;
};

/// Z controlled on every qubit: negates basis state N-1 only.
struct MultiControlledZ {};

using GateOp = std::variant<SingleQubitGate, MultiControlledZ>;
using GateList = std::vector<GateOp>;

/// Calls visit(i0, i1) once for each basis pair differing only in bit `target`,
/// with i0 having that bit clear. Blocks are walked in ascending index order.
template <typename Visit>
void for_each_target_pair(std::size_t dim, unsigned target, Visit&& visit) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i0 = base; i0 < base + stride; ++i0) {
            visit(i0, i0 + stride);
        }
    }
}

/// One-pass butterfly: (c0, c1) <- (a11 c0 + a12 c1, a21 c0 + a22 c1) on every
/// pair of `target`. Throws IndexError if target >= num_qubits.
void apply_single_qubit_unitary(StateVector& state, const Unitary2x2& u, unsigned target);

/// H on qubits 0..n-1 in ascending order.
void hadamard_all(StateVector& state);

void multi_controlled_z(StateVector& state);

/// X-conjugated multi-controlled Z, one block per solution.
void gate_oracle(StateVector& state, const OracleSpec& oracle);

/// 2|0><0| - I as X^n, MCZ, then X on every qubit but the top one and -X on
/// the top one (2n + 1 gates).
void conditional_phase_shift(StateVector& state);

void apply_gate(StateVector& state, const GateOp& gate);
void apply_gates(StateVector& state, const GateList& gates);

GateList hadamard_layer(unsigned num_qubits);
GateList oracle_gates(unsigned num_qubits, const OracleSpec& oracle);
GateList phase_shift_gates(unsigned num_qubits);

struct GateCounts {
    std::size_t oracle_gates = 0;
    std::size_t phase_shift_gates = 0;
    std::size_t hadamard_gates = 0;

    /// Full passes over the state per Grover iteration.
    std::size_t total() const { return oracle_gates + phase_shift_gates + hadamard_gates; }

    bool operator==(const GateCounts&) const = default;
};

/// Gate applications one gate-engine Grover iteration performs.
GateCounts gate_counts(unsigned num_qubits, const OracleSpec& oracle);

}  // namespace grover_sim
