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
 * Direct-operator engine: the Grover oracle and the diffusion operator are
 * applied as the linear maps they denote instead of being expanded into gates.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "grover_sim/oracle_spec.h"
#include "grover_sim/qstate.h"

namespace grover_sim {

/// Negates the amplitude of every solution. Touches |solutions| entries only.
void phase_flip_oracle(StateVector& state, const OracleSpec& oracle);

/// c_x <- 2<c> - c_x for every x, where <c> is the mean of all N amplitudes.
/// Two passes: an ascending-index sum, then the reflection.
void invert_about_mean(StateVector& state);

/// Largest register dense_diffusion_reference will materialize.
inline constexpr unsigned kMaxDenseQubits = 12;

/// Square row-major matrix of reals.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<double> entries;

    double operator()(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

/// The full N x N diffusion matrix: 2/N - 1 on the diagonal, 2/N elsewhere.
/// Test/verification use only; throws CapacityError above kMaxDenseQubits.
DenseMatrix dense_diffusion_reference(unsigned num_qubits);

/// Dense matrix-vector product, accumulated in ascending column order.
StateVector apply_dense(const DenseMatrix& m, const StateVector& state);

}  // namespace grover_sim
