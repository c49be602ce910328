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

#include <cstdint>
#include <string>
#include <vector>

#include "grover_sim/measure.h"
#include "grover_sim/oracle_spec.h"
#include "grover_sim/qstate.h"

namespace grover_sim {

/// Normalized state with i.i.d. Gaussian real and imaginary parts.
StateVector random_state(unsigned num_qubits, SplitMix64& rng);

/// 1 or 2 distinct solutions (chosen with equal odds) when the register
/// allows two; always 1 at n = 1.
OracleSpec random_oracle(unsigned num_qubits, SplitMix64& rng);

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Largest deviation observed, compared against `tolerance`.
    double worst = 0.0;
    double tolerance = 0.0;
};

/// Property checks that tie the two engines together and pin the fast
/// diffusion operator to its dense matrix:
///  - gate oracle == phase-flip oracle elementwise (1e-12)
///  - H^n . phase shift . H^n == inversion about the mean up to phase (1e-10)
///  - per-iteration agreement of full runs from the uniform state (1e-9)
///  - inversion about the mean == dense matrix product (1e-12, n <= 10)
///  - dense matrix squares to identity (1e-12, n <= 6)
std::vector<CheckResult> verify_engines(unsigned num_qubits, unsigned trials, std::uint64_t seed);

}  // namespace grover_sim
