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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grover_sim/gate_engine.h"
#include "grover_sim/measure.h"
#include "grover_sim/oracle_spec.h"
#include "grover_sim/qstate.h"

namespace grover_sim {

enum class EngineKind { kGate, kFast };

std::string_view engine_name(EngineKind engine);
/// "gate" or "fast"; throws SpecError otherwise.
EngineKind parse_engine(std::string_view name);

struct RunConfig {
    unsigned num_qubits = 1;
    OracleSpec oracle{{0}};
    EngineKind engine = EngineKind::kFast;
    /// Absent: optimal_iterations(num_qubits, |solutions|).
    std::optional<std::int64_t> iterations;
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;

    /// Throws SpecError / IndexError / CapacityError on an unusable config.
    void validate() const;
};

struct RunReport {
    RunConfig config;
    std::int64_t iterations_used = 0;
    std::vector<double> final_distribution;
    std::uint64_t top_state = 0;
    double top_probability = 0.0;
    /// Accumulated monotonic-clock time per stage name.
    std::map<std::string, std::int64_t> per_stage_nanos;
    std::optional<GateCounts> gate_counts;
    std::optional<Histogram> histogram;
};

/// floor((pi/4) * sqrt(N / num_solutions)). Throws SpecError unless
/// 1 <= num_solutions < N.
std::int64_t optimal_iterations(unsigned num_qubits, std::uint64_t num_solutions);

/// H^n |0...0>, built with the gate-level Hadamard for both engines.
StateVector prepare_uniform(unsigned num_qubits);

/// One Grover iteration with the chosen engine.
///   gate: oracle gates, H^n, conditional phase shift, H^n
///   fast: phase flip, inversion about the mean
void grover_step(StateVector& state, const OracleSpec& oracle, EngineKind engine);

/// Full search: prepare, iterate, measure.
RunReport run(const RunConfig& config);

}  // namespace grover_sim
