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

#include "grover_sim/grover.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "grover_sim/errors.h"
#include "grover_sim/fast_engine.h"

namespace grover_sim {

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
   public:
    explicit StageTimer(std::map<std::string, std::int64_t>* totals) : totals_(totals) {}

    template <typename Fn>
    void time(const char* stage, Fn&& fn) {
        if (totals_ == nullptr) {
            fn();
            return;
        }
        const auto start = Clock::now();
        fn();
        const auto elapsed = Clock::now() - start;
        (*totals_)[stage] += std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
    }

   private:
    std::map<std::string, std::int64_t>* totals_;
};

// The gate lists are built once per run so that the timed loop only measures
// gate application.
struct GateCircuits {
    GateList oracle;
    GateList hadamard;
    GateList phase_shift;
};

void gate_iteration(StateVector& state, const GateCircuits& c, StageTimer& timer) {
    timer.time("oracle", [&] { apply_gates(state, c.oracle); });
    timer.time("hadamard", [&] { apply_gates(state, c.hadamard); });
    timer.time("phase_shift", [&] { apply_gates(state, c.phase_shift); });
    timer.time("hadamard", [&] { apply_gates(state, c.hadamard); });
}

void fast_iteration(StateVector& state, const OracleSpec& oracle, StageTimer& timer) {
    timer.time("oracle", [&] { phase_flip_oracle(state, oracle); });
    timer.time("diffusion", [&] { invert_about_mean(state); });
}

}  // namespace

std::string_view engine_name(EngineKind engine) {
    return engine == EngineKind::kGate ? "gate" : "fast";
}

EngineKind parse_engine(std::string_view name) {
    if (name == "gate") return EngineKind::kGate;
    if (name == "fast") return EngineKind::kFast;
    throw SpecError("unknown engine '" + std::string(name) + "' (expected gate or fast)");
}

void RunConfig::validate() const {
    oracle.validate_for(num_qubits);
    if (iterations && *iterations < 0) {
        throw SpecError("iterations must be >= 0");
    }
    if (shots && *shots < 1) {
        throw SpecError("shots must be >= 1");
    }
}

std::int64_t optimal_iterations(unsigned num_qubits, std::uint64_t num_solutions) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (num_solutions == 0 || num_solutions >= dim) {
        throw SpecError("solution count must be in [1, N)");
    }
    const double ratio = static_cast<double>(dim) / static_cast<double>(num_solutions);
    return static_cast<std::int64_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

StateVector prepare_uniform(unsigned num_qubits) {
    StateVector state = StateVector::zero(num_qubits);
    hadamard_all(state);
    return state;
}

void grover_step(StateVector& state, const OracleSpec& oracle, EngineKind engine) {
    StageTimer untimed(nullptr);
    if (engine == EngineKind::kGate) {
        const unsigned n = state.num_qubits();
        const GateCircuits circuits{oracle_gates(n, oracle), hadamard_layer(n), phase_shift_gates(n)};
        gate_iteration(state, circuits, untimed);
    } else {
        fast_iteration(state, oracle, untimed);
    }
}

RunReport run(const RunConfig& config) {
    config.validate();
    const unsigned n = config.num_qubits;

    RunReport report;
    report.config = config;
    report.iterations_used =
        config.iterations ? *config.iterations : optimal_iterations(n, config.oracle.size());
    StageTimer timer(&report.per_stage_nanos);

    std::optional<StateVector> state;
    timer.time("prepare", [&] { state = prepare_uniform(n); });

    if (config.engine == EngineKind::kGate) {
        const GateCircuits circuits{oracle_gates(n, config.oracle), hadamard_layer(n),
                                    phase_shift_gates(n)};
        report.gate_counts = GateCounts{circuits.oracle.size(), circuits.phase_shift.size(),
                                        2 * circuits.hadamard.size()};
        for (std::int64_t k = 0; k < report.iterations_used; ++k) {
            gate_iteration(*state, circuits, timer);
        }
    } else {
        for (std::int64_t k = 0; k < report.iterations_used; ++k) {
            fast_iteration(*state, config.oracle, timer);
        }
    }

    timer.time("measure", [&] {
        report.final_distribution = distribution(*state);
        const auto top =
            std::max_element(report.final_distribution.begin(), report.final_distribution.end());
        report.top_state = static_cast<std::uint64_t>(top - report.final_distribution.begin());
        report.top_probability = *top;
        if (config.shots) {
            report.histogram = sample_distribution(report.final_distribution, *config.shots, config.seed);
        }
    });
    return report;
}

}  // namespace grover_sim
