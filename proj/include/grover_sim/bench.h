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
#include <optional>
#include <string>
#include <vector>

#include "grover_sim/grover.h"

namespace grover_sim {

struct BenchRecord {
    unsigned num_qubits = 0;
    EngineKind engine = EngineKind::kFast;
    std::int64_t iterations = 0;
    std::int64_t wall_nanos_median = 0;
    std::int64_t wall_nanos_min = 0;
    std::uint32_t repeats = 0;
    /// Full state passes per iteration: oracle + phase shift + 2n Hadamards
    /// for the gate engine, 1 for the fast engine.
    std::size_t gate_factor = 1;
    /// Distribution of the last timed run, kept for cross-engine checks.
    std::vector<double> final_distribution;
};

/// One untimed warmup run, then `repeats` timed runs. Throws SpecError if repeats == 0.
BenchRecord time_run(const RunConfig& config, std::uint32_t repeats);

/// Which basis state the sweep searches for at each register size.
struct OracleRule {
    /// Absent: the mid-range index N/2 + 1.
    std::optional<std::uint64_t> fixed_index;

    std::uint64_t solution_for(unsigned num_qubits) const;
};

struct SweepResult {
    std::vector<BenchRecord> records;
    std::string table;
    std::string csv;
};

/// One record per (n, engine), n-major, engines in the order given.
SweepResult sweep(const std::vector<unsigned>& qubit_range, const OracleRule& rule,
                  const std::vector<EngineKind>& engines, std::uint32_t repeats = 3);

/// Aligned text table grouped by engine, one row per qubit count.
std::string render_table(const std::vector<BenchRecord>& records);

/// Header: engine,num_qubits,iterations,median_ns,min_ns,repeats
std::string render_csv(const std::vector<BenchRecord>& records);

}  // namespace grover_sim
