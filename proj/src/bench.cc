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

#include "grover_sim/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "grover_sim/errors.h"

namespace grover_sim {

BenchRecord time_run(const RunConfig& config, std::uint32_t repeats) {
    if (repeats < 1) {
        throw SpecError("repeats must be >= 1");
    }
    using Clock = std::chrono::steady_clock;

    RunReport last = run(config);  // warmup
    std::vector<std::int64_t> samples;
    samples.reserve(repeats);
    for (std::uint32_t r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        last = run(config);
        samples.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    const std::int64_t median =
        samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;

    BenchRecord rec;
    rec.num_qubits = config.num_qubits;
    rec.engine = config.engine;
    rec.iterations = last.iterations_used;
    rec.wall_nanos_median = median;
    rec.wall_nanos_min = samples.front();
    rec.repeats = repeats;
    rec.gate_factor = config.engine == EngineKind::kGate
                          ? gate_counts(config.num_qubits, config.oracle).total()
                          : 1;
    rec.final_distribution = std::move(last.final_distribution);
    return rec;
}

std::uint64_t OracleRule::solution_for(unsigned num_qubits) const {
    if (fixed_index) {
        return *fixed_index;
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    // N/2 + 1 wraps to 0 only at n = 1, where {0, 1} is the whole space anyway.
    return (dim / 2 + 1) % dim;
}

SweepResult sweep(const std::vector<unsigned>& qubit_range, const OracleRule& rule,
                  const std::vector<EngineKind>& engines, std::uint32_t repeats) {
    SweepResult result;
    for (unsigned n : qubit_range) {
        for (EngineKind engine : engines) {
            RunConfig config;
            config.num_qubits = n;
            config.oracle = OracleSpec({rule.solution_for(n)});
            config.engine = engine;
            result.records.push_back(time_run(config, repeats));
        }
    }
    result.table = render_table(result.records);
    result.csv = render_csv(result.records);
    return result;
}

namespace {

// m:ss.uuuuuu
std::string format_minutes(std::int64_t nanos) {
    const double seconds = static_cast<double>(nanos) * 1e-9;
    const auto minutes = static_cast<long long>(seconds / 60.0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld:%09.6f", minutes, seconds - 60.0 * static_cast<double>(minutes));
    return buf;
}

std::string engine_title(EngineKind engine) {
    return engine == EngineKind::kGate ? "Conventional (gate)" : "Proposed (fast)";
}

}  // namespace

std::string render_table(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-20s | %8s | %10s | %12s | %12s | %6s\n", "Grover Search",
                  "# qubits", "iterations", "median", "min", "factor");
    out << line;
    out << std::string(83, '-') << '\n';
    for (EngineKind engine : {EngineKind::kGate, EngineKind::kFast}) {
        bool first = true;
        for (const BenchRecord& r : records) {
            if (r.engine != engine) continue;
            std::snprintf(line, sizeof line, "%-20s | %8u | %10lld | %12s | %12s | %6zu\n",
                          first ? engine_title(engine).c_str() : "", r.num_qubits,
                          static_cast<long long>(r.iterations),
                          format_minutes(r.wall_nanos_median).c_str(),
                          format_minutes(r.wall_nanos_min).c_str(), r.gate_factor);
            out << line;
            first = false;
        }
    }
    return out.str();
}

std::string render_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "engine,num_qubits,iterations,median_ns,min_ns,repeats\n";
    for (const BenchRecord& r : records) {
        out << engine_name(r.engine) << ',' << r.num_qubits << ',' << r.iterations << ','
            << r.wall_nanos_median << ',' << r.wall_nanos_min << ',' << r.repeats << '\n';
    }
    return out.str();
}

}  // namespace grover_sim
