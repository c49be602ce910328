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

#include "grover_sim/report_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grover_sim {

using nlohmann::json;

json report_to_json(const RunReport& report, TimingOutput timings) {
    const RunConfig& cfg = report.config;
    const unsigned n = cfg.num_qubits;

    json config = json::object();
    config["num_qubits"] = n;
    config["engine"] = std::string(engine_name(cfg.engine));
    config["solutions"] = json::array();
    for (std::uint64_t s : cfg.oracle.solutions()) {
        config["solutions"].push_back(basis_label(s, n));
    }
    config["iterations"] = cfg.iterations ? json(*cfg.iterations) : json(nullptr);
    config["shots"] = cfg.shots ? json(*cfg.shots) : json(nullptr);
    config["seed"] = cfg.seed;

    json doc = json::object();
    doc["config"] = std::move(config);
    doc["iterations_used"] = report.iterations_used;
    doc["distribution"] = report.final_distribution;
    doc["top"] = {{"state_bits", basis_label(report.top_state, n)},
                  {"probability", report.top_probability}};

    json stages = json::object();
    if (timings == TimingOutput::kInclude) {
        for (const auto& [stage, nanos] : report.per_stage_nanos) {
            stages[stage] = nanos;
        }
    }
    doc["timings_ns"] = std::move(stages);

    if (report.gate_counts) {
        doc["gate_counts"] = {{"oracle", report.gate_counts->oracle_gates},
                              {"phase_shift", report.gate_counts->phase_shift_gates},
                              {"hadamard", report.gate_counts->hadamard_gates}};
    }
    if (report.histogram) {
        json counts = json::object();
        for (const auto& [state, count] : report.histogram->counts) {
            counts[basis_label(state, n)] = count;
        }
        doc["histogram"] = std::move(counts);
    }
    return doc;
}

namespace {

void dump_double(double v, std::string& out) {
    if (!std::isfinite(v)) {
        throw std::domain_error("non-finite value in report");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    out += s;
}

void dump_into(const json& v, std::string& out) {
    switch (v.type()) {
        case json::value_t::null:
            out += "null";
            break;
        case json::value_t::boolean:
            out += v.get<bool>() ? "true" : "false";
            break;
        case json::value_t::number_integer:
            out += std::to_string(v.get<std::int64_t>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(v.get<std::uint64_t>());
            break;
        case json::value_t::number_float:
            dump_double(v.get<double>(), out);
            break;
        case json::value_t::string:
            out += v.dump();
            break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const json& item : v) {
                if (!first) out += ',';
                dump_into(item, out);
                first = false;
            }
            out += ']';
            break;
        }
        case json::value_t::object: {
            // nlohmann's default object type is a std::map, so items() is key-sorted.
            out += '{';
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out += ',';
                out += json(key).dump();
                out += ':';
                dump_into(item, out);
                first = false;
            }
            out += '}';
            break;
        }
        default:
            throw std::domain_error("unsupported JSON value in report");
    }
}

}  // namespace

std::string canonical_dump(const json& value) {
    std::string out;
    dump_into(value, out);
    return out;
}

std::string render_text_report(const RunReport& report, std::size_t max_rows) {
    const RunConfig& cfg = report.config;
    const unsigned n = cfg.num_qubits;
    const auto& probs = report.final_distribution;

    std::ostringstream out;
    out << "Grover search: " << n << " qubits, engine " << engine_name(cfg.engine) << ", "
        << report.iterations_used << " iterations, solutions {";
    for (std::size_t i = 0; i < cfg.oracle.solutions().size(); ++i) {
        out << (i ? ", " : "") << basis_label(cfg.oracle.solutions()[i], n);
    }
    out << "}\n";

    std::vector<std::size_t> rows(probs.size());
    std::iota(rows.begin(), rows.end(), 0);
    if (rows.size() > max_rows) {
        std::stable_sort(rows.begin(), rows.end(),
                         [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });
        rows.resize(max_rows);
        std::sort(rows.begin(), rows.end());
        out << "(showing the " << max_rows << " most likely of " << probs.size() << " states)\n";
    }

    constexpr int kBarWidth = 50;
    char line[256];
    for (std::size_t i : rows) {
        const double pct = 100.0 * probs[i];
        const int bar = static_cast<int>(std::lround(probs[i] * kBarWidth));
        std::snprintf(line, sizeof line, "%s %8.3f%% ", basis_label(i, n).c_str(), pct);
        out << line << std::string(static_cast<std::size_t>(bar), '#');
        if (report.histogram) {
            const auto it = report.histogram->counts.find(i);
            out << "  [" << (it == report.histogram->counts.end() ? 0 : it->second) << " shots]";
        }
        out << '\n';
    }
    std::snprintf(line, sizeof line, "top: |%s> %.3f%%\n", basis_label(report.top_state, n).c_str(),
                  100.0 * report.top_probability);
    out << line;
    if (report.histogram) {
        out << "shots: " << report.histogram->shots << " (seed " << cfg.seed << ")\n";
    }
    return out.str();
}

std::string render_csv_report(const RunReport& report) {
    const unsigned n = report.config.num_qubits;
    std::ostringstream out;
    out << (report.histogram ? "state,probability,count\n" : "state,probability\n");
    char prob[40];
    for (std::size_t i = 0; i < report.final_distribution.size(); ++i) {
        std::snprintf(prob, sizeof prob, "%.17g", report.final_distribution[i]);
        out << basis_label(i, n) << ',' << prob;
        if (report.histogram) {
            const auto it = report.histogram->counts.find(i);
            out << ',' << (it == report.histogram->counts.end() ? 0 : it->second);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace grover_sim
