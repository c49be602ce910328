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

#include "grover_sim/cli.h"

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grover_sim/bench.h"
#include "grover_sim/errors.h"
#include "grover_sim/grover.h"
#include "grover_sim/report_io.h"
#include "grover_sim/verify.h"

namespace grover_sim::cli {

namespace {

enum class OutputFormat { kText, kJson, kCsv };

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::kText},
    {"text-histogram", OutputFormat::kText},
    {"json", OutputFormat::kJson},
    {"csv", OutputFormat::kCsv},
};

struct SearchArgs {
    unsigned qubits = 0;
    std::vector<std::uint64_t> solutions;
    std::string engine = "fast";
    std::optional<std::int64_t> iterations;
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::kText;
    bool timings = false;
};

struct VerifyArgs {
    unsigned qubits = 0;
    unsigned trials = 20;
    std::uint64_t seed = 0;
};

struct BenchArgs {
    std::vector<unsigned> qubits{10, 16, 18, 20};
    std::vector<std::string> engines{"gate", "fast"};
    std::uint32_t repeats = 3;
    std::optional<std::uint64_t> solution;
    OutputFormat format = OutputFormat::kText;
};

int do_search(const SearchArgs& args, std::ostream& out) {
    RunConfig config;
    config.num_qubits = args.qubits;
    config.oracle = OracleSpec(args.solutions);
    config.engine = parse_engine(args.engine);
    config.iterations = args.iterations;
    config.shots = args.shots;
    config.seed = args.seed;

    const RunReport report = run(config);
    switch (args.format) {
        case OutputFormat::kText:
            out << render_text_report(report);
            break;
        case OutputFormat::kJson:
            out << canonical_dump(report_to_json(
                       report, args.timings ? TimingOutput::kInclude : TimingOutput::kOmit))
                << '\n';
            break;
        case OutputFormat::kCsv:
            out << render_csv_report(report);
            break;
    }
    return kExitOk;
}

int do_verify(const VerifyArgs& args, std::ostream& out) {
    // Surface capacity problems as usage errors before any work starts.
    (void)StateVector::zero(args.qubits);
    const auto results = verify_engines(args.qubits, args.trials, args.seed);
    bool all_passed = true;
    char line[256];
    for (const CheckResult& r : results) {
        std::snprintf(line, sizeof line, "[%s] %s: worst %.3e (tol %.0e)\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.tolerance);
        out << line;
        all_passed = all_passed && r.passed;
    }
    out << (all_passed ? "verify: all checks passed\n" : "verify: FAILED\n");
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int do_bench(const BenchArgs& args, std::ostream& out) {
    std::vector<EngineKind> engines;
    for (const std::string& e : args.engines) {
        engines.push_back(parse_engine(e));
    }
    for (unsigned n : args.qubits) {
        (void)StateVector::zero(n);
    }
    const SweepResult result = sweep(args.qubits, OracleRule{args.solution}, engines, args.repeats);
    switch (args.format) {
        case OutputFormat::kText:
            out << result.table;
            break;
        case OutputFormat::kCsv:
            out << result.csv;
            break;
        case OutputFormat::kJson: {
            nlohmann::json rows = nlohmann::json::array();
            for (const BenchRecord& r : result.records) {
                rows.push_back({{"engine", std::string(engine_name(r.engine))},
                                {"num_qubits", r.num_qubits},
                                {"iterations", r.iterations},
                                {"median_ns", r.wall_nanos_median},
                                {"min_ns", r.wall_nanos_min},
                                {"repeats", r.repeats},
                                {"gate_factor", r.gate_factor}});
            }
            out << canonical_dump(rows) << '\n';
            break;
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grover search state-vector simulator (gate-level and direct-operator engines)",
                 "grover_sim"};
    app.require_subcommand(1);

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand("search", "Run one Grover search and print the report");
    search->add_option("--qubits,-n", search_args.qubits, "Register width")->required();
    search->add_option("--solution,-s", search_args.solutions, "Marked basis index (repeatable)")
        ->required()
        ->take_all();
    search->add_option("--engine,-e", search_args.engine, "gate or fast")
        ->check(CLI::IsMember({"gate", "fast"}));
    search->add_option("--iterations,-k", search_args.iterations,
                       "Grover iterations (default: floor(pi/4 sqrt(N/M)))");
    search->add_option("--shots", search_args.shots, "Measurement shots to sample");
    search->add_option("--seed", search_args.seed, "Sampling seed");
    search->add_option("--format,-f", search_args.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    search->add_flag("--timings", search_args.timings, "Include stage timings in JSON output");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Cross-check both engines and the dense operator");
    verify->add_option("--qubits,-n", verify_args.qubits, "Register width")->required();
    verify->add_option("--trials,-t", verify_args.trials, "Random oracles/states per check");
    verify->add_option("--seed", verify_args.seed, "Generator seed");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Time full searches across register widths");
    bench->add_option("--qubits,-n", bench_args.qubits, "Comma-separated register widths")
        ->delimiter(',');
    bench->add_option("--engines,-e", bench_args.engines, "Comma-separated engines")
        ->delimiter(',')
        ->check(CLI::IsMember({"gate", "fast"}));
    bench->add_option("--repeats,-r", bench_args.repeats, "Timed repeats per point")
        ->check(CLI::PositiveNumber);
    bench->add_option("--solution", bench_args.solution, "Fixed marked index (default N/2+1)");
    bench->add_option("--format,-f", bench_args.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "grover_sim: " << e.what() << "\n";
        err << "Run with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (*search) return do_search(search_args, out);
        if (*verify) return do_verify(verify_args, out);
        if (*bench) return do_bench(bench_args, out);
    } catch (const IndexError& e) {
        err << "grover_sim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecError& e) {
        err << "grover_sim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "grover_sim: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace grover_sim::cli
