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

#include <sstream>
#include <string>
#include <vector>

#include "grover_sim/report_io.h"
#include "gtest/gtest.h"

using namespace grover_sim;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "grover_sim");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, search_text_fig2) {
    const CliResult r = invoke({"search", "--qubits", "3", "--solution", "5", "--engine", "fast"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("101   94.531%"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("000    0.781%"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("top: |101> 94.531%"), std::string::npos) << r.out;
}

TEST(cli, search_out_of_range_solution) {
    const CliResult r = invoke({"search", "--qubits", "3", "--solution", "9", "--engine", "fast"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("solution index out of range"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(cli, usage_errors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"search", "--qubits", "3"}).code, 2);
    EXPECT_EQ(invoke({"search", "--qubits", "x", "--solution", "1"}).code, 2);
    EXPECT_EQ(invoke({"search", "--qubits", "3", "--solution", "1", "--engine", "warp"}).code, 2);
    EXPECT_EQ(invoke({"search", "--qubits", "3", "--solution", "1", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"search", "--qubits", "3", "--solution", "1", "--solution", "1"}).code, 2);
    EXPECT_EQ(invoke({"search", "--qubits", "31", "--solution", "1"}).code, 2);
    EXPECT_EQ(invoke({"search", "--qubits", "3", "--solution", "1", "--shots", "0"}).code, 2);
    EXPECT_EQ(invoke({"bench", "--qubits", "3", "--repeats", "0"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(cli, search_json_schema_and_round_trip) {
    const CliResult r = invoke({"search", "--qubits", "3", "--solution", "5", "--engine", "gate",
                                "--shots", "1000", "--seed", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_FALSE(r.out.empty());
    EXPECT_EQ(r.out.back(), '\n');
    const std::string body = r.out.substr(0, r.out.size() - 1);

    const nlohmann::json doc = nlohmann::json::parse(body);
    EXPECT_EQ(canonical_dump(doc), body);

    EXPECT_EQ(doc["iterations_used"], 2);
    EXPECT_EQ(doc["top"]["state_bits"], "101");
    EXPECT_NEAR(doc["top"]["probability"].get<double>(), 0.9453125, 1e-9);
    ASSERT_EQ(doc["distribution"].size(), 8u);
    EXPECT_EQ(doc["config"]["engine"], "gate");
    EXPECT_EQ(doc["config"]["seed"], 7);
    EXPECT_TRUE(doc["config"]["iterations"].is_null());
    EXPECT_TRUE(doc["timings_ns"].is_object());
    EXPECT_TRUE(doc["timings_ns"].empty());
    std::uint64_t total = 0;
    for (const auto& [bits, count] : doc["histogram"].items()) {
        EXPECT_EQ(bits.size(), 3u);
        total += count.get<std::uint64_t>();
    }
    EXPECT_EQ(total, 1000u);
}

TEST(cli, search_json_with_timings) {
    const CliResult r = invoke({"search", "--qubits", "4", "--solution", "3", "--format", "json",
                                "--timings"});
    ASSERT_EQ(r.code, 0) << r.err;
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["timings_ns"].contains("diffusion"));
    EXPECT_TRUE(doc["timings_ns"]["diffusion"].is_number_integer());
}

TEST(cli, search_json_is_deterministic) {
    const std::vector<std::string> args{"search", "--qubits", "5", "--solution", "3", "--solution",
                                        "17", "--engine", "fast", "--shots", "2048", "--seed", "11",
                                        "--format", "json"};
    const CliResult a = invoke(args);
    const CliResult b = invoke(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(cli, search_csv) {
    const CliResult r = invoke({"search", "--qubits", "2", "--solution", "2", "--format", "csv",
                                "--shots", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "state,probability,count");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].substr(0, 3), "00,");
    EXPECT_EQ(rows[2].substr(0, 3), "10,");
    EXPECT_NEAR(std::stod(rows[2].substr(3)), 1.0, 1e-12);
    EXPECT_EQ(rows[2].substr(rows[2].rfind(',')), ",10");
}

TEST(cli, verify_passes) {
    const CliResult r = invoke({"verify", "--qubits", "6"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, bench_csv) {
    const CliResult r = invoke({"bench", "--qubits", "3,4", "--engines", "gate,fast", "--repeats",
                                "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("engine,num_qubits,iterations,median_ns,min_ns,repeats\ngate,3,2,", 0), 0u)
        << r.out;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(cli, bench_text) {
    const CliResult r = invoke({"bench", "--qubits", "3", "--engines", "fast", "--repeats", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("Proposed (fast)"), std::string::npos);
}

TEST(report_io, canonical_dump_round_trip_property) {
    // Doubles must come back bit-identical through %.17g and dump identically.
    nlohmann::json doc = nlohmann::json::object();
    doc["z"] = 1.0;
    doc["a"] = {0.1, 1.0 / 3.0, 1e-300, 123456789.0, -2.5e17, 0.0};
    doc["m"] = {{"k", nullptr}, {"b", true}, {"s", "quote\"d"}};
    doc["i"] = -42;
    const std::string first = canonical_dump(doc);
    EXPECT_EQ(first.substr(0, 6), "{\"a\":[");
    const nlohmann::json parsed = nlohmann::json::parse(first);
    EXPECT_EQ(canonical_dump(parsed), first);
    EXPECT_EQ(parsed["a"][1].get<double>(), 1.0 / 3.0);
    EXPECT_TRUE(parsed["z"].is_number_float());
}
