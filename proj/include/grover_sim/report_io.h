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
 * Serialization of run reports.
 *
 * JSON output is canonical: object keys in lexicographic order, no
 * whitespace, integers printed exactly, and doubles printed with up to 17
 * significant digits (always with a '.' or exponent, so they re-parse as
 * doubles). Parsing a canonical document and dumping it again reproduces the
 * same bytes.
 */

#pragma once

#include <string>

#include "json.hpp"

#include "grover_sim/grover.h"

namespace grover_sim {

/// Wall-clock stage timings vary between runs; leave them out (empty
/// "timings_ns" object) when byte-stable output is wanted.
enum class TimingOutput { kOmit, kInclude };

nlohmann::json report_to_json(const RunReport& report, TimingOutput timings);

std::string canonical_dump(const nlohmann::json& value);

/// Bar chart of the distribution in percent (3 decimals), states as bitstrings.
/// Registers above `max_rows` states list only the `max_rows` most likely ones.
std::string render_text_report(const RunReport& report, std::size_t max_rows = 64);

/// state,probability[,count] rows in basis order.
std::string render_csv_report(const RunReport& report);

}  // namespace grover_sim
