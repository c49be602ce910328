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

#include <stdexcept>
#include <string>

namespace grover_sim {

/// Requested size exceeds what the simulator will allocate (or is below 1 qubit).
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Two operands disagree on qubit count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A qubit or basis-state index does not exist in the state it addresses.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed configuration: empty oracle, duplicate solutions, zero shots, ...
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace grover_sim
