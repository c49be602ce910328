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
#include <span>
#include <vector>

namespace grover_sim {

/// The marked basis states of a search problem, kept strictly increasing.
///
/// Construction rejects an empty set and duplicates (SpecError). Range checks
/// against a particular register happen in `validate_for`, because the same
/// spec object is meaningful for any register wide enough to hold it.
class OracleSpec {
   public:
    explicit OracleSpec(std::vector<std::uint64_t> solutions);

    std::span<const std::uint64_t> solutions() const { return solutions_; }
    std::size_t size() const { return solutions_.size(); }
    std::uint64_t largest() const { return solutions_.back(); }

    /// Throws IndexError if any solution is >= 2^num_qubits and SpecError if
    /// the spec marks every basis state.
    void validate_for(unsigned num_qubits) const;

    bool operator==(const OracleSpec&) const = default;

   private:
    std::vector<std::uint64_t> solutions_;
};

}  // namespace grover_sim
