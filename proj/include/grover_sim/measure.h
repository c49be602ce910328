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
#include <vector>

#include "grover_sim/qstate.h"

namespace grover_sim {

/// SplitMix64 (Steele, Lea and Flood; the seeding generator of xoshiro).
/// Platform independent, unlike the distributions in <random>.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

   private:
    std::uint64_t state_;
};

struct Histogram {
    std::uint64_t shots = 0;
    /// Only observed outcomes appear; iteration is in ascending basis order.
    std::map<std::uint64_t, std::uint64_t> counts;

    bool operator==(const Histogram&) const = default;
};

/// |amp_i|^2 for every basis state.
std::vector<double> distribution(const StateVector& state);

/// `shots` inverse-CDF draws from distribution(state), one uniform per shot.
/// Throws SpecError when shots == 0.
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed = 0);

/// Same, starting from an already computed probability vector.
Histogram sample_distribution(const std::vector<double>& probabilities, std::uint64_t shots,
                              std::uint64_t seed = 0);

}  // namespace grover_sim
