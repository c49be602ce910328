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

#include "grover_sim/measure.h"

#include <algorithm>

#include "grover_sim/errors.h"

namespace grover_sim {

std::vector<double> distribution(const StateVector& state) {
    std::vector<double> probs;
    probs.reserve(state.size());
    for (const Amplitude& a : state.amplitudes()) {
        probs.push_back(a.real() * a.real() + a.imag() * a.imag());
    }
    return probs;
}

Histogram sample_distribution(const std::vector<double>& probabilities, std::uint64_t shots,
                              std::uint64_t seed) {
    if (shots == 0) {
        throw SpecError("shots must be >= 1");
    }
    if (probabilities.empty()) {
        throw SpecError("cannot sample an empty distribution");
    }
    std::vector<double> cdf(probabilities.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        running += probabilities[i];
        cdf[i] = running;
    }
    // Rescale by the total so rounding in the norm cannot leave u past the end.
    const double total = running;

    // Last index with nonzero weight; draws landing in the tail of the
    // cumulative table due to rounding clamp here.
    std::size_t last = probabilities.size() - 1;
    while (last > 0 && probabilities[last] <= 0.0) {
        --last;
    }

    SplitMix64 rng(seed);
    Histogram hist;
    hist.shots = shots;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_unit() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto idx = static_cast<std::size_t>(it - cdf.begin());
        idx = std::min(idx, last);
        ++hist.counts[idx];
    }
    return hist;
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    return sample_distribution(distribution(state), shots, seed);
}

}  // namespace grover_sim
