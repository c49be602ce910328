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

#include <cmath>
#include <numeric>

#include "grover_sim/errors.h"
#include "grover_sim/grover.h"
#include "grover_sim/verify.h"
#include "gtest/gtest.h"

using namespace grover_sim;

namespace {

StateVector fig2_state() {
    StateVector s = prepare_uniform(3);
    const OracleSpec oracle({5});
    grover_step(s, oracle, EngineKind::kFast);
    grover_step(s, oracle, EngineKind::kFast);
    return s;
}

}  // namespace

TEST(measure, splitmix64_reference_outputs) {
    // Published SplitMix64 outputs for seed 1234567.
    SplitMix64 rng(1234567);
    EXPECT_EQ(rng.next(), 6457827717110365317ULL);
    EXPECT_EQ(rng.next(), 3203168211198807973ULL);
    EXPECT_EQ(rng.next(), 9817491932198370423ULL);
    EXPECT_EQ(rng.next(), 4593380528125082431ULL);
    EXPECT_EQ(rng.next(), 16408922859458223821ULL);
}

TEST(measure, distribution_examples) {
    for (double p : distribution(prepare_uniform(3))) EXPECT_NEAR(p, 0.125, 1e-15);

    const auto fig2 = distribution(fig2_state());
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(fig2[i], i == 5 ? 121.0 / 128.0 : 1.0 / 128.0, 1e-12);
    }

    const auto zero = distribution(new_zero_state(4));
    EXPECT_EQ(zero[0], 1.0);
    EXPECT_EQ(std::accumulate(zero.begin() + 1, zero.end(), 0.0), 0.0);
}

TEST(measure, distribution_ignores_global_phase) {
    SplitMix64 rng(41);
    StateVector s = random_state(6, rng);
    StateVector rotated = s;
    for (Amplitude& c : rotated.amplitudes()) c *= std::polar(1.0, 1.234);
    const auto a = distribution(s);
    const auto b = distribution(rotated);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i], b[i], 1e-15);
        sum += a[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(measure, degenerate_sample) {
    const Histogram h = sample(new_zero_state(3), 1024, 99);
    EXPECT_EQ(h.shots, 1024u);
    ASSERT_EQ(h.counts.size(), 1u);
    EXPECT_EQ(h.counts.at(0), 1024u);
}

TEST(measure, zero_shots_rejected) {
    EXPECT_THROW(sample(new_zero_state(1), 0, 0), SpecError);
}

TEST(measure, uniform_one_qubit_golden) {
    // Regression fixture, frozen from the first run of this generator.
    const Histogram h = sample(prepare_uniform(1), 4096, 0);
    EXPECT_EQ(h.counts.at(0) + h.counts.at(1), 4096u);
    EXPECT_EQ(h.counts.at(0), 2082u);
    EXPECT_EQ(sample(prepare_uniform(1), 4096, 0), h);
}

TEST(measure, fig2_sampling_within_three_sigma) {
    const Histogram h = sample(fig2_state(), 100000, 0);
    const double p = 0.9453125;
    const double sigma = std::sqrt(p * (1 - p) / 100000.0);
    EXPECT_NEAR(static_cast<double>(h.counts.at(5)) / 100000.0, p, 3 * sigma);
}

TEST(measure, frequencies_converge) {
    SplitMix64 rng(42);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const StateVector s = random_state(4, rng);
        const auto probs = distribution(s);
        const std::uint64_t shots = 100000;
        const Histogram h = sample(s, shots, seed);
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            const auto it = h.counts.find(i);
            const double count = it == h.counts.end() ? 0.0 : static_cast<double>(it->second);
            total += static_cast<std::uint64_t>(count);
            const double sigma = std::sqrt(probs[i] * (1 - probs[i]) / static_cast<double>(shots));
            EXPECT_NEAR(count / static_cast<double>(shots), probs[i], 4 * sigma + 1e-12);
        }
        EXPECT_EQ(total, shots);
    }
}

TEST(measure, zero_probability_states_never_drawn) {
    std::vector<double> probs{0.0, 0.5, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0};
    const Histogram h = sample_distribution(probs, 20000, 5);
    for (const auto& [state, count] : h.counts) {
        EXPECT_TRUE(state == 1 || state == 3) << state;
    }
}
