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

#include "grover_sim/fast_engine.h"

#include <cmath>
#include <string>

#include "grover_sim/errors.h"

namespace grover_sim {

void phase_flip_oracle(StateVector& state, const OracleSpec& oracle) {
    oracle.validate_for(state.num_qubits());
    for (std::uint64_t s : oracle.solutions()) {
        state[s] = -state[s];
    }
}

void invert_about_mean(StateVector& state) {
    auto amps = state.amplitudes();
    // Real and imaginary parts are summed independently, in index order, with
    // Neumaier compensation.
    double re_sum = 0.0, re_comp = 0.0;
    double im_sum = 0.0, im_comp = 0.0;
    auto accumulate = [](double& sum, double& comp, double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    };
    for (const Amplitude& c : amps) {
        accumulate(re_sum, re_comp, c.real());
        accumulate(im_sum, im_comp, c.imag());
    }
    re_sum += re_comp;
    im_sum += im_comp;
    const double scale = 2.0 / static_cast<double>(amps.size());
    const double twice_mean_re = re_sum * scale;
    const double twice_mean_im = im_sum * scale;
    for (Amplitude& c : amps) {
        c = Amplitude{twice_mean_re - c.real(), twice_mean_im - c.imag()};
    }
}

DenseMatrix dense_diffusion_reference(unsigned num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
        throw CapacityError("dense diffusion matrix limited to " + std::to_string(kMaxDenseQubits) +
                            " qubits, got " + std::to_string(num_qubits));
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double off = 2.0 / static_cast<double>(dim);
    DenseMatrix m{dim, std::vector<double>(dim * dim, off)};
    for (std::size_t i = 0; i < dim; ++i) {
        m.entries[i * dim + i] = off - 1.0;
    }
    return m;
}

StateVector apply_dense(const DenseMatrix& m, const StateVector& state) {
    if (m.dim != state.size()) {
        throw DimensionError("matrix dimension " + std::to_string(m.dim) + " vs state size " +
                             std::to_string(state.size()));
    }
    std::vector<Amplitude> out(m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
        double re = 0.0, im = 0.0;
        for (std::size_t c = 0; c < m.dim; ++c) {
            re += m(r, c) * state[c].real();
            im += m(r, c) * state[c].imag();
        }
        out[r] = Amplitude{re, im};
    }
    return StateVector::from_amplitudes(std::move(out));
}

}  // namespace grover_sim
