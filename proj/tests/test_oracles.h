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

// Reference computations for tests. Nothing here calls into the engines; each
// helper derives its answer along a different route (closed forms, explicit
// Kronecker products) so the engines can be checked against it.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace grover_sim::test_oracles {

/// Success probability of k Grover iterations with M marked states out of N,
/// summed over all marked states: sin^2((2k+1) asin(sqrt(M/N))).
inline double closed_form_success(std::uint64_t dim, std::uint64_t marked, std::int64_t k) {
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(dim)));
    const double s = std::sin(static_cast<double>(2 * k + 1) * theta);
    return s * s;
}

/// Iteration bound computed by counting instead of flooring: the largest k
/// with k <= (pi/4) sqrt(N/M), i.e. (4k)^2 M <= pi^2 N.
inline std::int64_t counted_iterations(std::uint64_t dim, std::uint64_t marked) {
    const double pi = 3.14159265358979323846;
    std::int64_t k = 0;
    while (16.0 * static_cast<double>((k + 1) * (k + 1)) * static_cast<double>(marked) <=
           pi * pi * static_cast<double>(dim)) {
        ++k;
    }
    return k;
}

using RealMatrix = std::vector<std::vector<double>>;

inline RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
    const std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    RealMatrix out(ra * rb, std::vector<double>(ca * cb));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return out;
}

inline RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix out(a.size(), std::vector<double>(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// H^{(x)n} (2|0><0| - I) H^{(x)n} built from explicit Kronecker products.
inline RealMatrix diffusion_by_kronecker(unsigned num_qubits) {
    const double h = 1.0 / std::sqrt(2.0);
    RealMatrix hn{{1.0}};
    for (unsigned q = 0; q < num_qubits; ++q) hn = kron(hn, RealMatrix{{h, h}, {h, -h}});
    const std::size_t dim = hn.size();
    RealMatrix shift(dim, std::vector<double>(dim, 0.0));
    shift[0][0] = 1.0;
    for (std::size_t i = 1; i < dim; ++i) shift[i][i] = -1.0;
    return matmul(matmul(hn, shift), hn);
}

}  // namespace grover_sim::test_oracles
