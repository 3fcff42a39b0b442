// Copyright 2026 The qarrow developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "qarrow/types.hpp"

namespace qarrow {

// Counter-based generator (SplitMix64).  Draw k is a pure function of
// (seed, k):
//
//   z = seed + (k + 1) * 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   out = z ^ (z >> 31)
//
// Replaying a seed therefore reproduces the stream bit for bit, and shot j
// of a sampling run can be generated without drawing shots 0..j-1.
struct SplitMix64 {
    uint64_t seed = 0;
    uint64_t counter = 0;

    static uint64_t at(uint64_t seed, uint64_t k) {
        uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t next() { return at(seed, counter++); }

    // Uniform in [0, 1) with 53 significant bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double next_gaussian() {
        double u1 = 0.0;
        do {
            u1 = next_double();
        } while (u1 == 0.0);
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    cxd next_complex_gaussian() {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return cxd(re, im) / std::sqrt(2.0);
    }
};

// Hermitian matrix with Gaussian entries, A = (G + G^dag) / 2.
inline cmat random_hermitian(int dim, SplitMix64& gen) {
    cmat g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = gen.next_complex_gaussian();
    return (g + g.adjoint()) / 2.0;
}

// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal
// phases divided out.
inline cmat random_unitary(int dim, SplitMix64& gen) {
    cmat g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = gen.next_complex_gaussian();
    Eigen::HouseholderQR<cmat> qr(g);
    cmat q = qr.householderQ();
    const cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        const cxd d = r(c, c);
        q.col(c) *= (std::abs(d) > 0.0) ? d / std::abs(d) : cxd(1.0, 0.0);
    }
    return q;
}

}  // namespace qarrow
