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

#include <functional>
#include <span>

#include "qarrow/qmath.hpp"

namespace qarrow {

// A driven Hamiltonian H(t) on [0, duration].  `hamiltonian_at` must return
// a Hermitian matrix of fixed dimension for every t in range.
struct Protocol {
    double duration = 0;
    std::function<cmat(double)> hamiltonian_at;
};

// The same drive run backwards through the conjugating anti-unitary:
// H'(t) = theta H(duration - t) adj(theta).
struct ReversedProtocol {
    Protocol base;
    AntiUnitary theta;

    cmat hamiltonian_at(double t) const;
    Protocol as_protocol() const;
};

inline constexpr int kDefaultSteps = 1024;

// Time-ordered propagator U(t2, t1) by the midpoint product
// prod_k exp(-i H(t1 + (k + 1/2) dt) dt).  Second-order accurate in dt;
// exactly unitary up to round-off for any step count.
cmat propagator(const Protocol& protocol, double t1, double t2, int steps = kDefaultSteps);

// Doubles the step count until two successive refinements agree to
// `tolerance` in max-abs norm.
cmat propagator_adaptive(const Protocol& protocol, double t1, double t2, double tolerance = 1e-10,
                         int initial_steps = kDefaultSteps, int max_steps = 1 << 22);

// theta U(duration, t)^dag adj(theta): the propagator of the reversed
// protocol from 0 to duration - t, obtained without integrating the
// reversed drive.
cmat time_reversed_propagator(const Protocol& protocol, const AntiUnitary& theta, double t,
                              int steps = kDefaultSteps);

// Max-abs mismatch between the directly integrated reversed propagator and
// the conjugated forward one, maximised over the sample times.
double microreversibility_residual(const Protocol& protocol, const AntiUnitary& theta,
                                   std::span<const double> times, int steps = kDefaultSteps);

}  // namespace qarrow
