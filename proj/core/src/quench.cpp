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

#include "qarrow/quench.hpp"

#include <cmath>
#include <string>

namespace qarrow {

namespace {

void require_protocol(const Protocol& protocol, const char* who) {
    if (!protocol.hamiltonian_at)
        throw ValidationError(std::string(who) + ": protocol has no Hamiltonian");
    if (!(protocol.duration > 0.0) || !std::isfinite(protocol.duration))
        throw ValidationError(std::string(who) + ": protocol duration must be positive and finite");
}

void require_window(const Protocol& protocol, double t1, double t2, const char* who) {
    if (!(t1 <= t2) || t1 < 0.0 || t2 > protocol.duration)
        throw ValidationError(std::string(who) + ": time window outside [0, duration]");
}

}  // namespace

cmat ReversedProtocol::hamiltonian_at(double t) const {
    return conjugate_operator(theta, base.hamiltonian_at(base.duration - t));
}

Protocol ReversedProtocol::as_protocol() const {
    // Copies capture by value so the reversed protocol owns its pieces.
    ReversedProtocol self{base, theta};
    return Protocol{base.duration,
                    [self](double t) { return self.hamiltonian_at(t); }};
}

cmat propagator(const Protocol& protocol, double t1, double t2, int steps) {
    require_protocol(protocol, "propagator");
    require_window(protocol, t1, t2, "propagator");
    if (steps <= 0) throw ValidationError("propagator: steps must be positive");

    const cmat probe = protocol.hamiltonian_at(t1);
    if (t1 == t2) return cmat::Identity(probe.rows(), probe.cols());

    const double dt = (t2 - t1) / steps;
    cmat u = cmat::Identity(probe.rows(), probe.cols());
    for (int k = 0; k < steps; ++k) {
        const double tm = t1 + (k + 0.5) * dt;
        u = matrix_exponential(protocol.hamiltonian_at(tm), dt) * u;
    }
    return u;
}

cmat propagator_adaptive(const Protocol& protocol, double t1, double t2, double tolerance,
                         int initial_steps, int max_steps) {
    if (initial_steps <= 0 || max_steps < initial_steps)
        throw ValidationError("propagator_adaptive: bad step bounds");
    cmat coarse = propagator(protocol, t1, t2, initial_steps);
    for (int steps = initial_steps * 2; steps <= max_steps; steps *= 2) {
        cmat fine = propagator(protocol, t1, t2, steps);
        if (max_abs(fine - coarse) <= tolerance) return fine;
        coarse = std::move(fine);
    }
    throw ContractError("propagator_adaptive: refinement did not converge to tolerance " +
                        std::to_string(tolerance) + " within the step budget");
}

cmat time_reversed_propagator(const Protocol& protocol, const AntiUnitary& theta, double t,
                              int steps) {
    require_protocol(protocol, "time_reversed_propagator");
    require_window(protocol, t, protocol.duration, "time_reversed_propagator");
    const cmat u = propagator(protocol, t, protocol.duration, steps);
    return conjugate_operator(theta, u.adjoint());
}

double microreversibility_residual(const Protocol& protocol, const AntiUnitary& theta,
                                   std::span<const double> times, int steps) {
    require_protocol(protocol, "microreversibility_residual");
    const Protocol reversed = ReversedProtocol{protocol, theta}.as_protocol();
    double worst = 0.0;
    for (double t : times) {
        require_window(protocol, t, protocol.duration, "microreversibility_residual");
        const cmat direct = propagator(reversed, 0.0, protocol.duration - t, steps);
        const cmat conjugated = time_reversed_propagator(protocol, theta, t, steps);
        worst = std::max(worst, max_abs(direct - conjugated));
    }
    return worst;
}

}  // namespace qarrow
