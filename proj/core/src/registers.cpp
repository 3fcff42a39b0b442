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

#include "qarrow/registers.hpp"

#include <cmath>

namespace qarrow {

namespace {

std::vector<int> full_dims(const Scenario& s) {
    return {s.dim(), s.env_dim(), s.dim(), s.dim(), Scenario::aux_dim()};
}

cvec initial_register_state(const Scenario& s) {
    const cvec r0 = basis_state(s.dim(), 0);
    const cvec fwd = tensor(tensor(tensor(forward_purification(s), r0), r0), aux_state(0));
    const cvec rev = tensor(tensor(tensor(reversed_purification(s), r0), r0), aux_state(1));
    return s.alpha0 * fwd + s.alpha1 * rev;
}

// State right before the splitter.
cvec encoded_state(const Scenario& s) {
    const auto dims = full_dims(s);
    cvec state = initial_register_state(s);
    state = apply_embedded(encoding_unitary_first(s), dims, {0, 2, 3, 4}, state);
    state = apply_embedded(controlled_drive(s), dims, {0, 4}, state);
    state = apply_embedded(encoding_unitary_second(s), dims, {0, 2, 3, 4}, state);
    return state;
}

// Probabilities of (a, x, y) under a computational readout of A, R1, R2.
std::vector<RegisterOutcome> read_out(const Scenario& s, const cvec& state) {
    const int d = s.dim();
    std::vector<RegisterOutcome> outcomes;
    outcomes.reserve(2 * static_cast<size_t>(d) * d);
    for (int a = 0; a < 2; ++a)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                double p = 0.0;
                for (int sys = 0; sys < d; ++sys)
                    for (int env = 0; env < 2 * d; ++env) {
                        const long idx =
                            (((static_cast<long>(sys) * 2 * d + env) * d + x) * d + y) * 2 + a;
                        p += std::norm(state(idx));
                    }
                outcomes.push_back(
                    {a, x, y, s.levels_tau.values(y) - s.levels0.values(x), p});
            }
    return outcomes;
}

}  // namespace

cmat register_shift(int dim, int amount) {
    if (dim <= 0) throw ValidationError("register_shift: dimension must be positive");
    const int step = ((amount % dim) + dim) % dim;
    cmat m = cmat::Zero(dim, dim);
    for (int x = 0; x < dim; ++x) m((x + step) % dim, x) = 1.0;
    return m;
}

cmat encoding_unitary_first(const Scenario& s) {
    require_valid_scenario(s, "encoding_unitary_first");
    const int d = s.dim();
    const cmat id = cmat::Identity(d, d);
    const long full = 2L * d * d * d;
    cmat out = cmat::Zero(full, full);
    for (int n = 0; n < d; ++n) {
        const cmat fwd = projector(s.levels0.state(n));
        const cmat rev = projector(apply_antiunitary(s.theta, s.levels_tau.state(n)));
        out += tensor(tensor(tensor(fwd, register_shift(d, n)), id), projector(aux_state(0)));
        out += tensor(tensor(tensor(rev, id), register_shift(d, n)), projector(aux_state(1)));
    }
    return out;
}

cmat encoding_unitary_second(const Scenario& s) {
    require_valid_scenario(s, "encoding_unitary_second");
    const int d = s.dim();
    const cmat id = cmat::Identity(d, d);
    const long full = 2L * d * d * d;
    cmat out = cmat::Zero(full, full);
    for (int n = 0; n < d; ++n) {
        const cmat fwd = projector(s.levels_tau.state(n));
        const cmat rev = projector(apply_antiunitary(s.theta, s.levels0.state(n)));
        out += tensor(tensor(tensor(fwd, id), register_shift(d, n)), projector(aux_state(0)));
        out += tensor(tensor(tensor(rev, register_shift(d, n)), id), projector(aux_state(1)));
    }
    return out;
}

cmat controlled_drive(const Scenario& s) {
    require_valid_scenario(s, "controlled_drive");
    return tensor(s.drive, projector(aux_state(0))) +
           tensor(s.reversed_drive(), projector(aux_state(1)));
}

cmat splitter() {
    cmat b(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    b << r, r, r, -r;
    return b;
}

std::vector<RegisterOutcome> run_interferometer(const Scenario& s) {
    require_valid_scenario(s, "run_interferometer");
    cvec state = encoded_state(s);
    state = apply_embedded(splitter(), full_dims(s), {4}, state);
    return read_out(s, state);
}

std::vector<RegisterOutcome> dephased_interferometer(const Scenario& s) {
    require_valid_scenario(s, "dephased_interferometer");
    const std::vector<RegisterOutcome> sectors = read_out(s, encoded_state(s));
    // Dephasing keeps only the diagonal sector weights; the splitter then
    // routes every computational A state to both ports with weight 1/2.
    const int d = s.dim();
    std::vector<RegisterOutcome> outcomes;
    outcomes.reserve(sectors.size());
    const size_t block = static_cast<size_t>(d) * d;  // (x, y) combinations per A value
    for (int port = 0; port < 2; ++port)
        for (size_t k = 0; k < block; ++k) {
            RegisterOutcome o = sectors[k];  // carries (x, y, w) of the |0>_A sector
            o.port = port;
            o.probability = 0.5 * (sectors[k].probability + sectors[k + block].probability);
            outcomes.push_back(o);
        }
    return outcomes;
}

ConditionalDistribution port_distribution(const std::vector<RegisterOutcome>& outcomes, int port) {
    if (port != 0 && port != 1) throw ValidationError("port_distribution: port must be 0 or 1");
    std::vector<WorkPoint> pts;
    double weight = 0.0;
    for (const auto& o : outcomes) {
        if (o.port != port) continue;
        pts.push_back({o.w, o.probability, 0.0, 0.0, 0.0});
        weight += o.probability;
    }
    if (weight <= tol::prob_floor)
        throw ContractError("port_distribution: port weight below tol::prob_floor");
    for (auto& p : pts) p.total /= weight;
    return ConditionalDistribution{WorkDistribution(std::move(pts)), weight};
}

}  // namespace qarrow
