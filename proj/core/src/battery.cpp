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

#include "qarrow/battery.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qarrow/qmath.hpp"
#include "qarrow/thermo.hpp"

namespace qarrow {

namespace {

constexpr double kCommensurateTol = 1e-9;
constexpr double kClipTol = 1e-12;  // amplitude, not probability

void require_ladder(const Ladder& ladder, const char* who) {
    if (ladder.dim < 1) {
        throw ValidationError(std::string(who) + ": ladder dimension must be positive");
    }
    if (!(ladder.spacing > 0) || !std::isfinite(ladder.spacing)) {
        throw ValidationError(std::string(who) + ": ladder spacing must be positive and finite");
    }
}

// Margins needed so that every singly-shifted window stays on the ladder.
void require_window(const Ladder& ladder, int length, int offset, int max_shift,
                    const char* who) {
    if (length < 1 || offset < 0 || offset + length > ladder.dim) {
        throw ValidationError(std::string(who) + ": window [" + std::to_string(offset) + ", " +
                              std::to_string(offset + length) + ") does not fit on a ladder of " +
                              std::to_string(ladder.dim) + " rungs");
    }
    if (offset < max_shift || ladder.dim - (offset + length) < max_shift) {
        throw ValidationError(std::string(who) + ": window margins are smaller than the largest " +
                              "work shift (" + std::to_string(max_shift) +
                              " rungs); widen the ladder");
    }
}

// K_nm = P^tau_m U P^0_n and its battery shift in rungs.
struct QuenchBlock {
    int n = 0, m = 0;
    int shift = 0;
    cmat forward;   // on S
    cmat reversed;  // on S
};

std::vector<QuenchBlock> quench_blocks(const Scenario& s, const Ladder& ladder) {
    const int d = s.dim();
    const cmat reversed = s.reversed_drive();
    std::vector<QuenchBlock> blocks;
    blocks.reserve(static_cast<std::size_t>(d) * d);
    for (int n = 0; n < d; ++n) {
        const cmat pn0 = projector(s.levels0.state(n));
        const cmat pn0_rev = projector(apply_antiunitary(s.theta, s.levels0.state(n)));
        for (int m = 0; m < d; ++m) {
            QuenchBlock b;
            b.n = n;
            b.m = m;
            b.shift = commensurate_shift(s.levels_tau.values(m) - s.levels0.values(n), ladder);
            b.forward = projector(s.levels_tau.state(m)) * s.drive * pn0;
            b.reversed =
                pn0_rev * reversed * projector(apply_antiunitary(s.theta, s.levels_tau.state(m)));
            blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

}  // namespace

cmat ladder_hamiltonian(const Ladder& ladder) {
    require_ladder(ladder, "ladder_hamiltonian");
    cmat h = cmat::Zero(ladder.dim, ladder.dim);
    for (int k = 0; k < ladder.dim; ++k) {
        h(k, k) = static_cast<double>(k) * ladder.spacing;
    }
    return h;
}

cmat translation(const Ladder& ladder, int delta) {
    require_ladder(ladder, "translation");
    if (std::abs(delta) >= ladder.dim) {
        throw ValidationError("translation: shift of " + std::to_string(delta) +
                              " rungs empties a ladder of " + std::to_string(ladder.dim));
    }
    cmat t = cmat::Zero(ladder.dim, ladder.dim);
    for (int k = 0; k < ladder.dim; ++k) {
        if (ladder.contains(k + delta)) {
            t(k + delta, k) = 1;
        }
    }
    return t;
}

cvec translated_state(const Ladder& ladder, const cvec& state, int delta) {
    require_ladder(ladder, "translated_state");
    if (state.size() != ladder.dim) {
        throw ValidationError("translated_state: state does not live on the ladder");
    }
    cvec out = cvec::Zero(ladder.dim);
    for (int k = 0; k < ladder.dim; ++k) {
        const cxd amp = state(k);
        if (ladder.contains(k + delta)) {
            out(k + delta) = amp;
        } else if (std::abs(amp) > kClipTol) {
            throw ContractError("translated_state: shift by " + std::to_string(delta) +
                                " rungs pushes amplitude off the truncation; the ladder " +
                                "margins are too small");
        }
    }
    return out;
}

cvec coherent_ladder_state(const Ladder& ladder, int length, int offset) {
    require_ladder(ladder, "coherent_ladder_state");
    if (length < 1 || offset < 0 || offset + length > ladder.dim) {
        throw ValidationError("coherent_ladder_state: window [" + std::to_string(offset) + ", " +
                              std::to_string(offset + length) + ") does not fit on a ladder of " +
                              std::to_string(ladder.dim) + " rungs");
    }
    cvec eta = cvec::Zero(ladder.dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(length));
    for (int l = 0; l < length; ++l) {
        eta(offset + l) = amp;
    }
    return eta;
}

cxd precise_overlap(const cvec& a, const cvec& b) {
    if (a.size() != b.size()) {
        throw ValidationError("precise_overlap: dimension mismatch");
    }
    // Flat windows sum thousands of identical terms; accumulating in extended
    // precision keeps the triangular overlap law exact at the 1e-14 level.
    long double re = 0, im = 0;
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        const cxd term = std::conj(a(k)) * b(k);
        re += static_cast<long double>(term.real());
        im += static_cast<long double>(term.imag());
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

int commensurate_shift(double work, const Ladder& ladder) {
    require_ladder(ladder, "commensurate_shift");
    const double rungs = work / ladder.spacing;
    const double rounded = std::round(rungs);
    if (std::abs(rungs - rounded) > kCommensurateTol) {
        throw ContractError("commensurate_shift: work " + std::to_string(work) +
                            " is not an integer number of rungs at spacing " +
                            std::to_string(ladder.spacing) +
                            "; the ladder cannot absorb it exactly");
    }
    return static_cast<int>(rounded);
}

int max_work_shift(const Scenario& s, const Ladder& ladder) {
    require_valid_scenario(s, "max_work_shift");
    int max_shift = 0;
    for (int n = 0; n < s.dim(); ++n) {
        for (int m = 0; m < s.dim(); ++m) {
            const int shift =
                commensurate_shift(s.levels_tau.values(m) - s.levels0.values(n), ladder);
            max_shift = std::max(max_shift, std::abs(shift));
        }
    }
    return max_shift;
}

ControlledQuench controlled_quench_unitary(const Scenario& s, const Ladder& ladder) {
    require_valid_scenario(s, "controlled_quench_unitary");
    require_ladder(ladder, "controlled_quench_unitary");
    const int d = s.dim();
    const int full = d * ladder.dim;
    ControlledQuench q;
    q.forward = cmat::Zero(full, full);
    q.reversed = cmat::Zero(full, full);
    for (const QuenchBlock& b : quench_blocks(s, ladder)) {
        q.forward += tensor(b.forward, translation(ladder, b.shift));
        q.reversed += tensor(b.reversed, translation(ladder, -b.shift));
    }
    q.controlled = tensor(q.forward, projector(aux_state(0))) +
                   tensor(q.reversed, projector(aux_state(1)));
    return q;
}

BatteryWindow battery_window(const Scenario& s, double spacing, int length) {
    if (length < 1) {
        throw ValidationError("battery_window: window length must be positive");
    }
    Ladder probe{1, spacing};
    const int max_shift = max_work_shift(s, probe);
    BatteryWindow w;
    w.length = length;
    w.offset = 4 * max_shift;
    w.ladder = Ladder{length + 8 * max_shift, spacing};
    return w;
}

double classical_limit_error(const Scenario& s, const Ladder& ladder, int length,
                             const cmat& rho_s) {
    require_valid_scenario(s, "classical_limit_error");
    require_ladder(ladder, "classical_limit_error");
    const int d = s.dim();
    if (rho_s.rows() != d || rho_s.cols() != d) {
        throw ValidationError("classical_limit_error: state dimension mismatch");
    }
    if (!is_hermitian(rho_s, tol::hermitian)) {
        throw ValidationError("classical_limit_error: state must be Hermitian");
    }
    if (std::abs(rho_s.trace() - cxd(1, 0)) > 1e-10) {
        throw ValidationError("classical_limit_error: state must have unit trace");
    }

    const int max_shift = max_work_shift(s, ladder);
    const int offset = (ladder.dim - length) / 2;
    require_window(ladder, length, offset, max_shift, "classical_limit_error");
    const cvec eta = coherent_ladder_state(ladder, length, offset);

    // tr_B[V (rho (x) |eta><eta|) V^dag]
    //   = sum_{nm,n'm'} <D(d_n'm') eta | D(d_nm) eta>  K_nm rho K_n'm'^dag,
    // so the battery enters only through window overlaps, which depend on the
    // shift difference alone while the margins hold.
    std::map<int, cxd> overlap_by_difference;
    const auto window_overlap = [&](int shift, int other) -> cxd {
        const int diff = shift - other;
        const auto it = overlap_by_difference.find(diff);
        if (it != overlap_by_difference.end()) {
            return it->second;
        }
        const cxd value = precise_overlap(translated_state(ladder, eta, other),
                                          translated_state(ladder, eta, shift));
        overlap_by_difference.emplace(diff, value);
        return value;
    };

    const std::vector<QuenchBlock> blocks = quench_blocks(s, ladder);
    std::vector<cmat> left;
    left.reserve(blocks.size());
    for (const QuenchBlock& b : blocks) {
        left.push_back(b.forward * rho_s);
    }
    cmat sigma = cmat::Zero(d, d);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (const QuenchBlock& other : blocks) {
            sigma += window_overlap(blocks[i].shift, other.shift) * left[i] *
                     other.forward.adjoint();
        }
    }
    const cmat ideal = s.drive * rho_s * s.drive.adjoint();
    return trace_distance(sigma, ideal);
}

double classical_limit_error(const Scenario& s, const Ladder& ladder, int length) {
    require_valid_scenario(s, "classical_limit_error");
    const ThermalEnsemble start = ThermalEnsemble::of(s.levels0, s.beta);
    cmat rho = cmat::Zero(s.dim(), s.dim());
    for (int n = 0; n < s.dim(); ++n) {
        rho += start.occupation(n) * projector(s.levels0.state(n));
    }
    return classical_limit_error(s, ladder, length, rho);
}

ConditionalDistribution conditional_distribution_with_battery(const Scenario& s,
                                                              const Ladder& ladder, int length,
                                                              int offset, const cvec& xi) {
    require_valid_scenario(s, "conditional_distribution_with_battery");
    require_ladder(ladder, "conditional_distribution_with_battery");
    if (xi.size() != 2 || std::abs(xi.squaredNorm() - 1.0) > tol::normalization) {
        throw ValidationError(
            "conditional_distribution_with_battery: port state must be a normalized qubit");
    }
    const int max_shift = max_work_shift(s, ladder);
    require_window(ladder, length, offset, max_shift, "conditional_distribution_with_battery");
    const cvec eta = coherent_ladder_state(ladder, length, offset);

    // Within each (n, m) sector the two arrows drag the window opposite ways,
    // so only the cross term feels the battery: it picks up the overlap of
    // the two displaced windows.
    std::vector<WorkPoint> points;
    points.reserve(static_cast<std::size_t>(s.dim()) * s.dim());
    double total = 0;
    for (int n = 0; n < s.dim(); ++n) {
        for (int m = 0; m < s.dim(); ++m) {
            const BranchPair pair = postselected_branches(s, n, m, xi);
            const int shift = commensurate_shift(pair.w, ladder);
            const cxd damping = precise_overlap(translated_state(ladder, eta, shift),
                                                translated_state(ladder, eta, -shift));
            WorkPoint point;
            point.w = pair.w;
            point.forward_part = pair.norm0_sq();
            point.reverse_part = pair.norm1_sq();
            point.interference_part = 2.0 * std::real(pair.cross() * damping);
            point.total = point.forward_part + point.reverse_part + point.interference_part;
            total += point.total;
            points.push_back(point);
        }
    }
    if (total <= tol::prob_floor) {
        throw ContractError(
            "conditional_distribution_with_battery: the requested port has no weight");
    }
    for (WorkPoint& point : points) {
        point.total /= total;
        point.forward_part /= total;
        point.reverse_part /= total;
        point.interference_part /= total;
    }
    ConditionalDistribution out;
    out.distribution = WorkDistribution(std::move(points));
    out.outcome_probability = total;
    return out;
}

}  // namespace qarrow
