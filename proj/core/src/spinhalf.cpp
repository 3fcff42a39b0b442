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

#include "qarrow/spinhalf.hpp"

#include <cmath>
#include <string>

namespace qarrow::spin {

namespace {

const cmat& sigma_x() {
    static const cmat m = [] {
        cmat s(2, 2);
        s << 0, 1, 1, 0;
        return s;
    }();
    return m;
}

const cmat& sigma_y() {
    static const cmat m = [] {
        cmat s(2, 2);
        s << 0, cxd(0, -1), cxd(0, 1), 0;
        return s;
    }();
    return m;
}

const cmat& sigma_z() {
    static const cmat m = [] {
        cmat s(2, 2);
        s << 1, 0, 0, -1;
        return s;
    }();
    return m;
}

void require_valid(const SpinScenario& sc, const char* who) {
    if (!std::isfinite(sc.omega) || sc.omega < 0.0)
        throw ValidationError(std::string(who) + ": omega must be finite and non-negative");
    if (!std::isfinite(sc.omega_drive) || !(sc.omega_drive > 0.0))
        throw ValidationError(std::string(who) + ": omega_drive must be positive");
}

cxd alpha0() {
    return 1.0 / std::sqrt(2.0);
}

cxd alpha1(double phi) {
    return std::polar(1.0 / std::sqrt(2.0), -phi);
}

}  // namespace

cmat hamiltonian(const SpinScenario& sc, double t) {
    require_valid(sc, "spin::hamiltonian");
    if (t < 0.0 || t > sc.tau())
        throw ValidationError("spin::hamiltonian: time outside [0, tau]");
    const double angle = sc.omega_drive * t;
    return 0.5 * sc.omega *
           (cmat::Identity(2, 2) + std::cos(angle) * sigma_z() + std::sin(angle) * sigma_x());
}

Protocol protocol(const SpinScenario& sc) {
    require_valid(sc, "spin::protocol");
    return Protocol{sc.tau(), [sc](double t) { return hamiltonian(sc, t); }};
}

cmat exact_propagator(const SpinScenario& sc, double t) {
    require_valid(sc, "spin::exact_propagator");
    const cmat rotating = 0.5 * sc.omega_drive * sigma_y();
    const cmat dressed =
        0.5 * (sc.omega * (cmat::Identity(2, 2) + sigma_z()) - sc.omega_drive * sigma_y());
    return matrix_exponential(rotating, t) * matrix_exponential(dressed, t);
}

AntiUnitary time_reversal_operator() {
    cmat v(2, 2);
    v << 0, 1, -1, 0;  // i sigma_y
    return AntiUnitary{std::move(v)};
}

EnergyLevels initial_levels(double omega) {
    rvec values(2);
    values << 0.0, omega;
    cmat vectors(2, 2);  // columns |z->, |z+>
    vectors << 0, 1, 1, 0;
    return EnergyLevels::with_basis(std::move(values), std::move(vectors));
}

EnergyLevels final_levels(double omega) {
    rvec values(2);
    values << 0.0, omega;
    const double r = 1.0 / std::sqrt(2.0);
    cmat vectors(2, 2);  // columns |x->, |x+>
    vectors << -r, r, r, r;
    return EnergyLevels::with_basis(std::move(values), std::move(vectors));
}

OverlapMatrix record_overlap(EnvVariant env) {
    return env == EnvVariant::identity ? OverlapMatrix::identity(2) : OverlapMatrix::swapped(2);
}

Scenario scenario(const SpinScenario& sc) {
    require_valid(sc, "spin::scenario");
    return Scenario::from_levels(initial_levels(sc.omega), final_levels(sc.omega),
                                 exact_propagator(sc, sc.tau()), time_reversal_operator(), sc.beta,
                                 alpha0(), alpha1(sc.phi), record_overlap(sc.env), protocol(sc));
}

Scenario scenario_ideal_quench(const SpinScenario& sc) {
    require_valid(sc, "spin::scenario_ideal_quench");
    return Scenario::from_levels(initial_levels(sc.omega), final_levels(sc.omega),
                                 cmat::Identity(2, 2), time_reversal_operator(), sc.beta, alpha0(),
                                 alpha1(sc.phi), record_overlap(sc.env));
}

BranchDistributions branch_distributions(const Scenario& s) {
    BranchDistributions out;
    out.plus = conditional_distribution(s, aux_plus());
    out.minus = conditional_distribution(s, aux_minus());
    out.mixture = classical_mixture(
        forward_distribution(s.levels0, s.levels_tau, s.drive, s.beta),
        reverse_distribution(s.levels0, s.levels_tau, s.reversed_drive(), s.theta, s.beta));
    out.plus_is_sharpened =
        out.plus.distribution.probability(0.0) >= out.minus.distribution.probability(0.0);
    return out;
}

BranchDistributions branch_distributions(const SpinScenario& sc) {
    if (sc.env != EnvVariant::identity)
        throw ValidationError(
            "spin::branch_distributions: needs the identity record pairing; the crossed one "
            "moves the interference off W = 0");
    return branch_distributions(scenario(sc));
}

ClosedFormTable closed_form_table(const SpinScenario& sc) {
    require_valid(sc, "spin::closed_form_table");
    const double w = sc.omega;
    const TransitionTable t = forward_table(initial_levels(w), final_levels(w),
                                            exact_propagator(sc, sc.tau()), sc.beta);

    const double p00 = t.joint(0, 0), p01 = t.joint(0, 1);
    const double p10 = t.joint(1, 0), p11 = t.joint(1, 1);
    const double k = 1.0 / (2.0 * std::sqrt(2.0));

    // Interference-free backbone.  1 + e^{-+ beta w} collects the reversed
    // branch weight next to the forward one.
    const double base_dn = 0.25 * p10 * (1.0 + std::exp(sc.beta * w));
    const double base_zero = 0.5 * (p00 + p11);
    const double base_up = 0.25 * p01 * (1.0 + std::exp(-sc.beta * w));

    ClosedFormTable out;
    out.support = {-w, 0.0, w};
    if (sc.env == EnvVariant::identity) {
        // Both diagonal time-reversal overlaps are -1/sqrt(2); only aligned
        // outcome pairs interfere, and those all carry W = 0.  The dynamical
        // phases of the drive cancel between the two branches (each branch
        // picks them up once directly and once theta-conjugated), so the
        // cross term oscillates in the prepared phase phi alone.
        const double b = (p00 + p11) * std::cos(sc.phi);
        out.plus_joint = {base_dn, base_zero - k * b, base_up};
        out.minus_joint = {base_dn, base_zero + k * b, base_up};
        out.plus_marginal = 0.5 - k * b;
        out.minus_marginal = 0.5 + k * b;
    } else {
        // Crossed pairing: overlap +1/sqrt(2) on the ground -> excited pair,
        // -1/sqrt(2) on excited -> ground, so the cross terms land on
        // W = +-omega with Boltzmann weights e^{-+ beta w / 2}.
        const double c_up = p01 * std::exp(-0.5 * sc.beta * w) * std::cos(sc.phi);
        const double c_dn = p10 * std::exp(0.5 * sc.beta * w) * std::cos(sc.phi);
        out.plus_joint = {base_dn - k * c_dn, base_zero, base_up + k * c_up};
        out.minus_joint = {base_dn + k * c_dn, base_zero, base_up - k * c_up};
        out.plus_marginal = 0.5 + k * (c_up - c_dn);
        out.minus_marginal = 0.5 - k * (c_up - c_dn);
    }
    return out;
}

std::vector<SplittingRow> splitting_sweep(const SpinScenario& base,
                                          const std::vector<double>& omegas) {
    if (base.env != EnvVariant::spin_flip)
        throw ValidationError(
            "spin::splitting_sweep: needs the spin_flip record pairing; the identity one has no "
            "interference at W = +-omega");
    std::vector<SplittingRow> rows;
    rows.reserve(omegas.size());
    for (const double w : omegas) {
        SpinScenario sc = base;
        sc.omega = w;
        const Scenario s = scenario(sc);
        const TransitionTable t = forward_table(s.levels0, s.levels_tau, s.drive, s.beta);
        SplittingRow row;
        row.homega = w;
        row.p_plus = conditional_distribution(s, aux_plus()).distribution.probability(w);
        row.p_minus = conditional_distribution(s, aux_minus()).distribution.probability(w);
        row.sum = row.p_plus + row.p_minus;
        row.p01 = t.joint(0, 1);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qarrow::spin
