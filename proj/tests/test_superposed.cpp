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

#include <cmath>

#include <doctest.h>

#include "qarrow/rng.hpp"
#include "qarrow/spinhalf.hpp"
#include "qarrow/superposed.hpp"

using namespace qarrow;

namespace {

Scenario random_scenario(int dim, double beta, cxd alpha0, cxd alpha1, uint64_t seed) {
    SplitMix64 gen{seed, 0};
    return Scenario::from_levels(EnergyLevels::of(random_hermitian(dim, gen)),
                                 EnergyLevels::of(random_hermitian(dim, gen)),
                                 random_unitary(dim, gen), AntiUnitary::conjugation(dim), beta,
                                 alpha0, alpha1, OverlapMatrix::identity(dim));
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("auxiliary register states") {
    CHECK((aux_plus() - (basis_state(2, 0) + basis_state(2, 1)) * kInvSqrt2).norm() < 1e-15);
    CHECK((aux_minus() - (basis_state(2, 0) - basis_state(2, 1)) * kInvSqrt2).norm() < 1e-15);
    CHECK((aux_state(0) - basis_state(2, 0)).norm() == 0.0);
    CHECK_THROWS_AS(aux_state(2), ValidationError);
}

TEST_CASE("scenario validation rejects broken inputs") {
    const Scenario good = random_scenario(3, 1.0, cxd(kInvSqrt2, 0), cxd(kInvSqrt2, 0), 10);
    require_valid_scenario(good, "test");

    Scenario bad_alpha = good;
    bad_alpha.alpha0 = cxd(1.0, 0);
    bad_alpha.alpha1 = cxd(1.0, 0);
    CHECK_THROWS_AS(require_valid_scenario(bad_alpha, "test"), ValidationError);

    Scenario bad_drive = good;
    bad_drive.drive *= 2.0;
    CHECK_THROWS_AS(require_valid_scenario(bad_drive, "test"), ValidationError);

    Scenario bad_beta = good;
    bad_beta.beta = -1.0;
    CHECK_THROWS_AS(require_valid_scenario(bad_beta, "test"), ValidationError);

    CHECK_THROWS_AS(Scenario::from_levels(good.levels0, good.levels_tau, good.drive, good.theta,
                                          1.0, cxd(1, 0), cxd(1, 0),
                                          OverlapMatrix::identity(3)),
                    ValidationError);
}

TEST_CASE("branch norms follow the two transition tables") {
    const Scenario s = random_scenario(3, 0.8, cxd(0.6, 0), std::polar(0.8, 0.9), 21);
    const TransitionTable fwd = forward_table(s.levels0, s.levels_tau, s.drive, s.beta);
    const TransitionTable rev =
        reverse_table(s.levels0, s.levels_tau, s.reversed_drive(), s.theta, s.beta);
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) {
            const BranchPair pair = postselected_branches(s, n, m, aux_plus());
            CHECK(pair.w ==
                  doctest::Approx(s.levels_tau.values(m) - s.levels0.values(n)).epsilon(1e-13));
            // Forward weight: |alpha0 <xi|0>|^2 times the forward joint.
            CHECK(pair.norm0_sq() ==
                  doctest::Approx(std::norm(s.alpha0) * 0.5 * fwd.joint(n, m)).epsilon(1e-12));
            // Reversed weight: |alpha1 <xi|1>|^2 times the reversed joint of
            // the mirrored transition.
            CHECK(pair.norm1_sq() ==
                  doctest::Approx(std::norm(s.alpha1) * 0.5 * rev.joint(m, n)).epsilon(1e-12));
        }
}

TEST_CASE("detailed balance bounds the reversed branch") {
    const double beta = 1.3;
    const Scenario s = random_scenario(3, beta, cxd(kInvSqrt2, 0), cxd(kInvSqrt2, 0), 33);
    const double dfree = scenario_free_energy_difference(s);
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) {
            const ProjectionDiagnostic d = projection_diagnostic(s, n, m, aux_plus());
            CHECK(d.norm1_sq <= d.bound + 1e-12);
            // For equal splitting weights the ratio saturates the
            // exponential exactly.
            const double w = s.levels_tau.values(m) - s.levels0.values(n);
            const double ratio = std::exp(-entropy_production(w, dfree, beta));
            if (d.norm0_sq > 1e-12)
                CHECK(d.norm1_sq / d.norm0_sq == doctest::Approx(ratio).epsilon(1e-10));
        }
}

TEST_CASE("forward branch dominates at large dissipation") {
    spin::SpinScenario sc;
    sc.beta = 20.0;  // beta * W = 20 at W = +omega, Delta F = 0
    const Scenario s = spin::scenario(sc);
    const ProjectionDiagnostic up = projection_diagnostic(s, 0, 1, aux_plus());
    CHECK(up.dominance >= 1.0 - 1e-8);
    CHECK(up.norm1_sq <= up.bound + 1e-12);
    // Mirrored at beta * W = -20: the reversed branch carries the weight.
    const ProjectionDiagnostic dn = projection_diagnostic(s, 1, 0, aux_plus());
    CHECK(dn.dominance <= 1e-8);
}

TEST_CASE("conditional distribution decomposes into parts and normalizes") {
    const Scenario s = random_scenario(3, 1.1, cxd(kInvSqrt2, 0), std::polar(kInvSqrt2, -0.7), 55);
    const ConditionalDistribution plus = conditional_distribution(s, aux_plus());
    const ConditionalDistribution minus = conditional_distribution(s, aux_minus());
    CHECK(plus.outcome_probability + minus.outcome_probability ==
          doctest::Approx(1.0).epsilon(1e-12));
    double mass = 0;
    for (const WorkPoint& p : plus.distribution.points()) {
        mass += p.total;
        CHECK(p.total ==
              doctest::Approx(p.forward_part + p.reverse_part + p.interference_part)
                  .epsilon(1e-12));
        // Interference can be negative but the total is a probability.
        CHECK(p.total >= 0.0);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("interference term matches the distribution cross part") {
    const Scenario s = random_scenario(3, 0.9, cxd(0.6, 0), std::polar(0.8, 0.4), 71);
    const ConditionalDistribution plus = conditional_distribution(s, aux_plus());
    for (const WorkPoint& p : plus.distribution.points()) {
        const cxd term = interference_term(s, aux_plus(), p.w);
        CHECK(std::abs(2.0 * term.real() - p.interference_part) < 1e-13);
    }
}

TEST_CASE("conditioning marginalizes back to the classical mixture") {
    for (uint64_t seed : {101, 202}) {
        const Scenario s =
            random_scenario(3, 1.2, cxd(0.6, 0), std::polar(0.8, 1.3), seed);
        const ConditionalDistribution plus = conditional_distribution(s, aux_plus());
        const ConditionalDistribution minus = conditional_distribution(s, aux_minus());
        const WorkDistribution fwd = forward_distribution(s.levels0, s.levels_tau, s.drive, s.beta);
        const WorkDistribution rev =
            reverse_distribution(s.levels0, s.levels_tau, s.reversed_drive(), s.theta, s.beta);
        for (const WorkPoint& p : plus.distribution.points()) {
            const double recombined =
                plus.outcome_probability * p.total +
                minus.outcome_probability * minus.distribution.probability(p.w);
            const double classical = std::norm(s.alpha0) * fwd.probability(p.w) +
                                     std::norm(s.alpha1) * rev.probability(-p.w);
            CHECK(std::abs(recombined - classical) < 1e-12);
        }
    }
}

TEST_CASE("a fully forward preparation leaves no reversed weight") {
    const Scenario s = random_scenario(2, 1.0, cxd(1.0, 0), cxd(0.0, 0), 88);
    const ConditionalDistribution plus = conditional_distribution(s, aux_plus());
    CHECK(plus.outcome_probability == doctest::Approx(0.5).epsilon(1e-12));
    const WorkDistribution fwd = forward_distribution(s.levels0, s.levels_tau, s.drive, s.beta);
    for (const WorkPoint& p : plus.distribution.points()) {
        CHECK(p.reverse_part == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(p.interference_part == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(p.total == doctest::Approx(fwd.probability(p.w)).epsilon(1e-12));
    }
    // Post-selecting on the orthogonal register state has zero probability.
    CHECK_THROWS_AS(conditional_distribution(s, cvec(basis_state(2, 1))), ContractError);
}

TEST_CASE("measurement operators are complete") {
    for (int dim : {2, 3}) {
        const Scenario s =
            random_scenario(dim, 0.8, cxd(kInvSqrt2, 0), std::polar(kInvSqrt2, 0.4), 300 + dim);
        const long total = s.total_dim();
        cmat sum = cmat::Zero(total, total);
        for (int n = 0; n < dim; ++n)
            for (int m = 0; m < dim; ++m) {
                const cmat op = measurement_operator(s, n, m);
                sum += op.adjoint() * op;
            }
        CHECK(max_abs(sum - cmat::Identity(total, total)) < 1e-10);
    }
}

TEST_CASE("joint outcome probabilities cover both ports completely") {
    const Scenario s = random_scenario(3, 1.4, cxd(0.6, 0), std::polar(0.8, 2.0), 414);
    double total = 0;
    for (const cvec& xi : {aux_plus(), aux_minus()})
        for (int n = 0; n < 3; ++n)
            for (int m = 0; m < 3; ++m) total += postselected_branches(s, n, m, xi).joint_probability();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("free energy difference of a scenario matches the ensembles") {
    const Scenario s = random_scenario(3, 0.7, cxd(kInvSqrt2, 0), cxd(kInvSqrt2, 0), 500);
    const double direct =
        free_energy_difference(ThermalEnsemble::of(s.levels0, s.beta),
                               ThermalEnsemble::of(s.levels_tau, s.beta));
    CHECK(scenario_free_energy_difference(s) == doctest::Approx(direct).epsilon(1e-14));
    // Identical endpoint spectra cancel exactly (spin convention).
    spin::SpinScenario sc;
    CHECK(scenario_free_energy_difference(spin::scenario(sc)) == 0.0);
}

TEST_CASE("record overlap moves interference between work values") {
    // Identity records put the cross term at W = 0; swapped records on the
    // spin scenario move it to W = +-omega.
    spin::SpinScenario sc;
    sc.env = spin::EnvVariant::identity;
    const Scenario id = spin::scenario(sc);
    sc.env = spin::EnvVariant::spin_flip;
    const Scenario fl = spin::scenario(sc);
    const ConditionalDistribution id_plus = conditional_distribution(id, aux_plus());
    const ConditionalDistribution fl_plus = conditional_distribution(fl, aux_plus());
    for (const WorkPoint& p : id_plus.distribution.points()) {
        if (p.w != 0.0) CHECK(std::abs(p.interference_part) < 1e-14);
    }
    for (const WorkPoint& p : fl_plus.distribution.points()) {
        if (p.w == 0.0) CHECK(std::abs(p.interference_part) < 1e-14);
    }
}

TEST_CASE("orthogonal records erase interference entirely") {
    SplitMix64 gen{606, 0};
    Scenario s = Scenario::from_levels(EnergyLevels::of(random_hermitian(2, gen)),
                                       EnergyLevels::of(random_hermitian(2, gen)),
                                       random_unitary(2, gen), AntiUnitary::conjugation(2), 1.0,
                                       cxd(kInvSqrt2, 0), std::polar(kInvSqrt2, 0.3),
                                       OverlapMatrix::zero(2));
    const ConditionalDistribution plus = conditional_distribution(s, aux_plus());
    for (const WorkPoint& p : plus.distribution.points())
        CHECK(std::abs(p.interference_part) < 1e-14);
    CHECK(plus.outcome_probability == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("global hamiltonian requires a protocol and stays hermitian") {
    spin::SpinScenario sc;
    const Scenario with_protocol = spin::scenario(sc);
    const cmat h = global_hamiltonian(with_protocol, 0.5 * sc.tau());
    CHECK(h.rows() == with_protocol.total_dim());
    CHECK(is_hermitian(h, 1e-12));
    const Scenario without = spin::scenario_ideal_quench(sc);
    CHECK_THROWS_AS(global_hamiltonian(without, 0.0), ValidationError);
}
