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

#include "qarrow/battery.hpp"
#include "qarrow/spinhalf.hpp"

using namespace qarrow;

TEST_CASE("ladder hamiltonian and translations") {
    const Ladder ladder{6, 0.5};
    const cmat h = ladder_hamiltonian(ladder);
    CHECK(h.rows() == 6);
    CHECK(std::real(h(3, 3)) == doctest::Approx(1.5));
    CHECK(max_abs(h - h.diagonal().asDiagonal().toDenseMatrix()) == 0.0);

    const cmat up = translation(ladder, 2);
    // Interior rungs move up by two; the top rows have nowhere to go and
    // are dropped rather than wrapped.
    CHECK(std::real(up(4, 2)) == doctest::Approx(1.0));
    CHECK(up.col(5).norm() == 0.0);
    const cmat down = translation(ladder, -2);
    CHECK(max_abs(down - up.adjoint()) == 0.0);
    CHECK_THROWS_AS(translation(ladder, 6), ValidationError);
}

TEST_CASE("translated states refuse to clip") {
    const Ladder ladder{20, 1.0};
    const cvec eta = coherent_ladder_state(ladder, 6, 4);
    CHECK(eta.norm() == doctest::Approx(1.0).epsilon(1e-14));
    const cvec moved = translated_state(ladder, eta, 3);
    CHECK(moved.norm() == doctest::Approx(1.0).epsilon(1e-14));
    // Support would cross the top edge: 4 + 6 + 11 > 20.
    CHECK_THROWS_AS(translated_state(ladder, eta, 11), ContractError);
    CHECK_THROWS_AS(translated_state(ladder, eta, -5), ContractError);
}

TEST_CASE("window overlap follows the one minus |shift| / L law") {
    const Ladder ladder{2200, 1.0};
    const int length = 1024;
    const cvec eta = coherent_ladder_state(ladder, length, 80);
    for (int delta : {0, 1, 2, 5, 64, 1023, 1024}) {
        const double expected = delta >= length ? 0.0
                                                : 1.0 - static_cast<double>(delta) / length;
        const cxd overlap = precise_overlap(eta, translated_state(ladder, eta, delta));
        // The long-double accumulation keeps the law exact to 1e-14 even at
        // a thousand rungs.
        CHECK(std::abs(overlap.real() - expected) < 1e-14);
        CHECK(std::abs(overlap.imag()) < 1e-14);
    }
    // The textbook midpoint: length 10, shift 5.
    const Ladder small{30, 1.0};
    const cvec ten = coherent_ladder_state(small, 10, 8);
    CHECK(std::abs(precise_overlap(ten, translated_state(small, ten, 5)).real() - 0.5) <
          1e-15);
}

TEST_CASE("commensurate shifts round exactly or refuse") {
    const Ladder ladder{10, 0.5};
    CHECK(commensurate_shift(1.5, ladder) == 3);
    CHECK(commensurate_shift(-1.0, ladder) == -2);
    CHECK(commensurate_shift(0.0, ladder) == 0);
    CHECK_THROWS_AS(commensurate_shift(0.7, ladder), ContractError);

    spin::SpinScenario sc;
    const Scenario s = spin::scenario(sc);
    CHECK(max_work_shift(s, Ladder{1, sc.omega}) == 1);
}

TEST_CASE("battery window leaves safety margins") {
    spin::SpinScenario sc;
    const Scenario s = spin::scenario(sc);
    const BatteryWindow window = battery_window(s, sc.omega, 64);
    CHECK(window.length == 64);
    // One unit of work moves one rung; four units of margin on both sides.
    CHECK(window.offset == 4);
    CHECK(window.ladder.dim == 64 + 8);
    CHECK(window.ladder.spacing == doctest::Approx(sc.omega));
    CHECK_THROWS_AS(battery_window(s, 0.0, 64), ValidationError);
}

TEST_CASE("controlled quench conserves system-minus-battery energy") {
    spin::SpinScenario sc;
    const Scenario s = spin::scenario(sc);
    const Ladder ladder{24, sc.omega};
    const ControlledQuench quench = controlled_quench_unitary(s, ladder);
    const cmat hb = ladder_hamiltonian(ladder);
    const cmat h0 = s.levels0.vectors *
                    s.levels0.values.cast<cxd>().asDiagonal().toDenseMatrix() *
                    s.levels0.vectors.adjoint();
    const cmat ht = s.levels_tau.vectors *
                    s.levels_tau.values.cast<cxd>().asDiagonal().toDenseMatrix() *
                    s.levels_tau.vectors.adjoint();
    const cmat id_b = cmat::Identity(ladder.dim, ladder.dim);
    const cmat id_s = cmat::Identity(2, 2);
    // V (H_0 - H_B) = (H_tau - H_B) V away from the truncation edges.
    const cmat lhs = quench.forward * (tensor(h0, id_b) - tensor(id_s, hb));
    const cmat rhs = (tensor(ht, id_b) - tensor(id_s, hb)) * quench.forward;
    double worst = 0;
    for (int sys = 0; sys < 2; ++sys)
        for (int k = 2; k < ladder.dim - 2; ++k) {
            const int col = sys * ladder.dim + k;
            worst = std::max(worst, (lhs.col(col) - rhs.col(col)).cwiseAbs().maxCoeff());
        }
    CHECK(worst < 1e-12);
    CHECK(quench.controlled.rows() == 2 * ladder.dim * 2);
}

TEST_CASE("classical limit error decays inside the bound") {
    spin::SpinScenario sc;
    const Scenario s = spin::scenario(sc);
    double previous = 1e9;
    for (int length : {8, 16, 32, 64, 128, 256, 512, 1024}) {
        const BatteryWindow window = battery_window(s, sc.omega, length);
        const double error = classical_limit_error(s, window.ladder, window.length);
        const double bound = 2.0 * sc.omega / (sc.omega * length);
        CHECK(error <= bound);
        CHECK(error <= previous + 1e-15);
        previous = error;
    }
}

TEST_CASE("battery damping scales inversely with the window") {
    spin::SpinScenario sc;
    sc.env = spin::EnvVariant::spin_flip;  // cross terms sit at W = +-omega
    const Scenario s = spin::scenario(sc);
    const ConditionalDistribution bare = conditional_distribution(s, aux_plus());
    double error8 = 0, error32 = 0;
    for (const int length : {8, 32}) {
        const BatteryWindow window = battery_window(s, sc.omega, length);
        const ConditionalDistribution damped = conditional_distribution_with_battery(
            s, window.ladder, window.length, window.offset, aux_plus());
        double worst = 0;
        for (const WorkPoint& p : damped.distribution.points())
            worst = std::max(worst, std::abs(p.total - bare.distribution.probability(p.w)));
        (length == 8 ? error8 : error32) = worst;
    }
    CHECK(error8 > error32);
    // Quadrupling the window divides the distortion by about four.
    CHECK(error8 / error32 == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("identity records leave the battery readout unchanged") {
    // All interference sits at W = 0, which shifts the battery by nothing,
    // so even a tiny window reproduces the bare statistics.
    spin::SpinScenario sc;
    const Scenario s = spin::scenario(sc);
    const ConditionalDistribution bare = conditional_distribution(s, aux_plus());
    const BatteryWindow window = battery_window(s, sc.omega, 8);
    const ConditionalDistribution damped = conditional_distribution_with_battery(
        s, window.ladder, window.length, window.offset, aux_plus());
    for (const WorkPoint& p : damped.distribution.points())
        CHECK(std::abs(p.total - bare.distribution.probability(p.w)) < 1e-13);
    CHECK(std::abs(damped.outcome_probability - bare.outcome_probability) < 1e-13);
}

TEST_CASE("the battery conditional converges to the bare one") {
    spin::SpinScenario sc;
    sc.env = spin::EnvVariant::spin_flip;
    const Scenario s = spin::scenario(sc);
    const ConditionalDistribution bare = conditional_distribution(s, aux_plus());
    const BatteryWindow window = battery_window(s, sc.omega, 4096);
    const ConditionalDistribution damped = conditional_distribution_with_battery(
        s, window.ladder, window.length, window.offset, aux_plus());
    for (const WorkPoint& p : damped.distribution.points())
        CHECK(std::abs(p.total - bare.distribution.probability(p.w)) < 1e-3);
}
