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

#include <array>
#include <vector>

#include "qarrow/superposed.hpp"

// A complete worked example on one spin: a field of fixed strength rotating
// from z to x in the x-z plane, its closed-form propagator, and the
// conditioned work statistics for the two standard environment-record
// pairings.  Basis convention: |z+> = (1,0), |z-> = (0,1),
// |x+-> = (|z-> +- |z+>)/sqrt(2); energies are shifted so both endpoint
// spectra are {0, omega}, which makes the free-energy difference vanish.
namespace qarrow::spin {

// Which reversed-preparation record pairs with which forward record.
enum class EnvVariant {
    identity,   // level k keeps its own record
    spin_flip,  // the environment trades the records of the two levels
};

struct SpinScenario {
    double omega = 1.0;        // level splitting
    double omega_drive = 1.0;  // angular velocity of the rotating field
    double beta = 2.0;
    double phi = 3.14159265358979323846;  // relative phase of the reversed branch
    EnvVariant env = EnvVariant::identity;

    // Fixed quarter turn: the drive ends exactly on the x axis.
    double tau() const { return 3.14159265358979323846 / (2.0 * omega_drive); }
};

// (omega/2) [1 + cos(omega_drive t) sigma_z + sin(omega_drive t) sigma_x];
// eigenvalues {0, omega} at every t.  Throws when t leaves [0, tau].
cmat hamiltonian(const SpinScenario& sc, double t);

Protocol protocol(const SpinScenario& sc);

// Closed-form U(t, 0) via the frame co-rotating around y:
// exp(-(i/2) omega_drive sigma_y t) * exp(-(i/2) [omega (1 + sigma_z) -
// omega_drive sigma_y] t).  Valid for any t.
cmat exact_propagator(const SpinScenario& sc, double t);

// Conjugation in the z basis followed by i sigma_y.  Flips all three spin
// components, squares to -1, and overlaps the endpoint eigenbases with
// <x_n| theta |z_n> = -1/sqrt(2) for both n.
AntiUnitary time_reversal_operator();

// Endpoint measurement bases in the fixed convention above (column k is the
// level with energy k * omega).
EnergyLevels initial_levels(double omega);
EnergyLevels final_levels(double omega);

OverlapMatrix record_overlap(EnvVariant env);

// Superposed forward/reversed run of this protocol with
// alpha0 = 1/sqrt(2), alpha1 = e^{-i phi}/sqrt(2) and the exact propagator
// as the drive.
Scenario scenario(const SpinScenario& sc);

// Same preparation with the drive idealised to 1 (quench much faster than
// any level spacing).  Carries no protocol; all conditioned statistics
// become independent of beta in this limit.
Scenario scenario_ideal_quench(const SpinScenario& sc);

// The two conditioned distributions for xi = |+->_A next to the classical
// even mixture of the forward and reversed draws.
struct BranchDistributions {
    ConditionalDistribution plus;
    ConditionalDistribution minus;
    WorkDistribution mixture;
    bool plus_is_sharpened = false;  // |+> carries the larger weight at W = 0
};

// Requires the identity record pairing; the interference then lives
// entirely at W = 0, sharpening one branch and flattening the other.
BranchDistributions branch_distributions(const SpinScenario& sc);
BranchDistributions branch_distributions(const Scenario& s);

// Conditioned joints evaluated by scalar arithmetic from the four
// transition amplitudes, with the record overlaps of this basis convention
// frozen in as +-1/sqrt(2).  Independent of the state-vector machinery;
// used to cross-check it.
struct ClosedFormTable {
    std::array<double, 3> support{};      // {-omega, 0, +omega}
    std::array<double, 3> plus_joint{};   // P(xi = +, W)
    std::array<double, 3> minus_joint{};  // P(xi = -, W)
    double plus_marginal = 0;             // P(xi = +)
    double minus_marginal = 0;
};

ClosedFormTable closed_form_table(const SpinScenario& sc);

// One point of the interference-splitting sweep: the conditioned weights at
// W = +omega against the forward ground-to-excited joint they approach when
// beta * omega grows.
struct SplittingRow {
    double homega = 0;  // level splitting probed
    double p_plus = 0;  // P(W = homega | xi = +)
    double p_minus = 0;
    double sum = 0;
    double p01 = 0;  // forward joint of the ground -> excited pair
};

// Requires the spin_flip record pairing, which moves the cross terms onto
// W = +-omega.  `base` supplies omega_drive, beta and phi; omega is swept.
std::vector<SplittingRow> splitting_sweep(const SpinScenario& base,
                                          const std::vector<double>& omegas);

}  // namespace qarrow::spin
