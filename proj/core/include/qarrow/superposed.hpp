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

#include <optional>

#include "qarrow/quench.hpp"
#include "qarrow/tpm.hpp"

namespace qarrow {

// Overlap between the environment records of the forward and reversed
// preparations, O(n, k) = <e_n | env_k>.  Any contraction (largest singular
// value <= 1) is admissible; the records themselves are completed in a
// doubled environment so that they stay orthonormal.
struct OverlapMatrix {
    cmat matrix;

    static OverlapMatrix identity(int dim);  // level k keeps the record of level k
    static OverlapMatrix swapped(int dim);   // level k pairs with level dim-1-k
    static OverlapMatrix zero(int dim);      // records orthogonal to the forward ones
    static OverlapMatrix general(cmat m);    // validated contraction
};

// One run of the scheme: a driven system S, an environment E purifying the
// thermal preparations, and a two-level register A holding the direction of
// time, prepared in  alpha0 |forward>|0>_A + alpha1 |reversed>|1>_A.
//
// The drive of the reversed branch is always theta U^dag adj(theta), the
// micro-reversed twin of the forward drive, so the pair satisfies the
// fluctuation relations by construction.
struct Scenario {
    std::optional<Protocol> protocol;  // absent when the drive was given directly
    AntiUnitary theta;
    double beta = 0;
    cxd alpha0{0, 0}, alpha1{0, 0};
    EnergyLevels levels0, levels_tau;  // endpoint measurement bases
    cmat overlap;                      // environment-record overlap
    cmat drive;                        // U(duration, 0)

    int dim() const { return levels0.dim(); }
    int env_dim() const { return 2 * dim(); }
    static constexpr int aux_dim() { return 2; }
    long total_dim() const { return static_cast<long>(dim()) * env_dim() * aux_dim(); }

    cmat reversed_drive() const;

    // Integrates the protocol and diagonalises its endpoints.
    static Scenario compiled(const Protocol& protocol, const AntiUnitary& theta, double beta,
                             cxd alpha0, cxd alpha1, const OverlapMatrix& overlap,
                             int steps = kDefaultSteps);
    // Explicit endpoint bases and drive; `protocol` is optional and only
    // needed for global_hamiltonian.
    static Scenario from_levels(EnergyLevels levels0, EnergyLevels levels_tau, cmat drive,
                                AntiUnitary theta, double beta, cxd alpha0, cxd alpha1,
                                const OverlapMatrix& overlap,
                                std::optional<Protocol> protocol = std::nullopt);
};

// Checks the scenario invariants (unit alpha weights, matching dimensions,
// unitary drive, contraction overlap, positive beta); throws a
// ValidationError naming `who` otherwise.
void require_valid_scenario(const Scenario& s, const char* who);

// Register states of A.
cvec aux_state(int k);
cvec aux_plus();
cvec aux_minus();

// Environment records env_k of the reversed preparation: columns of the
// overlap matrix completed to an orthonormal family in the doubled
// environment.
cmat reversed_environment_records(const Scenario& s);

cvec forward_purification(const Scenario& s);   // on S (x) E
cvec reversed_purification(const Scenario& s);  // on S (x) E

// alpha0 |psi>|0>_A + alpha1 |psi~>|1>_A on S (x) E (x) A.
cvec initial_superposition(const Scenario& s);

// Controlled drive generator: H(t) on the forward sector, the conjugated
// H(duration - t) on the reversed one, identity on E.
cmat global_hamiltonian(const Scenario& s, double t);

// Joint measurement operator of the outcome pair (n, m): forward block
// |E_m~><E_m~| U |E_n><E_n| on the |0>_A sector, reversed block
// theta|E_n><E_n|adj(theta) U' theta|E_m~><E_m~|adj(theta) on |1>_A.
// sum_{n,m} M^dag M = 1.
cmat measurement_operator(const Scenario& s, int n, int m);

// The two interfering components of the (n, m, xi) outcome, as state
// vectors on S (x) E (x) A.
struct BranchPair {
    int n = 0, m = 0;
    double w = 0;
    cvec forward_branch;
    cvec reversed_branch;

    double norm0_sq() const { return forward_branch.squaredNorm(); }
    double norm1_sq() const { return reversed_branch.squaredNorm(); }
    cxd cross() const { return forward_branch.dot(reversed_branch); }
    double joint_probability() const { return (forward_branch + reversed_branch).squaredNorm(); }
};

BranchPair postselected_branches(const Scenario& s, int n, int m, const cvec& xi);

// Which arrow dominates the (n, m, xi) outcome.  `bound` is
// e^{-beta (w - dF)}, the ceiling on norm1_sq; `dominance` is
// norm0_sq / (norm0_sq + norm1_sq) (NaN when the outcome has no weight).
struct ProjectionDiagnostic {
    int n = 0, m = 0;
    double norm0_sq = 0;
    double norm1_sq = 0;
    double bound = 0;
    double dominance = 0;
};

ProjectionDiagnostic projection_diagnostic(const Scenario& s, int n, int m, const cvec& xi);

struct ConditionalDistribution {
    WorkDistribution distribution;
    double outcome_probability = 0;  // P(xi)
};

// Work statistics conditioned on finding A in |xi>.  Fails with a
// ContractError when P(xi) falls below tol::prob_floor.  The point parts
// split the total into forward weight, reversed weight and the cross term.
ConditionalDistribution conditional_distribution(const Scenario& s, const cvec& xi);

// Free-energy difference between the endpoint ensembles of the scenario.
double scenario_free_energy_difference(const Scenario& s);

// Cross term of the conditioned distribution at work value w, evaluated from
// the transition table instead of the state vectors (independent route, for
// cross-checking):
//   I(w) = conj(alpha0) alpha1 <0|xi><xi|1> / P(xi)
//          * sum_{(n,m): w_nm = w} p0_n conj(a_nm)^2 e^{-beta (w - dF)/2}
//            <E_m~|theta E_n> O(n, m).
cxd interference_term(const Scenario& s, const cvec& xi, double w);

}  // namespace qarrow
