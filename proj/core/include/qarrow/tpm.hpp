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

#include <cstdint>
#include <vector>

#include "qarrow/thermo.hpp"

namespace qarrow {

// Bookkeeping for a two-point energy measurement: initial occupations,
// transition probabilities and phases, and the work invested per outcome
// pair.  Outcomes are indexed by eigenstate pair, so degenerate spectra
// stay distinguishable.
struct TransitionTable {
    rvec initial;      // occupation of the first-measurement level
    rmat conditional;  // conditional(a, b) = p(second = b | first = a); rows sum to 1
    rmat phase;        // arg of the transition amplitude
    rmat work;         // work(a, b) for the outcome pair (a, b)
    cmat amplitude;    // amplitude(a, b), |amplitude|^2 = conditional

    int dim() const { return static_cast<int>(initial.size()); }
    double joint(int a, int b) const { return initial(a) * conditional(a, b); }
};

cxd transition_amplitude(const cmat& u, const cvec& from, const cvec& to);

// Forward process: prepare Gibbs(H0), measure H0, drive with `u`, measure
// Htau.  work(n, m) = E_m(tau) - E_n(0).
TransitionTable forward_table(const EnergyLevels& h0, const EnergyLevels& htau, const cmat& u,
                              double beta);

// Reversed twin: prepare the theta-conjugated Gibbs(Htau), drive with
// `u_rev` (normally theta U^dag adj(theta)), measure in the conjugated H0
// basis.  Indexed (m, n); work(m, n) = -(E_m(tau) - E_n(0)).
TransitionTable reverse_table(const EnergyLevels& h0, const EnergyLevels& htau, const cmat& u_rev,
                              const AntiUnitary& theta, double beta);

struct WorkPoint {
    double w = 0;
    double total = 0;
    double forward_part = 0;       // weight carried by the forward branch
    double reverse_part = 0;       // weight carried by the reversed branch
    double interference_part = 0;  // cross term; zero for classical statistics
};

// A discrete work distribution.  Construction sorts the points, merges work
// values that agree within tol::support_rel * max(1, |w|), clamps round-off
// negatives in [-tol::negative_clamp, 0) to zero, and rejects anything more
// negative.
class WorkDistribution {
public:
    WorkDistribution() = default;
    explicit WorkDistribution(std::vector<WorkPoint> points);

    const std::vector<WorkPoint>& points() const { return points_; }
    double total_mass() const;
    const WorkPoint* find(double w) const;  // nullptr when w is off-support
    double probability(double w) const;     // 0 when w is off-support

    static bool same_support_value(double a, double b);

private:
    std::vector<WorkPoint> points_;
};

WorkDistribution forward_distribution(const EnergyLevels& h0, const EnergyLevels& htau,
                                      const cmat& u, double beta);
WorkDistribution reverse_distribution(const EnergyLevels& h0, const EnergyLevels& htau,
                                      const cmat& u_rev, const AntiUnitary& theta, double beta);

// Even mixture of a forward draw and a sign-flipped reversed draw:
// mix(W) = (P(W) + P_rev(-W)) / 2.  The reversed weight lands in
// reverse_part, so the mixture doubles as the interference-free reference.
WorkDistribution classical_mixture(const WorkDistribution& forward,
                                   const WorkDistribution& reverse);

// Max over common support of |log(P(W) / P_rev(-W)) - beta (W - dF)|.
// Points with probability below tol::prob_floor on either side are skipped.
double crooks_residual(const WorkDistribution& forward, const WorkDistribution& reverse,
                       double beta, double free_energy_diff);

// |sum_W P(W) e^{-beta (W - dF)} - 1|.
double jarzynski_residual(const WorkDistribution& forward, double beta, double free_energy_diff);

// Max over outcome pairs of |log(p(a,b) / p_rev(b,a)) - dS(a,b)|, with dS =
// beta (work - dF).  Pairs with a joint probability below tol::prob_floor on
// either side are skipped.
double entropy_ft_residual(const TransitionTable& forward, const TransitionTable& reverse,
                           double beta, double free_energy_diff);

// Probability that a trajectory with dissipated work `w_diss` = W - dF came
// from the forward process, under a fair prior: 1 / (1 + e^{-beta w_diss}).
double arrow_likelihood(double w_diss, double beta);

// Guess-the-arrow experiment: a fair coin picks forward or reversed, a work
// value is drawn from the matching distribution, and the better-than-even
// likelihood guess is scored.  `optimum` is the analytic success rate
// sum_W mix(W) max(L, 1-L); `accuracy` is the Monte-Carlo estimate.
struct ArrowGameResult {
    std::uint64_t shots = 0;
    double accuracy = 0;
    double optimum = 0;
};

ArrowGameResult arrow_game(const WorkDistribution& forward, const WorkDistribution& reverse,
                           double beta, double free_energy_diff, std::uint64_t shots,
                           std::uint64_t seed);

}  // namespace qarrow
