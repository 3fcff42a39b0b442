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

#include "qarrow/superposed.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qarrow {

namespace {

constexpr double kAlphaNormTol = 1e-12;

void validate_pair(const Scenario& s, int n, int m, const char* who) {
    if (n < 0 || n >= s.dim() || m < 0 || m >= s.dim())
        throw ValidationError(std::string(who) + ": outcome index out of range");
}

void validate_xi(const cvec& xi, const char* who) {
    if (xi.size() != 2) throw ValidationError(std::string(who) + ": xi must live on the register A");
    if (std::abs(xi.squaredNorm() - 1.0) > tol::normalization)
        throw ValidationError(std::string(who) + ": xi must be normalised");
}

cmat check_contraction(cmat m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw ValidationError("OverlapMatrix: matrix must be square and non-empty");
    Eigen::JacobiSVD<cmat> svd(m);
    if (svd.singularValues()(0) > 1.0 + 1e-12)
        throw ValidationError("OverlapMatrix: largest singular value exceeds 1");
    return m;
}

}  // namespace

void require_valid_scenario(const Scenario& s, const char* who) {
    const int d = s.dim();
    if (d == 0) throw ValidationError(std::string(who) + ": empty scenario");
    if (s.levels_tau.dim() != d)
        throw ValidationError(std::string(who) + ": endpoint bases have different dimensions");
    if (s.theta.dim() != d) throw ValidationError(std::string(who) + ": theta dimension mismatch");
    if (s.drive.rows() != d || s.drive.cols() != d)
        throw ValidationError(std::string(who) + ": drive dimension mismatch");
    if (!is_unitary(s.drive))
        throw ValidationError(std::string(who) + ": drive is not unitary within tol::unitary");
    if (!is_unitary(s.theta.unitary_part))
        throw ValidationError(std::string(who) + ": theta unitary part is not unitary");
    if (s.overlap.rows() != d || s.overlap.cols() != d)
        throw ValidationError(std::string(who) + ": overlap matrix must be d x d");
    if (std::abs(std::norm(s.alpha0) + std::norm(s.alpha1) - 1.0) > kAlphaNormTol)
        throw ValidationError(std::string(who) +
                              ": |alpha0|^2 + |alpha1|^2 must be 1 within 1e-12");
    if (!(s.beta > 0.0) || !std::isfinite(s.beta))
        throw ValidationError(std::string(who) + ": beta must be positive and finite");
}

OverlapMatrix OverlapMatrix::identity(int dim) {
    return OverlapMatrix{cmat::Identity(dim, dim)};
}

OverlapMatrix OverlapMatrix::swapped(int dim) {
    cmat m = cmat::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) m(dim - 1 - k, k) = 1.0;
    return OverlapMatrix{std::move(m)};
}

OverlapMatrix OverlapMatrix::zero(int dim) {
    return OverlapMatrix{cmat::Zero(dim, dim)};
}

OverlapMatrix OverlapMatrix::general(cmat m) {
    return OverlapMatrix{check_contraction(std::move(m))};
}

cmat Scenario::reversed_drive() const {
    return conjugate_operator(theta, drive.adjoint());
}

Scenario Scenario::compiled(const Protocol& protocol, const AntiUnitary& theta, double beta,
                            cxd alpha0, cxd alpha1, const OverlapMatrix& overlap, int steps) {
    if (!protocol.hamiltonian_at) throw ValidationError("Scenario: protocol has no Hamiltonian");
    return from_levels(EnergyLevels::of(protocol.hamiltonian_at(0.0)),
                       EnergyLevels::of(protocol.hamiltonian_at(protocol.duration)),
                       propagator(protocol, 0.0, protocol.duration, steps), theta, beta, alpha0,
                       alpha1, overlap, protocol);
}

Scenario Scenario::from_levels(EnergyLevels levels0, EnergyLevels levels_tau, cmat drive,
                               AntiUnitary theta, double beta, cxd alpha0, cxd alpha1,
                               const OverlapMatrix& overlap, std::optional<Protocol> protocol) {
    Scenario s;
    s.protocol = std::move(protocol);
    s.theta = std::move(theta);
    s.beta = beta;
    s.alpha0 = alpha0;
    s.alpha1 = alpha1;
    s.levels0 = std::move(levels0);
    s.levels_tau = std::move(levels_tau);
    s.overlap = check_contraction(overlap.matrix);
    s.drive = std::move(drive);
    require_valid_scenario(s, "Scenario");
    return s;
}

cvec aux_state(int k) {
    return basis_state(2, k);
}

cvec aux_plus() {
    cvec v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return v;
}

cvec aux_minus() {
    cvec v(2);
    v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    return v;
}

cmat reversed_environment_records(const Scenario& s) {
    const int d = s.dim();
    // Columns sum_n O(n,k) |e_n> + sum_j R(j,k) |e_{d+j}| with
    // R = sqrt(1 - O^dag O); then <env_k | env_l> = (O^dag O + R^2)(k,l) =
    // delta(k,l) for any contraction O.
    const cmat gram = cmat::Identity(d, d) - s.overlap.adjoint() * s.overlap;
    Eigen::SelfAdjointEigenSolver<cmat> es(gram);
    rvec lam = es.eigenvalues();
    for (long k = 0; k < lam.size(); ++k) lam(k) = std::sqrt(std::max(0.0, lam(k)));
    const cmat root =
        es.eigenvectors() * lam.cast<cxd>().asDiagonal() * es.eigenvectors().adjoint();
    cmat records = cmat::Zero(s.env_dim(), d);
    records.topRows(d) = s.overlap;
    records.bottomRows(d) = root;
    return records;
}

cvec forward_purification(const Scenario& s) {
    return purify_forward(s.levels0, s.beta, s.env_dim());
}

cvec reversed_purification(const Scenario& s) {
    return purify_reverse(s.levels_tau, s.beta, s.theta, reversed_environment_records(s));
}

cvec initial_superposition(const Scenario& s) {
    require_valid_scenario(s, "initial_superposition");
    const cvec psi = tensor(forward_purification(s), aux_state(0));
    const cvec psi_rev = tensor(reversed_purification(s), aux_state(1));
    cvec state = s.alpha0 * psi + s.alpha1 * psi_rev;
    if (std::abs(state.squaredNorm() - 1.0) > 1e-10)
        throw ContractError("initial_superposition: norm drifted from 1 beyond 1e-10");
    return state;
}

cmat global_hamiltonian(const Scenario& s, double t) {
    require_valid_scenario(s, "global_hamiltonian");
    if (!s.protocol)
        throw ValidationError("global_hamiltonian: scenario carries no protocol");
    const double tau = s.protocol->duration;
    if (t < 0.0 || t > tau)
        throw ValidationError("global_hamiltonian: time outside [0, duration]");
    const cmat env_id = cmat::Identity(s.env_dim(), s.env_dim());
    const cmat fwd = tensor(tensor(s.protocol->hamiltonian_at(t), env_id),
                            projector(aux_state(0)));
    const cmat rev =
        tensor(tensor(conjugate_operator(s.theta, s.protocol->hamiltonian_at(tau - t)), env_id),
               projector(aux_state(1)));
    return fwd + rev;
}

cmat measurement_operator(const Scenario& s, int n, int m) {
    require_valid_scenario(s, "measurement_operator");
    validate_pair(s, n, m, "measurement_operator");
    const cmat env_id = cmat::Identity(s.env_dim(), s.env_dim());

    const cmat fwd_block =
        projector(s.levels_tau.state(m)) * s.drive * projector(s.levels0.state(n));

    const cvec rev_first = apply_antiunitary(s.theta, s.levels_tau.state(m));
    const cvec rev_second = apply_antiunitary(s.theta, s.levels0.state(n));
    const cmat rev_block = projector(rev_second) * s.reversed_drive() * projector(rev_first);

    return tensor(tensor(fwd_block, env_id), projector(aux_state(0))) +
           tensor(tensor(rev_block, env_id), projector(aux_state(1)));
}

BranchPair postselected_branches(const Scenario& s, int n, int m, const cvec& xi) {
    require_valid_scenario(s, "postselected_branches");
    validate_pair(s, n, m, "postselected_branches");
    validate_xi(xi, "postselected_branches");

    const cmat op = measurement_operator(s, n, m);
    const cmat sys_env_id = cmat::Identity(s.dim() * s.env_dim(), s.dim() * s.env_dim());
    const cmat select = tensor(sys_env_id, projector(xi));

    BranchPair out;
    out.n = n;
    out.m = m;
    out.w = s.levels_tau.values(m) - s.levels0.values(n);
    out.forward_branch = select * (op * (s.alpha0 * tensor(forward_purification(s), aux_state(0))));
    out.reversed_branch =
        select * (op * (s.alpha1 * tensor(reversed_purification(s), aux_state(1))));
    return out;
}

ProjectionDiagnostic projection_diagnostic(const Scenario& s, int n, int m, const cvec& xi) {
    const BranchPair pair = postselected_branches(s, n, m, xi);
    ProjectionDiagnostic d;
    d.n = n;
    d.m = m;
    d.norm0_sq = pair.norm0_sq();
    d.norm1_sq = pair.norm1_sq();
    d.bound = std::exp(-entropy_production(pair.w, scenario_free_energy_difference(s), s.beta));
    const double mass = d.norm0_sq + d.norm1_sq;
    d.dominance = mass > 0.0 ? d.norm0_sq / mass : std::numeric_limits<double>::quiet_NaN();
    return d;
}

ConditionalDistribution conditional_distribution(const Scenario& s, const cvec& xi) {
    require_valid_scenario(s, "conditional_distribution");
    validate_xi(xi, "conditional_distribution");

    std::vector<WorkPoint> pts;
    double prob_xi = 0.0;
    for (int n = 0; n < s.dim(); ++n)
        for (int m = 0; m < s.dim(); ++m) {
            const BranchPair pair = postselected_branches(s, n, m, xi);
            WorkPoint p;
            p.w = pair.w;
            p.forward_part = pair.norm0_sq();
            p.reverse_part = pair.norm1_sq();
            p.interference_part = 2.0 * pair.cross().real();
            p.total = p.forward_part + p.reverse_part + p.interference_part;
            prob_xi += p.total;
            pts.push_back(p);
        }
    if (prob_xi <= tol::prob_floor)
        throw ContractError(
            "conditional_distribution: post-selection probability P(xi) = " +
            std::to_string(prob_xi) + " is below tol::prob_floor; the conditioned "
            "distribution is undefined for this xi");
    for (auto& p : pts) {
        p.total /= prob_xi;
        p.forward_part /= prob_xi;
        p.reverse_part /= prob_xi;
        p.interference_part /= prob_xi;
    }
    return ConditionalDistribution{WorkDistribution(std::move(pts)), prob_xi};
}

double scenario_free_energy_difference(const Scenario& s) {
    return free_energy_difference(ThermalEnsemble::of(s.levels0, s.beta),
                                  ThermalEnsemble::of(s.levels_tau, s.beta));
}

cxd interference_term(const Scenario& s, const cvec& xi, double w) {
    require_valid_scenario(s, "interference_term");
    validate_xi(xi, "interference_term");

    const TransitionTable table = forward_table(s.levels0, s.levels_tau, s.drive, s.beta);
    const double dfree = scenario_free_energy_difference(s);
    const cmat records = reversed_environment_records(s);

    // Port factor <0|xi><xi|1| of <Xi_0|Xi_1>; P(xi) is assembled along the
    // same analytic route further down.
    const cxd port_factor = std::conj(s.alpha0) * s.alpha1 * xi(0) * std::conj(xi(1));
    cxd cross_all = 0.0;
    cxd cross_at_w = 0.0;
    for (int n = 0; n < s.dim(); ++n)
        for (int m = 0; m < s.dim(); ++m) {
            const cxd amp = table.amplitude(n, m);
            const cxd theta_ovl =
                s.levels_tau.state(m).dot(apply_antiunitary(s.theta, s.levels0.state(n)));
            // The reversed branch amplitude is <theta E_n|U_rev|theta E_m> =
            // <E_m|U|E_n>: pulling the coefficient through the antiunitary
            // conjugates it, so the dynamical phases cancel against the
            // forward conj(amp) and only the joint probability survives.
            const cxd term = table.initial(n) * std::conj(amp) * amp *
                             std::exp(-0.5 * s.beta * (table.work(n, m) - dfree)) * theta_ovl *
                             s.overlap(n, m);
            cross_all += term;
            if (WorkDistribution::same_support_value(table.work(n, m), w)) cross_at_w += term;
        }
    const double prob_xi = std::norm(s.alpha0) * std::norm(xi(0)) +
                           std::norm(s.alpha1) * std::norm(xi(1)) +
                           2.0 * (port_factor * cross_all).real();
    if (prob_xi <= tol::prob_floor)
        throw ContractError("interference_term: post-selection probability below tol::prob_floor");
    return port_factor * cross_at_w / prob_xi;
}

}  // namespace qarrow
