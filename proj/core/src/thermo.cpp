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

#include "qarrow/thermo.hpp"

#include <cmath>

namespace qarrow {

namespace {

void fix_phase(cmat& vectors) {
    for (long c = 0; c < vectors.cols(); ++c) {
        long imax = 0;
        double best = -1.0;
        for (long r = 0; r < vectors.rows(); ++r) {
            const double m = std::abs(vectors(r, c));
            if (m > best) {
                best = m;
                imax = r;
            }
        }
        const cxd pivot = vectors(imax, c);
        if (std::abs(pivot) > 0.0) vectors.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
}

void require_beta(double beta, const char* who) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ValidationError(std::string(who) + ": beta must be positive and finite");
}

}  // namespace

EnergyLevels EnergyLevels::of(const cmat& hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0)
        throw ValidationError("EnergyLevels: Hamiltonian must be square and non-empty");
    if (!is_hermitian(hamiltonian))
        throw ValidationError("EnergyLevels: Hamiltonian is not Hermitian within tol::hermitian");
    Eigen::SelfAdjointEigenSolver<cmat> es(hamiltonian);
    EnergyLevels out;
    out.values = es.eigenvalues();
    out.vectors = es.eigenvectors();
    fix_phase(out.vectors);
    return out;
}

EnergyLevels EnergyLevels::with_basis(rvec values, cmat vectors) {
    if (values.size() == 0 || vectors.rows() != vectors.cols() || vectors.rows() != values.size())
        throw ValidationError("EnergyLevels: basis shape mismatch");
    if (!is_unitary(vectors))
        throw ValidationError("EnergyLevels: basis columns are not orthonormal within tol::unitary");
    return EnergyLevels{std::move(values), std::move(vectors)};
}

cvec EnergyLevels::state(int k) const {
    if (k < 0 || k >= dim()) throw ValidationError("EnergyLevels: level index out of range");
    return vectors.col(k);
}

double partition_function(const EnergyLevels& levels, double beta) {
    require_beta(beta, "partition_function");
    double z = 0.0;
    for (long k = 0; k < levels.values.size(); ++k) z += std::exp(-beta * levels.values(k));
    return z;
}

ThermalEnsemble ThermalEnsemble::of(EnergyLevels levels, double beta) {
    require_beta(beta, "ThermalEnsemble");
    ThermalEnsemble out;
    out.partition = partition_function(levels, beta);
    out.free_energy = -std::log(out.partition) / beta;
    out.levels = std::move(levels);
    out.beta = beta;
    return out;
}

double ThermalEnsemble::occupation(int k) const {
    if (k < 0 || k >= levels.dim()) throw ValidationError("ThermalEnsemble: level index out of range");
    return std::exp(-beta * levels.values(k)) / partition;
}

cmat gibbs_state(const cmat& hamiltonian, double beta) {
    const auto ens = ThermalEnsemble::of(EnergyLevels::of(hamiltonian), beta);
    const int d = ens.levels.dim();
    cmat rho = cmat::Zero(d, d);
    for (int k = 0; k < d; ++k) rho += ens.occupation(k) * projector(ens.levels.state(k));
    return rho;
}

double free_energy_difference(const ThermalEnsemble& start, const ThermalEnsemble& end) {
    if (start.beta != end.beta)
        throw ValidationError("free_energy_difference: ensembles have different inverse temperatures");
    return end.free_energy - start.free_energy;
}

double entropy_production(double work, double free_energy_diff, double beta) {
    require_beta(beta, "entropy_production");
    return beta * (work - free_energy_diff);
}

cvec purify_forward(const EnergyLevels& levels, double beta, int env_dim) {
    const int d = levels.dim();
    if (env_dim < d)
        throw ValidationError("purify_forward: environment dimension must be at least the system dimension");
    const auto ens = ThermalEnsemble::of(levels, beta);
    cvec psi = cvec::Zero(static_cast<long>(d) * env_dim);
    for (int k = 0; k < d; ++k) {
        const cvec term = tensor(levels.state(k), basis_state(env_dim, k));
        psi += std::sqrt(ens.occupation(k)) * term;
    }
    return psi;
}

cvec purify_forward(const cmat& hamiltonian, double beta, int env_dim) {
    return purify_forward(EnergyLevels::of(hamiltonian), beta, env_dim);
}

cvec purify_reverse(const EnergyLevels& levels, double beta, const AntiUnitary& theta,
                    const cmat& env_states) {
    const int d = levels.dim();
    if (theta.dim() != d) throw ValidationError("purify_reverse: theta dimension mismatch");
    if (env_states.cols() != d)
        throw ValidationError("purify_reverse: need one environment record per level");
    if (max_abs(env_states.adjoint() * env_states - cmat::Identity(d, d)) > tol::unitary)
        throw ValidationError("purify_reverse: environment records are not orthonormal");
    const auto ens = ThermalEnsemble::of(levels, beta);
    const long env_dim = env_states.rows();
    cvec psi = cvec::Zero(d * env_dim);
    for (int k = 0; k < d; ++k) {
        const cvec sys = apply_antiunitary(theta, levels.state(k));
        psi += std::sqrt(ens.occupation(k)) * tensor(sys, cvec(env_states.col(k)));
    }
    return psi;
}

cvec purify_reverse(const EnergyLevels& levels, double beta, const AntiUnitary& theta,
                    int env_dim, const std::vector<int>& env_labels) {
    const int d = levels.dim();
    if (static_cast<int>(env_labels.size()) != d)
        throw ValidationError("purify_reverse: need one environment label per level");
    cmat env = cmat::Zero(env_dim, d);
    for (int k = 0; k < d; ++k) {
        if (env_labels[k] < 0 || env_labels[k] >= env_dim)
            throw ValidationError("purify_reverse: environment label out of range");
        env(env_labels[k], k) = 1.0;
    }
    return purify_reverse(levels, beta, theta, env);
}

cvec purify_reverse(const cmat& hamiltonian, double beta, const AntiUnitary& theta,
                    int env_dim, const std::vector<int>& env_labels) {
    return purify_reverse(EnergyLevels::of(hamiltonian), beta, theta, env_dim, env_labels);
}

}  // namespace qarrow
