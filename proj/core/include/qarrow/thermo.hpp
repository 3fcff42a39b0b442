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

#include <vector>

#include "qarrow/qmath.hpp"

namespace qarrow {

// Spectrum and eigenbasis of a Hermitian operator, eigenvalues ascending.
// Eigenvector phases are fixed by rotating each column so its
// largest-magnitude component (lowest index on ties) is real and positive;
// observables never depend on this gauge, but fixing it keeps emitted tables
// reproducible.  `with_basis` accepts an explicit basis instead, for systems
// whose conventional eigenbasis differs from the solver's.
struct EnergyLevels {
    rvec values;
    cmat vectors;  // column k belongs to values[k]

    static EnergyLevels of(const cmat& hamiltonian);
    static EnergyLevels with_basis(rvec values, cmat vectors);

    int dim() const { return static_cast<int>(values.size()); }
    cvec state(int k) const;
};

double partition_function(const EnergyLevels& levels, double beta);

struct ThermalEnsemble {
    EnergyLevels levels;
    double beta = 0;
    double partition = 0;
    double free_energy = 0;  // -log(partition) / beta

    static ThermalEnsemble of(EnergyLevels levels, double beta);
    double occupation(int k) const;  // e^{-beta E_k} / partition
};

// e^{-beta H} / Z, assembled in the eigenbasis of H.
cmat gibbs_state(const cmat& hamiltonian, double beta);

double free_energy_difference(const ThermalEnsemble& start, const ThermalEnsemble& end);

// beta * (work - free_energy_difference).
double entropy_production(double work, double free_energy_diff, double beta);

// Purification of the Gibbs state on system (x) environment, the environment
// recording which level the system occupies:  sum_k sqrt(p_k) |E_k>|e_k>.
cvec purify_forward(const EnergyLevels& levels, double beta, int env_dim);
cvec purify_forward(const cmat& hamiltonian, double beta, int env_dim);

// Purification of the time-reversed Gibbs state,
// sum_k sqrt(p_k) theta|E_k> |env_k>.  The environment records paired with
// the levels are the columns of `env_states` and must be orthonormal; the
// label-permutation overloads use |e_{labels[k]}>.  Changing the pairing
// never changes the reduced system state, only the overlap structure with a
// forward purification.
cvec purify_reverse(const EnergyLevels& levels, double beta, const AntiUnitary& theta,
                    const cmat& env_states);
cvec purify_reverse(const EnergyLevels& levels, double beta, const AntiUnitary& theta,
                    int env_dim, const std::vector<int>& env_labels);
cvec purify_reverse(const cmat& hamiltonian, double beta, const AntiUnitary& theta,
                    int env_dim, const std::vector<int>& env_labels);

}  // namespace qarrow
