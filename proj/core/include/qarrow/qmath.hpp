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

#include "qarrow/types.hpp"

namespace qarrow {

// Anti-unitary operator theta = V K: V unitary, K complex conjugation in the
// computational basis.  theta psi = V conj(psi).  The adjoint of an
// anti-linear map satisfies <adj(theta) phi | psi> = <phi | theta psi>*,
// which gives adj(V K) = V^T K; with that choice adj(theta) theta = 1 for
// every unitary V.
struct AntiUnitary {
    cmat unitary_part;

    static AntiUnitary conjugation(int dim);
    AntiUnitary adjoint() const;
    int dim() const { return static_cast<int>(unitary_part.rows()); }
};

cvec basis_state(int dim, int k);
cmat projector(const cvec& v);

double max_abs(const cmat& a);
bool is_hermitian(const cmat& a, double tolerance = tol::hermitian);
bool is_unitary(const cmat& a, double tolerance = tol::unitary);

cmat tensor(const cmat& a, const cmat& b);
cvec tensor(const cvec& a, const cvec& b);

// exp(-i t H) for Hermitian H, evaluated through the eigendecomposition of H.
cmat matrix_exponential(const cmat& hamiltonian, double t);

cvec apply_antiunitary(const AntiUnitary& theta, const cvec& psi);

// theta A adj(theta) as a linear operator: V conj(A) V^dag.
cmat conjugate_operator(const AntiUnitary& theta, const cmat& a);

// Trace out every factor not listed in `keep`.  `dims` are the factor
// dimensions of the product space, slowest-varying index first; `keep` must
// be strictly ascending.
cmat partial_trace(const cmat& rho, const std::vector<int>& dims, const std::vector<int>& keep);

// Embed `op`, acting on the factors listed in `targets` (in that order),
// into the product space described by `dims`; identity elsewhere.
cmat embed_operator(const cmat& op, const std::vector<int>& dims, const std::vector<int>& targets);

// Apply `op` on the `targets` factors of a product-space state vector
// without forming the embedded matrix.  Same index conventions as
// embed_operator.
cvec apply_embedded(const cmat& op, const std::vector<int>& dims, const std::vector<int>& targets,
                    const cvec& state);

// (1/2) sum |eigenvalues(a - b)| for Hermitian a, b.
double trace_distance(const cmat& a, const cmat& b);

}  // namespace qarrow
