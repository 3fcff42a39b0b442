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

#include "qarrow/qmath.hpp"

#include <algorithm>
#include <string>

namespace qarrow {

namespace {

void require_square(const cmat& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw ValidationError(std::string(who) + ": matrix must be square and non-empty");
}

// Strides of a mixed-radix index, slowest-varying factor first.
std::vector<long> strides_of(const std::vector<int>& dims) {
    std::vector<long> strides(dims.size());
    long acc = 1;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        strides[i] = acc;
        acc *= dims[i];
    }
    return strides;
}

long total_dim(const std::vector<int>& dims) {
    long acc = 1;
    for (int d : dims) acc *= d;
    return acc;
}

void require_dims(const std::vector<int>& dims, const char* who) {
    if (dims.empty()) throw ValidationError(std::string(who) + ": empty dimension list");
    for (int d : dims)
        if (d <= 0) throw ValidationError(std::string(who) + ": factor dimensions must be positive");
}

}  // namespace

AntiUnitary AntiUnitary::conjugation(int dim) {
    if (dim <= 0) throw ValidationError("AntiUnitary: dimension must be positive");
    return AntiUnitary{cmat::Identity(dim, dim)};
}

AntiUnitary AntiUnitary::adjoint() const {
    return AntiUnitary{unitary_part.transpose()};
}

cvec basis_state(int dim, int k) {
    if (dim <= 0 || k < 0 || k >= dim) throw ValidationError("basis_state: index out of range");
    cvec v = cvec::Zero(dim);
    v(k) = 1.0;
    return v;
}

cmat projector(const cvec& v) {
    return v * v.adjoint();
}

double max_abs(const cmat& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const cmat& a, double tolerance) {
    if (a.rows() != a.cols()) return false;
    return max_abs(a - a.adjoint()) <= tolerance;
}

bool is_unitary(const cmat& a, double tolerance) {
    if (a.rows() != a.cols()) return false;
    const cmat id = cmat::Identity(a.rows(), a.cols());
    return max_abs(a * a.adjoint() - id) <= tolerance && max_abs(a.adjoint() * a - id) <= tolerance;
}

cmat tensor(const cmat& a, const cmat& b) {
    cmat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long r = 0; r < a.rows(); ++r)
        for (long c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

cvec tensor(const cvec& a, const cvec& b) {
    cvec out(a.size() * b.size());
    for (long i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

cmat matrix_exponential(const cmat& hamiltonian, double t) {
    require_square(hamiltonian, "matrix_exponential");
    if (!is_hermitian(hamiltonian))
        throw ValidationError("matrix_exponential: input is not Hermitian within tol::hermitian");
    Eigen::SelfAdjointEigenSolver<cmat> es(hamiltonian);
    const rvec& lam = es.eigenvalues();
    cvec phase(lam.size());
    for (long k = 0; k < lam.size(); ++k) phase(k) = std::exp(cxd(0.0, -lam(k) * t));
    return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

cvec apply_antiunitary(const AntiUnitary& theta, const cvec& psi) {
    if (theta.unitary_part.cols() != psi.size())
        throw ValidationError("apply_antiunitary: dimension mismatch");
    return theta.unitary_part * psi.conjugate();
}

cmat conjugate_operator(const AntiUnitary& theta, const cmat& a) {
    if (theta.unitary_part.cols() != a.rows() || a.rows() != a.cols())
        throw ValidationError("conjugate_operator: dimension mismatch");
    return theta.unitary_part * a.conjugate() * theta.unitary_part.adjoint();
}

cmat partial_trace(const cmat& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
    require_square(rho, "partial_trace");
    require_dims(dims, "partial_trace");
    if (total_dim(dims) != rho.rows())
        throw ValidationError("partial_trace: factor dimensions do not multiply to the matrix dimension");
    if (keep.empty() || !std::is_sorted(keep.begin(), keep.end()) ||
        std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw ValidationError("partial_trace: keep list must be non-empty, ascending and unique");
    for (int k : keep)
        if (k < 0 || k >= static_cast<int>(dims.size()))
            throw ValidationError("partial_trace: keep index out of range");

    std::vector<int> traced;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i)
        if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);

    const auto strides = strides_of(dims);
    long kept_dim = 1, traced_dim = 1;
    for (int k : keep) kept_dim *= dims[k];
    for (int t : traced) traced_dim *= dims[t];

    // Offset of a kept (resp. traced) sub-index inside the full index.
    auto offset = [&](const std::vector<int>& slots, long packed) {
        long off = 0;
        for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i) {
            const int slot = slots[i];
            off += (packed % dims[slot]) * strides[slot];
            packed /= dims[slot];
        }
        return off;
    };

    cmat out = cmat::Zero(kept_dim, kept_dim);
    for (long r = 0; r < kept_dim; ++r) {
        const long roff = offset(keep, r);
        for (long c = 0; c < kept_dim; ++c) {
            const long coff = offset(keep, c);
            cxd acc = 0.0;
            for (long t = 0; t < traced_dim; ++t) {
                const long toff = offset(traced, t);
                acc += rho(roff + toff, coff + toff);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

cmat embed_operator(const cmat& op, const std::vector<int>& dims, const std::vector<int>& targets) {
    require_square(op, "embed_operator");
    require_dims(dims, "embed_operator");
    if (targets.empty()) throw ValidationError("embed_operator: empty target list");
    long target_dim = 1;
    for (int t : targets) {
        if (t < 0 || t >= static_cast<int>(dims.size()))
            throw ValidationError("embed_operator: target index out of range");
        target_dim *= dims[t];
    }
    {
        std::vector<int> sorted = targets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("embed_operator: duplicate target");
    }
    if (op.rows() != target_dim)
        throw ValidationError("embed_operator: operator dimension does not match targets");

    const long full = total_dim(dims);
    const int nfac = static_cast<int>(dims.size());
    std::vector<char> is_target(nfac, 0);
    for (int t : targets) is_target[t] = 1;

    // Strides of the operator's own index, in the order `targets` lists the
    // factors.
    std::vector<long> op_stride(targets.size());
    long acc = 1;
    for (int i = static_cast<int>(targets.size()) - 1; i >= 0; --i) {
        op_stride[i] = acc;
        acc *= dims[targets[i]];
    }

    auto digits_of = [&](long packed) {
        std::vector<int> digits(nfac);
        for (int i = nfac - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(packed % dims[i]);
            packed /= dims[i];
        }
        return digits;
    };

    cmat out = cmat::Zero(full, full);
    for (long r = 0; r < full; ++r) {
        const auto rd = digits_of(r);
        for (long c = 0; c < full; ++c) {
            const auto cd = digits_of(c);
            bool match = true;
            for (int i = 0; i < nfac && match; ++i)
                if (!is_target[i] && rd[i] != cd[i]) match = false;
            if (!match) continue;
            long orow = 0, ocol = 0;
            for (size_t i = 0; i < targets.size(); ++i) {
                orow += rd[targets[i]] * op_stride[i];
                ocol += cd[targets[i]] * op_stride[i];
            }
            out(r, c) = op(orow, ocol);
        }
    }
    return out;
}

cvec apply_embedded(const cmat& op, const std::vector<int>& dims, const std::vector<int>& targets,
                    const cvec& state) {
    require_square(op, "apply_embedded");
    require_dims(dims, "apply_embedded");
    if (targets.empty()) throw ValidationError("apply_embedded: empty target list");
    long target_dim = 1;
    for (int t : targets) {
        if (t < 0 || t >= static_cast<int>(dims.size()))
            throw ValidationError("apply_embedded: target index out of range");
        target_dim *= dims[t];
    }
    {
        std::vector<int> sorted = targets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("apply_embedded: duplicate target");
    }
    if (op.rows() != target_dim)
        throw ValidationError("apply_embedded: operator dimension does not match targets");
    if (state.size() != total_dim(dims))
        throw ValidationError("apply_embedded: state dimension mismatch");

    const auto strides = strides_of(dims);
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i)
        if (std::find(targets.begin(), targets.end(), i) == targets.end()) rest.push_back(i);
    long rest_dim = 1;
    for (int i : rest) rest_dim *= dims[i];

    auto offset = [&](const std::vector<int>& slots, long packed) {
        long off = 0;
        for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i) {
            const int slot = slots[i];
            off += (packed % dims[slot]) * strides[slot];
            packed /= dims[slot];
        }
        return off;
    };

    cvec out(state.size());
    cvec gathered(target_dim);
    for (long block = 0; block < rest_dim; ++block) {
        const long base = offset(rest, block);
        for (long t = 0; t < target_dim; ++t) gathered(t) = state(base + offset(targets, t));
        const cvec mapped = op * gathered;
        for (long t = 0; t < target_dim; ++t) out(base + offset(targets, t)) = mapped(t);
    }
    return out;
}

double trace_distance(const cmat& a, const cmat& b) {
    require_square(a, "trace_distance");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("trace_distance: dimension mismatch");
    if (!is_hermitian(a) || !is_hermitian(b))
        throw ValidationError("trace_distance: inputs must be Hermitian within tol::hermitian");
    Eigen::SelfAdjointEigenSolver<cmat> es(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qarrow
