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

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qarrow {

using cxd = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;
using rmat = Eigen::MatrixXd;

// An input violated a documented precondition: bad dimensions, non-Hermitian
// Hamiltonian, unnormalised amplitudes, malformed configuration.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical contract failed at run time (post-selection probability below
// the floor, battery truncation overflow, ...).  The message names the
// violated invariant.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace tol {
// Shared numerical thresholds.  These are part of the interface: tests pin
// them and error messages quote them.
inline constexpr double hermitian = 1e-12;       // max |A - A^dag| for Hermitian inputs
inline constexpr double unitary = 1e-10;         // max |U U^dag - 1| for unitary inputs
inline constexpr double normalization = 1e-12;   // state-norm slack
inline constexpr double support_rel = 1e-9;      // relative work-value merge tolerance
inline constexpr double prob_floor = 1e-14;      // probabilities below this never enter log ratios
inline constexpr double negative_clamp = 1e-12;  // reported weights may round off this far below zero
}  // namespace tol

}  // namespace qarrow
