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

#include "qarrow/superposed.hpp"

// Interferometric route to the same statistics as the measurement-operator
// route: two d-level registers coherently record the energy indices of both
// branches, the drive runs controlled on the direction register A, and a
// final 50/50 splitter on A interferes the two arrows.  Full-space ordering
// is S (x) E (x) R1 (x) R2 (x) A; the encoders themselves act on
// S (x) R1 (x) R2 (x) A and leave the environment alone.
namespace qarrow {

// Cyclic adder |x> -> |x + amount mod dim> on one register.
cmat register_shift(int dim, int amount);

// Before the drive: the forward branch adds the energy index at time 0 into
// register 1, the reversed branch adds the index of its own starting basis
// (the conjugated endpoint basis) into register 2.
cmat encoding_unitary_first(const Scenario& s);

// After the drive: the forward branch adds the endpoint index into register
// 2, the reversed branch adds the index of the conjugated time-0 basis into
// register 1.  Both branches then hold the same register content |n, m>,
// which is what lets them interfere at the splitter.
cmat encoding_unitary_second(const Scenario& s);

// drive (x) |0><0|_A + reversed drive (x) |1><1|_A on S (x) A.
cmat controlled_drive(const Scenario& s);

// 50/50 splitter on A: |0> -> (|0> + |1>)/sqrt(2), |1> -> (|0> - |1>)/sqrt(2).
// Port 0 behind the splitter is the (|0> + |1>)/sqrt(2) projection in front
// of it.
cmat splitter();

struct RegisterOutcome {
    int port = 0;  // 0: A found along |0>+|1>, 1: along |0>-|1> (normalised)
    int n = 0;     // register 1 content
    int m = 0;     // register 2 content
    double w = 0;  // implied work, E_m(tau) - E_n(0)
    double probability = 0;
};

// Encoder 1 -> controlled drive -> encoder 2 -> splitter -> computational
// readout of (A, R1, R2).  Outcomes are ordered by (port, n, m).
std::vector<RegisterOutcome> run_interferometer(const Scenario& s);

// Same circuit with (A, R1, R2) dephased in the computational basis right
// before the splitter, which discards the relative phase between the
// branches: both ports then split every sector evenly and the statistics
// collapse to the incoherent mixture.
std::vector<RegisterOutcome> dephased_interferometer(const Scenario& s);

// Aggregate one port's outcomes by work value in the shape of the
// measurement-operator route.  `outcome_probability` is the port weight.
ConditionalDistribution port_distribution(const std::vector<RegisterOutcome>& outcomes, int port);

}  // namespace qarrow
