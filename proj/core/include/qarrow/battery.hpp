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

#include "qarrow/superposed.hpp"

// Explicit model of the external control: an energy ladder whose rigid
// translations implement the drive.  A wide coherent window on the ladder
// recovers classical driving; its finite width damps the interference
// between the two arrows and perturbs the effective channel on the system,
// both at the rate max-shift / window-length.
//
// The ladder is a truncation of a two-sided one, so every operation below
// insists that the states it touches stay strictly inside the truncation;
// nothing is ever clipped silently.
namespace qarrow {

struct Ladder {
    int dim = 0;        // truncation size
    double spacing = 1;  // energy per rung

    bool contains(int k) const { return k >= 0 && k < dim; }
};

// diag(k * spacing).
cmat ladder_hamiltonian(const Ladder& ladder);

// Rigid translation sum_k |k + delta><k| restricted to the truncation; rows
// that would leave it are zero.  adjoint(translation(d)) = translation(-d)
// away from the edges.
cmat translation(const Ladder& ladder, int delta);

// translation(delta) applied to a vector without the matrix.  Throws when a
// non-negligible amplitude would be pushed off the truncation.
cvec translated_state(const Ladder& ladder, const cvec& state, int delta);

// Flat window sum_{l=0}^{length-1} |l + offset> / sqrt(length).
cvec coherent_ladder_state(const Ladder& ladder, int length, int offset);

// <a|b> accumulated in extended precision, for overlap laws probed at the
// 1e-14 level on windows of thousands of rungs.
cxd precise_overlap(const cvec& a, const cvec& b);

// work / spacing, which must sit within 1e-9 of an integer; the ladder can
// only absorb whole rungs.  Violations raise a ContractError.
int commensurate_shift(double work, const Ladder& ladder);

// Largest |commensurate_shift| over the scenario's outcome pairs.
int max_work_shift(const Scenario& s, const Ladder& ladder);

// The drive lifted to system (x) battery: every transition between endpoint
// eigenstates drags the battery by the matching number of rungs, so the
// bookkeeping energy (system minus battery) is conserved exactly.  The
// reversed block shifts the other way.  `controlled` combines the two on
// S (x) B (x) A, keyed by the direction register.
struct ControlledQuench {
    cmat forward;    // on S (x) B
    cmat reversed;   // on S (x) B
    cmat controlled;  // on S (x) B (x) A
};

ControlledQuench controlled_quench_unitary(const Scenario& s, const Ladder& ladder);

// Ladder sized for a length-`length` window with margins of four times the
// largest shift on both sides, and the window offset placing it there.
struct BatteryWindow {
    Ladder ladder;
    int length = 0;
    int offset = 0;
};

BatteryWindow battery_window(const Scenario& s, double spacing, int length);

// Trace distance between the system state after driving with the battery
// (window of `length` rungs, centred in the truncation) and after ideal
// classical driving, tr_B[V (rho (x) window)(V^dag)] vs U rho U^dag.
// Decays like max-shift / length.
double classical_limit_error(const Scenario& s, const Ladder& ladder, int length,
                             const cmat& rho_s);
// Same, starting from the thermal state of the initial levels.
double classical_limit_error(const Scenario& s, const Ladder& ladder, int length);

// Work statistics conditioned on the direction register, with the control
// battery explicit: the two branches shift the window opposite ways, so
// each cross term is damped by the overlap of the two shifted windows,
// max(0, 1 - 2|shift|/length).
ConditionalDistribution conditional_distribution_with_battery(const Scenario& s,
                                                              const Ladder& ladder, int length,
                                                              int offset, const cvec& xi);

}  // namespace qarrow
