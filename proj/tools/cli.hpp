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
#include <string>

#include "qarrow/spinhalf.hpp"
#include "qarrow/superposed.hpp"

// Scenario runners behind the qarrow executable.  Everything here is
// deterministic: a config plus a seed fully determines every byte of the
// emitted files.  Human-readable notes go to stderr; stdout stays clean for
// scripting.
namespace qarrow::cli {

enum class Selector { generic, spin_fig4, spin_fig5, battery_demo, crooks_check, arrow_game };
enum class Format { csv, json };

struct RunConfig {
    Selector scenario = Selector::generic;

    double beta = 2.0;
    double omega = 1.0;          // system frequency (energy units)
    double omega_drive = 1000.0;  // "Omega" config key; rapid quench by default
    double phi = 3.14159265358979323846;
    double alpha0 = 0.70710678118654752440;  // magnitudes; relative phase is phi
    double alpha1 = 0.70710678118654752440;
    spin::EnvVariant env = spin::EnvVariant::identity;
    bool env_set = false;  // spin_fig5 defaults to spin_flip unless configured

    int steps = 0;  // 0: closed-form drive; > 0: integrate the protocol
    int L = 256;    // battery window length (rungs)
    int dim = 2;    // generic scenario dimension
    int count = 100;  // crooks_check scenario count

    std::uint64_t seed = 0;
    std::uint64_t shots = 1000;

    Format format = Format::csv;
    std::string out = "qarrow";  // file prefix
};

// One `key = value` per line; '#' starts a comment.  Violations raise
// ValidationError messages prefixed `<filename>:<line>:`.
RunConfig parse_flat_config(const std::string& text, const std::string& filename);

// Single JSON object with the same keys.
RunConfig parse_json_config(const std::string& text, const std::string& filename);

// Reads the file and dispatches on the leading character ('{' means JSON).
RunConfig load_config_file(const std::string& path);

// Range and consistency checks shared by every entry point.
void validate(const RunConfig& config);

// The scenario the selector describes (generic, spin_fig4 or spin_fig5);
// other selectors have no single underlying scenario and are rejected.
Scenario build_scenario(const RunConfig& config);

// Emits the selector's tables under `config.out` and returns the list of
// files written.  Throws ValidationError (bad config) or ContractError
// (numerical contract violated); the executable maps those to exit 2 / 3.
std::vector<std::string> run_command(const RunConfig& config);

// Draws (xi, n, m) shots from the exact joint distribution and writes the
// per-shot log; identical seeds give byte-identical files.
std::vector<std::string> sample_command(const RunConfig& config);

}  // namespace qarrow::cli
