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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "qarrow/battery.hpp"
#include "qarrow/quench.hpp"
#include "qarrow/rng.hpp"
#include "qarrow/thermo.hpp"
#include "qarrow/tpm.hpp"

namespace qarrow::cli {

namespace {

using nlohmann::json;

// 17 significant digits round-trip doubles exactly.
std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

using Cell = std::variant<std::int64_t, double, std::string>;
using Row = std::vector<Cell>;

std::string cell_text(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) return fmt(*d);
    return std::get<std::string>(cell);
}

json cell_json(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    return std::get<std::string>(cell);
}

std::string emit_table(const RunConfig& config, const std::string& name,
                       const std::vector<std::string>& columns, const std::vector<Row>& rows) {
    const std::string path =
        config.out + "_" + name + (config.format == Format::csv ? ".csv" : ".json");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file " + path);
    if (config.format == Format::csv) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            file << (c ? "," : "") << columns[c];
        file << "\n";
        for (const Row& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                file << (c ? "," : "") << cell_text(row[c]);
            file << "\n";
        }
    } else {
        json records = json::array();
        for (const Row& row : rows) {
            json record = json::object();
            for (std::size_t c = 0; c < row.size(); ++c) record[columns[c]] = cell_json(row[c]);
            records.push_back(std::move(record));
        }
        file << records.dump(1) << "\n";
    }
    if (!file.good()) throw ValidationError("failed writing output file " + path);
    return path;
}

// ---- config ingestion ----

[[noreturn]] void bad_config(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

double parse_real(const std::string& value, const std::string& where, const std::string& key) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double parsed = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(parsed))
        bad_config(where, "expected a finite number for '" + key + "', got '" + value + "'");
    return parsed;
}

std::int64_t parse_int(const std::string& value, const std::string& where,
                       const std::string& key) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const long long parsed = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0')
        bad_config(where, "expected an integer for '" + key + "', got '" + value + "'");
    return parsed;
}

std::uint64_t parse_u64(const std::string& value, const std::string& where,
                        const std::string& key) {
    if (!value.empty() && value[0] == '-')
        bad_config(where, "'" + key + "' must be non-negative, got '" + value + "'");
    const char* begin = value.c_str();
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(begin, &end, 10);
    if (end == begin || *end != '\0')
        bad_config(where, "expected an integer for '" + key + "', got '" + value + "'");
    return parsed;
}

Selector parse_selector(const std::string& value, const std::string& where) {
    if (value == "generic") return Selector::generic;
    if (value == "spin_fig4") return Selector::spin_fig4;
    if (value == "spin_fig5") return Selector::spin_fig5;
    if (value == "battery_demo") return Selector::battery_demo;
    if (value == "crooks_check") return Selector::crooks_check;
    if (value == "arrow_game") return Selector::arrow_game;
    bad_config(where, "unknown scenario '" + value +
                          "' (expected generic, spin_fig4, spin_fig5, battery_demo, "
                          "crooks_check or arrow_game)");
}

void apply_key(RunConfig& config, const std::string& key, const std::string& value,
               const std::string& where) {
    if (key == "scenario") {
        config.scenario = parse_selector(value, where);
    } else if (key == "beta") {
        config.beta = parse_real(value, where, key);
    } else if (key == "omega") {
        config.omega = parse_real(value, where, key);
    } else if (key == "Omega") {
        config.omega_drive = parse_real(value, where, key);
    } else if (key == "phi") {
        config.phi = parse_real(value, where, key);
    } else if (key == "alpha0") {
        config.alpha0 = parse_real(value, where, key);
    } else if (key == "alpha1") {
        config.alpha1 = parse_real(value, where, key);
    } else if (key == "env_variant") {
        if (value == "identity") {
            config.env = spin::EnvVariant::identity;
        } else if (value == "spin_flip") {
            config.env = spin::EnvVariant::spin_flip;
        } else {
            bad_config(where, "unknown env_variant '" + value +
                                  "' (expected identity or spin_flip)");
        }
        config.env_set = true;
    } else if (key == "steps") {
        config.steps = static_cast<int>(parse_int(value, where, key));
    } else if (key == "L") {
        config.L = static_cast<int>(parse_int(value, where, key));
    } else if (key == "dim") {
        config.dim = static_cast<int>(parse_int(value, where, key));
    } else if (key == "count") {
        config.count = static_cast<int>(parse_int(value, where, key));
    } else if (key == "seed") {
        config.seed = parse_u64(value, where, key);
    } else if (key == "shots") {
        config.shots = parse_u64(value, where, key);
    } else if (key == "out") {
        config.out = value;
    } else if (key == "format") {
        if (value == "csv") {
            config.format = Format::csv;
        } else if (value == "json") {
            config.format = Format::json;
        } else {
            bad_config(where, "unknown format '" + value + "' (expected csv or json)");
        }
    } else {
        bad_config(where, "unknown key '" + key + "'");
    }
}

std::string trimmed(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

RunConfig parse_flat_config(const std::string& text, const std::string& filename) {
    RunConfig config;
    std::istringstream lines(text);
    std::string line;
    for (int number = 1; std::getline(lines, line); ++number) {
        const std::string where = filename + ":" + std::to_string(number);
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trimmed(line).empty()) continue;
        const auto equals = line.find('=');
        if (equals == std::string::npos) bad_config(where, "expected 'key = value'");
        const std::string key = trimmed(line.substr(0, equals));
        const std::string value = trimmed(line.substr(equals + 1));
        if (key.empty()) bad_config(where, "missing key before '='");
        if (value.empty()) bad_config(where, "missing value for '" + key + "'");
        apply_key(config, key, value, where);
    }
    return config;
}

RunConfig parse_json_config(const std::string& text, const std::string& filename) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& error) {
        bad_config(filename, std::string("invalid JSON: ") + error.what());
    }
    if (!parsed.is_object()) bad_config(filename, "config must be a single JSON object");
    RunConfig config;
    for (const auto& [key, value] : parsed.items()) {
        std::string text_value;
        if (value.is_string()) {
            text_value = value.get<std::string>();
        } else if (value.is_number_integer()) {
            text_value = std::to_string(value.get<std::int64_t>());
        } else if (value.is_number_unsigned()) {
            text_value = std::to_string(value.get<std::uint64_t>());
        } else if (value.is_number_float()) {
            text_value = fmt(value.get<double>());
        } else {
            bad_config(filename, "value for '" + key + "' must be a string or number");
        }
        apply_key(config, key, text_value, filename);
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot read config file " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_config(text, path);
    return parse_flat_config(text, path);
}

void validate(const RunConfig& config) {
    if (!std::isfinite(config.beta) || !(config.beta > 0.0))
        throw ValidationError("config: beta must be positive and finite");
    if (!std::isfinite(config.omega) || config.omega < 0.0)
        throw ValidationError("config: omega must be finite and non-negative");
    if (!std::isfinite(config.omega_drive) || !(config.omega_drive > 0.0))
        throw ValidationError("config: Omega must be positive and finite");
    if (!std::isfinite(config.phi)) throw ValidationError("config: phi must be finite");
    if (config.alpha0 < 0.0 || config.alpha1 < 0.0)
        throw ValidationError("config: alpha0 and alpha1 are magnitudes; use phi for the phase");
    const double norm = config.alpha0 * config.alpha0 + config.alpha1 * config.alpha1;
    if (std::abs(norm - 1.0) > 1e-9)
        throw ValidationError("config: alpha0^2 + alpha1^2 = " + fmt(norm) +
                              " but the superposition must be normalized");
    if (config.steps < 0) throw ValidationError("config: steps must be non-negative");
    if (config.L < 1) throw ValidationError("config: L must be at least 1");
    if (config.dim < 2 || config.dim > 8)
        throw ValidationError("config: dim must be between 2 and 8");
    if (config.count < 1) throw ValidationError("config: count must be at least 1");
    if (config.shots < 1) throw ValidationError("config: shots must be at least 1");
    if (config.out.empty()) throw ValidationError("config: out prefix must not be empty");
}

namespace {

spin::SpinScenario spin_params(const RunConfig& config, spin::EnvVariant env) {
    spin::SpinScenario sc;
    sc.omega = config.omega;
    sc.omega_drive = config.omega_drive;
    sc.beta = config.beta;
    sc.phi = config.phi;
    sc.env = env;
    return sc;
}

Scenario spin_scenario_from(const RunConfig& config, spin::EnvVariant env) {
    const spin::SpinScenario sc = spin_params(config, env);
    Scenario s = spin::scenario(sc);
    if (config.steps > 0)
        s.drive = propagator(spin::protocol(sc), 0.0, sc.tau(), config.steps);
    s.alpha0 = cxd(config.alpha0, 0.0);
    s.alpha1 = std::polar(config.alpha1, -config.phi);
    return s;
}

spin::EnvVariant resolve_env(const RunConfig& config, spin::EnvVariant wanted,
                             const char* selector, const char* other) {
    if (config.env_set && config.env != wanted)
        throw ValidationError(std::string("config: ") + selector + " is defined for env_variant " +
                              (wanted == spin::EnvVariant::identity ? "identity" : "spin_flip") +
                              "; the other pairing belongs to " + other);
    return wanted;
}

std::vector<Row> distribution_rows(const WorkDistribution& distribution) {
    std::vector<Row> rows;
    rows.reserve(distribution.points().size());
    for (const WorkPoint& p : distribution.points())
        rows.push_back({p.w, p.total, p.forward_part, p.reverse_part, p.interference_part});
    return rows;
}

const std::vector<std::string> kDistributionColumns = {"W", "total", "forward_part",
                                                       "reverse_part", "interference_part"};

std::vector<Row> diagnostic_rows(const Scenario& s, const cvec& xi) {
    std::vector<Row> rows;
    for (int n = 0; n < s.dim(); ++n)
        for (int m = 0; m < s.dim(); ++m) {
            const ProjectionDiagnostic d = projection_diagnostic(s, n, m, xi);
            rows.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(m), d.norm0_sq,
                            d.norm1_sq, d.bound, d.dominance});
        }
    return rows;
}

const std::vector<std::string> kDiagnosticColumns = {"n",       "m",     "norm0sq",
                                                     "norm1sq", "bound", "dominance"};

std::vector<std::string> run_generic(const RunConfig& config) {
    const Scenario s = build_scenario(config);
    const ConditionalDistribution plus = conditional_distribution(s, aux_plus());
    const ConditionalDistribution minus = conditional_distribution(s, aux_minus());
    std::vector<std::string> written;
    written.push_back(
        emit_table(config, "plus", kDistributionColumns, distribution_rows(plus.distribution)));
    written.push_back(
        emit_table(config, "minus", kDistributionColumns, distribution_rows(minus.distribution)));
    written.push_back(
        emit_table(config, "diagnostics_plus", kDiagnosticColumns, diagnostic_rows(s, aux_plus())));
    written.push_back(emit_table(config, "diagnostics_minus", kDiagnosticColumns,
                                 diagnostic_rows(s, aux_minus())));
    std::cerr << "generic scenario (dim " << config.dim << ", seed " << config.seed
              << "): P(+) = " << fmt(plus.outcome_probability)
              << ", P(-) = " << fmt(minus.outcome_probability) << "\n";
    return written;
}

std::vector<std::string> run_spin_fig4(const RunConfig& config) {
    resolve_env(config, spin::EnvVariant::identity, "spin_fig4", "spin_fig5");
    const Scenario s = spin_scenario_from(config, spin::EnvVariant::identity);
    const spin::BranchDistributions branches = spin::branch_distributions(s);
    std::vector<std::string> written;
    written.push_back(emit_table(config, "plus", kDistributionColumns,
                                 distribution_rows(branches.plus.distribution)));
    written.push_back(emit_table(config, "minus", kDistributionColumns,
                                 distribution_rows(branches.minus.distribution)));
    written.push_back(
        emit_table(config, "mixture", kDistributionColumns, distribution_rows(branches.mixture)));
    std::cerr << "sharpened port: " << (branches.plus_is_sharpened ? "+" : "-")
              << ", flattened port: " << (branches.plus_is_sharpened ? "-" : "+") << "\n";
    std::cerr << "P(W=0): plus " << fmt(branches.plus.distribution.probability(0.0)) << ", minus "
              << fmt(branches.minus.distribution.probability(0.0)) << ", mixture "
              << fmt(branches.mixture.probability(0.0)) << "\n";
    return written;
}

std::vector<std::string> run_spin_fig5(const RunConfig& config) {
    resolve_env(config, spin::EnvVariant::spin_flip, "spin_fig5", "spin_fig4");
    constexpr double kPi = 3.14159265358979323846;
    if (std::abs(config.phi - kPi) > 1e-9)
        throw ValidationError("config: spin_fig5 is defined at phi = pi");
    spin::SpinScenario base = spin_params(config, spin::EnvVariant::spin_flip);
    std::vector<double> grid(50);
    for (std::size_t k = 0; k < grid.size(); ++k)
        grid[k] = 0.1 + (10.0 - 0.1) * static_cast<double>(k) / (grid.size() - 1);
    const std::vector<spin::SplittingRow> sweep = spin::splitting_sweep(base, grid);
    std::vector<Row> rows;
    rows.reserve(sweep.size());
    for (const spin::SplittingRow& r : sweep)
        rows.push_back({r.homega, r.p_plus, r.p_minus, r.sum, r.p01});
    std::vector<std::string> written;
    written.push_back(emit_table(config, "sweep",
                                 {"homega", "P_plus", "P_minus", "sum", "p01"}, rows));
    std::cerr << "splitting sweep: at homega = " << fmt(sweep.back().homega)
              << ", P+ + P- = " << fmt(sweep.back().sum) << " vs p01 = " << fmt(sweep.back().p01)
              << "\n";
    return written;
}

std::vector<std::string> run_battery_demo(const RunConfig& config) {
    const spin::EnvVariant env = config.env_set ? config.env : spin::EnvVariant::spin_flip;
    const Scenario s = spin_scenario_from(config, env);
    const double spacing = config.omega;

    Ladder probe{1, spacing};
    const int max_shift = max_work_shift(s, probe);
    std::vector<Row> error_rows;
    if (max_shift > 0) {
        for (int factor = 8; factor <= 1024; factor *= 2) {
            const int length = factor * max_shift;
            const BatteryWindow window = battery_window(s, spacing, length);
            const double error = classical_limit_error(s, window.ladder, window.length);
            const double max_w = max_shift * spacing;
            error_rows.push_back({static_cast<std::int64_t>(length), error,
                                  2.0 * max_w / (spacing * length)});
        }
    }
    const BatteryWindow window = battery_window(s, spacing, config.L);
    const ConditionalDistribution damped = conditional_distribution_with_battery(
        s, window.ladder, window.length, window.offset, aux_plus());
    std::vector<std::string> written;
    written.push_back(emit_table(config, "error", {"L", "error", "bound"}, error_rows));
    written.push_back(
        emit_table(config, "damped", kDistributionColumns, distribution_rows(damped.distribution)));
    std::cerr << "battery window: " << window.length << " rungs on a ladder of "
              << window.ladder.dim << ", P(+) = " << fmt(damped.outcome_probability) << "\n";
    return written;
}

std::vector<std::string> run_crooks_check(const RunConfig& config) {
    SplitMix64 gen{config.seed, 0};
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(config.count));
    double worst_crooks = 0, worst_jarzynski = 0, worst_entropy = 0;
    for (int trial = 0; trial < config.count; ++trial) {
        const int d = 2 + trial % 3;
        const double beta = 0.1 + 2.9 * gen.next_double();
        const EnergyLevels l0 = EnergyLevels::of(random_hermitian(d, gen));
        const EnergyLevels lt = EnergyLevels::of(random_hermitian(d, gen));
        const cmat u = random_unitary(d, gen);
        const AntiUnitary theta = AntiUnitary::conjugation(d);
        const cmat u_rev = conjugate_operator(theta, u.adjoint());
        const double dfree = free_energy_difference(ThermalEnsemble::of(l0, beta),
                                                    ThermalEnsemble::of(lt, beta));
        const WorkDistribution fwd = forward_distribution(l0, lt, u, beta);
        const WorkDistribution rev = reverse_distribution(l0, lt, u_rev, theta, beta);
        const double crooks = crooks_residual(fwd, rev, beta, dfree);
        const double jarzynski = jarzynski_residual(fwd, beta, dfree);
        const double entropy = entropy_ft_residual(forward_table(l0, lt, u, beta),
                                                   reverse_table(l0, lt, u_rev, theta, beta),
                                                   beta, dfree);
        worst_crooks = std::max(worst_crooks, crooks);
        worst_jarzynski = std::max(worst_jarzynski, jarzynski);
        worst_entropy = std::max(worst_entropy, entropy);
        rows.push_back({static_cast<std::int64_t>(trial), static_cast<std::int64_t>(d), beta,
                        crooks, jarzynski, entropy});
    }
    std::vector<std::string> written;
    written.push_back(emit_table(config, "residuals",
                                 {"trial", "dim", "beta", "crooks", "jarzynski", "entropy"},
                                 rows));
    std::cerr << "max residual over " << config.count << " scenarios: crooks "
              << fmt(worst_crooks) << ", jarzynski " << fmt(worst_jarzynski) << ", entropy "
              << fmt(worst_entropy) << "\n";
    return written;
}

std::vector<std::string> run_arrow_game(const RunConfig& config) {
    const Scenario s = spin_scenario_from(config, config.env_set ? config.env
                                                                 : spin::EnvVariant::identity);
    const WorkDistribution fwd = forward_distribution(s.levels0, s.levels_tau, s.drive, s.beta);
    const WorkDistribution rev =
        reverse_distribution(s.levels0, s.levels_tau, s.reversed_drive(), s.theta, s.beta);
    const double dfree = scenario_free_energy_difference(s);
    const WorkDistribution mixture = classical_mixture(fwd, rev);
    std::vector<Row> rows;
    for (const WorkPoint& p : mixture.points())
        rows.push_back({p.w, p.total, arrow_likelihood(p.w - dfree, s.beta)});
    const ArrowGameResult game =
        arrow_game(fwd, rev, s.beta, dfree, config.shots, config.seed);
    std::vector<std::string> written;
    written.push_back(emit_table(config, "likelihood", {"W", "mixture", "likelihood"}, rows));
    written.push_back(emit_table(config, "game", {"shots", "accuracy", "optimum"},
                                 {{static_cast<std::int64_t>(game.shots), game.accuracy,
                                   game.optimum}}));
    std::cerr << "arrow game: accuracy " << fmt(game.accuracy) << " vs optimum "
              << fmt(game.optimum) << " over " << game.shots << " shots\n";
    return written;
}

}  // namespace

Scenario build_scenario(const RunConfig& config) {
    switch (config.scenario) {
        case Selector::generic: {
            SplitMix64 gen{config.seed, 0};
            const EnergyLevels l0 = EnergyLevels::of(random_hermitian(config.dim, gen));
            const EnergyLevels lt = EnergyLevels::of(random_hermitian(config.dim, gen));
            const cmat u = random_unitary(config.dim, gen);
            return Scenario::from_levels(l0, lt, u, AntiUnitary::conjugation(config.dim),
                                         config.beta, cxd(config.alpha0, 0.0),
                                         std::polar(config.alpha1, -config.phi),
                                         OverlapMatrix::identity(config.dim));
        }
        case Selector::spin_fig4:
            return spin_scenario_from(config, spin::EnvVariant::identity);
        case Selector::spin_fig5:
            return spin_scenario_from(config, spin::EnvVariant::spin_flip);
        default:
            throw ValidationError(
                "config: this scenario selector does not describe a single scenario; use "
                "generic, spin_fig4 or spin_fig5");
    }
}

std::vector<std::string> run_command(const RunConfig& config) {
    validate(config);
    switch (config.scenario) {
        case Selector::generic:
            return run_generic(config);
        case Selector::spin_fig4:
            return run_spin_fig4(config);
        case Selector::spin_fig5:
            return run_spin_fig5(config);
        case Selector::battery_demo:
            return run_battery_demo(config);
        case Selector::crooks_check:
            return run_crooks_check(config);
        case Selector::arrow_game:
            return run_arrow_game(config);
    }
    throw ValidationError("config: unknown scenario selector");
}

std::vector<std::string> sample_command(const RunConfig& config) {
    validate(config);
    const Scenario s = build_scenario(config);
    const double dfree = scenario_free_energy_difference(s);

    struct Outcome {
        const char* xi;
        int n, m;
        double w, probability, entropy, likelihood, dominance;
    };
    std::vector<Outcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(2 * s.dim() * s.dim()));
    double total = 0;
    const std::pair<const char*, cvec> ports[2] = {{"+", aux_plus()}, {"-", aux_minus()}};
    for (const auto& [label, xi] : ports)
        for (int n = 0; n < s.dim(); ++n)
            for (int m = 0; m < s.dim(); ++m) {
                const BranchPair pair = postselected_branches(s, n, m, xi);
                Outcome o;
                o.xi = label;
                o.n = n;
                o.m = m;
                o.w = pair.w;
                o.probability = pair.joint_probability();
                o.entropy = entropy_production(pair.w, dfree, s.beta);
                o.likelihood = arrow_likelihood(pair.w - dfree, s.beta);
                o.dominance = projection_diagnostic(s, n, m, xi).dominance;
                outcomes.push_back(o);
                total += o.probability;
            }
    if (std::abs(total - 1.0) > 1e-10)
        throw ContractError("sample: outcome probabilities sum to " + fmt(total) +
                            "; the measurement set is not complete");

    std::vector<Row> rows;
    rows.reserve(config.shots);
    for (std::uint64_t shot = 0; shot < config.shots; ++shot) {
        const double u =
            static_cast<double>(SplitMix64::at(config.seed, shot) >> 11) * 0x1.0p-53 * total;
        double cumulative = 0;
        const Outcome* drawn = &outcomes.back();
        for (const Outcome& o : outcomes) {
            cumulative += o.probability;
            if (u < cumulative) {
                drawn = &o;
                break;
            }
        }
        rows.push_back({static_cast<std::int64_t>(shot), std::string(drawn->xi),
                        static_cast<std::int64_t>(drawn->n), static_cast<std::int64_t>(drawn->m),
                        drawn->w, drawn->entropy, drawn->likelihood, drawn->dominance});
    }
    std::vector<std::string> written;
    written.push_back(emit_table(config, "shots",
                                 {"shot", "xi", "n", "m", "W", "dS", "likelihood", "dominance"},
                                 rows));
    std::cerr << "sampled " << config.shots << " shots over " << outcomes.size()
              << " outcomes (seed " << config.seed << ")\n";
    return written;
}

}  // namespace qarrow::cli
