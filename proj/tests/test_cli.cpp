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

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "cli.hpp"
#include "qarrow/superposed.hpp"

using namespace qarrow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("qarrow_cli_test_" + std::to_string(++counter) + "_" +
                std::to_string(static_cast<unsigned>(::getpid())));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string prefix(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Csv {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    double number(std::size_t row, const std::string& column) const {
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (columns[c] == column) return std::stod(rows[row][c]);
        REQUIRE(false);
        return 0;
    }
};

Csv read_csv(const std::string& file) {
    Csv csv;
    std::istringstream in(slurp(file));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        if (header) {
            csv.columns = cells;
            header = false;
        } else if (!cells.empty()) {
            csv.rows.push_back(cells);
        }
    }
    return csv;
}

int run_binary(const std::string& arguments) {
    const std::string command = std::string(QARROW_BINARY) + " " + arguments + " 2>/dev/null";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("flat config parsing") {
    const std::string text =
        "# comment\n"
        "scenario = spin_fig4\n"
        "beta = 0.5   # inline comment\n"
        "omega=2\n"
        "Omega = 500\n"
        "seed = 17\n"
        "format = json\n";
    const cli::RunConfig config = cli::parse_flat_config(text, "cfg");
    CHECK(config.scenario == cli::Selector::spin_fig4);
    CHECK(config.beta == doctest::Approx(0.5));
    CHECK(config.omega == doctest::Approx(2.0));
    CHECK(config.omega_drive == doctest::Approx(500.0));
    CHECK(config.seed == 17);
    CHECK(config.format == cli::Format::json);

    // Errors carry the file name and one-based line number.
    try {
        cli::parse_flat_config("beta = 1\nnot a pair\n", "cfg");
        FAIL("expected a ValidationError");
    } catch (const ValidationError& error) {
        CHECK(std::string(error.what()).find("cfg:2:") != std::string::npos);
    }
    try {
        cli::parse_flat_config("\n\nbeta = fast\n", "cfg");
        FAIL("expected a ValidationError");
    } catch (const ValidationError& error) {
        CHECK(std::string(error.what()).find("cfg:3:") != std::string::npos);
    }
    CHECK_THROWS_AS(cli::parse_flat_config("speed = 3\n", "cfg"), ValidationError);
    CHECK_THROWS_AS(cli::parse_flat_config("seed = -4\n", "cfg"), ValidationError);
}

TEST_CASE("json config parsing") {
    const cli::RunConfig config = cli::parse_json_config(
        R"({"scenario": "generic", "dim": 3, "beta": 1.25, "out": "x"})", "cfg.json");
    CHECK(config.scenario == cli::Selector::generic);
    CHECK(config.dim == 3);
    CHECK(config.beta == doctest::Approx(1.25));
    CHECK(config.out == "x");
    CHECK_THROWS_AS(cli::parse_json_config("[1, 2]", "cfg.json"), ValidationError);
    CHECK_THROWS_AS(cli::parse_json_config(R"({"beta": [1]})", "cfg.json"), ValidationError);
    CHECK_THROWS_AS(cli::parse_json_config("{broken", "cfg.json"), ValidationError);
}

TEST_CASE("config validation") {
    cli::RunConfig config;
    cli::validate(config);  // defaults are valid
    config.beta = -1.0;
    CHECK_THROWS_AS(cli::validate(config), ValidationError);
    config.beta = 2.0;
    config.alpha0 = 1.0;  // norm now exceeds one
    CHECK_THROWS_AS(cli::validate(config), ValidationError);
    config.alpha0 = 1.0 / std::sqrt(2.0);
    config.dim = 1;
    CHECK_THROWS_AS(cli::validate(config), ValidationError);
}

TEST_CASE("generic run emits normalized reproducible tables") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::generic;
    config.dim = 2;
    config.seed = 5;
    config.out = dir.prefix("g");
    const std::vector<std::string> written = cli::run_command(config);
    REQUIRE(written.size() == 4);
    const Csv plus = read_csv(dir.prefix("g") + "_plus.csv");
    REQUIRE(plus.columns.size() == 5);
    CHECK(plus.columns[0] == "W");
    CHECK(plus.columns[1] == "total");
    CHECK(plus.columns[2] == "forward_part");
    CHECK(plus.columns[3] == "reverse_part");
    CHECK(plus.columns[4] == "interference_part");
    double mass = 0;
    for (std::size_t r = 0; r < plus.rows.size(); ++r) mass += plus.number(r, "total");
    CHECK(std::abs(mass - 1.0) < 1e-10);

    const Csv diag = read_csv(dir.prefix("g") + "_diagnostics_plus.csv");
    CHECK(diag.columns == std::vector<std::string>{"n", "m", "norm0sq", "norm1sq", "bound",
                                                   "dominance"});
    CHECK(diag.rows.size() == 4);

    // Re-running the same config reproduces every byte.
    const std::string before = slurp(dir.prefix("g") + "_plus.csv");
    cli::run_command(config);
    CHECK(slurp(dir.prefix("g") + "_plus.csv") == before);
}

TEST_CASE("spin_fig4 run reproduces the rapid-quench weights") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::spin_fig4;
    config.out = dir.prefix("f4");
    cli::run_command(config);
    const Csv plus = read_csv(dir.prefix("f4") + "_plus.csv");
    const Csv minus = read_csv(dir.prefix("f4") + "_minus.csv");
    const Csv mixture = read_csv(dir.prefix("f4") + "_mixture.csv");
    auto at_zero = [](const Csv& csv) {
        for (std::size_t r = 0; r < csv.rows.size(); ++r)
            if (std::abs(csv.number(r, "W")) < 1e-9) return csv.number(r, "total");
        REQUIRE(false);
        return 0.0;
    };
    CHECK(std::abs(at_zero(plus) - 0.6306) < 1e-3);
    CHECK(std::abs(at_zero(minus) - 0.2265) < 1e-3);
    CHECK(std::abs(at_zero(mixture) - 0.5) < 1e-3);
    // The spin-flip pairing belongs to the other selector.
    config.env = spin::EnvVariant::spin_flip;
    config.env_set = true;
    CHECK_THROWS_AS(cli::run_command(config), ValidationError);
}

TEST_CASE("spin_fig5 run sweeps the interference splitting") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::spin_fig5;
    config.out = dir.prefix("f5");
    cli::run_command(config);
    const Csv sweep = read_csv(dir.prefix("f5") + "_sweep.csv");
    CHECK(sweep.columns ==
          std::vector<std::string>{"homega", "P_plus", "P_minus", "sum", "p01"});
    REQUIRE(sweep.rows.size() == 50);
    const std::size_t last = sweep.rows.size() - 1;
    CHECK(sweep.number(last, "homega") == doctest::Approx(10.0));
    CHECK(std::abs(sweep.number(last, "sum") - sweep.number(last, "p01")) < 1e-3);
    // Strong splitting at the soft end of the sweep.
    CHECK(std::abs(sweep.number(0, "P_plus") - sweep.number(0, "P_minus")) >
          0.1 * sweep.number(0, "sum"));
    // phi is pinned to pi for this figure.
    config.phi = 0.2;
    CHECK_THROWS_AS(cli::run_command(config), ValidationError);
}

TEST_CASE("battery demo stays inside the classical-limit bound") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::battery_demo;
    config.L = 64;
    config.out = dir.prefix("b");
    cli::run_command(config);
    const Csv error = read_csv(dir.prefix("b") + "_error.csv");
    CHECK(error.columns == std::vector<std::string>{"L", "error", "bound"});
    REQUIRE(error.rows.size() == 8);  // 8, 16, ..., 1024
    for (std::size_t r = 0; r < error.rows.size(); ++r)
        CHECK(error.number(r, "error") <= error.number(r, "bound"));
    const Csv damped = read_csv(dir.prefix("b") + "_damped.csv");
    double mass = 0;
    for (std::size_t r = 0; r < damped.rows.size(); ++r) mass += damped.number(r, "total");
    CHECK(std::abs(mass - 1.0) < 1e-10);
}

TEST_CASE("crooks check reports residuals at machine precision") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::crooks_check;
    config.count = 100;
    config.seed = 42;
    config.out = dir.prefix("c");
    cli::run_command(config);
    const Csv residuals = read_csv(dir.prefix("c") + "_residuals.csv");
    REQUIRE(residuals.rows.size() == 100);
    double worst = 0;
    for (std::size_t r = 0; r < residuals.rows.size(); ++r) {
        worst = std::max(worst, residuals.number(r, "crooks"));
        worst = std::max(worst, residuals.number(r, "jarzynski"));
        worst = std::max(worst, residuals.number(r, "entropy"));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("arrow game emits even odds at zero dissipated work") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::arrow_game;
    config.shots = 20000;
    config.seed = 3;
    config.out = dir.prefix("a");
    cli::run_command(config);
    const Csv likelihood = read_csv(dir.prefix("a") + "_likelihood.csv");
    bool saw_zero = false;
    for (std::size_t r = 0; r < likelihood.rows.size(); ++r) {
        if (std::abs(likelihood.number(r, "W")) < 1e-9) {
            saw_zero = true;
            CHECK(likelihood.number(r, "likelihood") == 0.5);
        }
    }
    CHECK(saw_zero);
    const Csv game = read_csv(dir.prefix("a") + "_game.csv");
    REQUIRE(game.rows.size() == 1);
    CHECK(game.number(0, "shots") == 20000);
    CHECK(std::abs(game.number(0, "accuracy") - game.number(0, "optimum")) <
          3.0 * 0.5 / std::sqrt(20000.0));
}

TEST_CASE("json output carries the same records") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::spin_fig4;
    config.format = cli::Format::json;
    config.out = dir.prefix("j");
    cli::run_command(config);
    const std::string text = slurp(dir.prefix("j") + "_plus.json");
    CHECK(text.find("\"W\"") != std::string::npos);
    CHECK(text.find("\"interference_part\"") != std::string::npos);
}

TEST_CASE("sampling is seed-exact and statistically sound") {
    TempDir dir;
    cli::RunConfig config;
    config.scenario = cli::Selector::spin_fig4;
    config.shots = 20000;
    config.seed = 11;
    config.out = dir.prefix("s");
    cli::sample_command(config);
    const std::string first = slurp(dir.prefix("s") + "_shots.csv");
    cli::sample_command(config);
    CHECK(slurp(dir.prefix("s") + "_shots.csv") == first);

    const Csv shots = read_csv(dir.prefix("s") + "_shots.csv");
    CHECK(shots.columns == std::vector<std::string>{"shot", "xi", "n", "m", "W", "dS",
                                                    "likelihood", "dominance"});
    REQUIRE(shots.rows.size() == 20000);

    // Empirical counts stay within three sigma of the exact joint.
    const Scenario s = cli::build_scenario(config);
    std::map<std::string, double> expected;
    const std::pair<std::string, cvec> ports[2] = {{"+", aux_plus()}, {"-", aux_minus()}};
    for (const auto& [label, xi] : ports)
        for (int n = 0; n < s.dim(); ++n)
            for (int m = 0; m < s.dim(); ++m)
                expected[label + std::to_string(n) + std::to_string(m)] =
                    postselected_branches(s, n, m, xi).joint_probability();
    std::map<std::string, int> counts;
    for (std::size_t r = 0; r < shots.rows.size(); ++r)
        counts[shots.rows[r][1] + shots.rows[r][2] + shots.rows[r][3]] += 1;
    const double n_shots = static_cast<double>(shots.rows.size());
    for (const auto& [key, probability] : expected) {
        const double sigma = std::sqrt(n_shots * probability * (1.0 - probability));
        CHECK(std::abs(counts[key] - n_shots * probability) <= 3.0 * sigma + 1.0);
    }
}

TEST_CASE("the binary maps failures to documented exit codes") {
    TempDir dir;
    std::ofstream good(dir.prefix("good.cfg"));
    good << "scenario = spin_fig4\n";
    good.close();
    std::ofstream bad(dir.prefix("bad.cfg"));
    bad << "beta = -2\n";
    bad.close();

    CHECK(run_binary("run --config " + dir.prefix("good.cfg") + " --out " + dir.prefix("ok")) ==
          0);
    CHECK(fs::exists(dir.prefix("ok") + "_plus.csv"));
    CHECK(run_binary("run --config " + dir.prefix("bad.cfg") + " --out " + dir.prefix("no")) ==
          2);
    CHECK(run_binary("run --config " + dir.prefix("missing.cfg")) == 2);
    CHECK(run_binary("run --no-such-flag") == 2);
    CHECK(run_binary("--help") == 0);

    // Flags override the config file.
    CHECK(run_binary("sample --config " + dir.prefix("good.cfg") + " --shots 10 --seed 9 --out " +
                     dir.prefix("sm")) == 0);
    const Csv shots = read_csv(dir.prefix("sm") + "_shots.csv");
    CHECK(shots.rows.size() == 10);
}
