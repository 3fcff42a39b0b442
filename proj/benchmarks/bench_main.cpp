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

#include <benchmark/benchmark.h>

#include "qarrow/battery.hpp"
#include "qarrow/quench.hpp"
#include "qarrow/registers.hpp"
#include "qarrow/rng.hpp"
#include "qarrow/spinhalf.hpp"
#include "qarrow/superposed.hpp"
#include "qarrow/tpm.hpp"

using namespace qarrow;

namespace {

Scenario random_scenario(int dim, uint64_t seed) {
    SplitMix64 gen{seed, 0};
    const EnergyLevels levels0 = EnergyLevels::of(random_hermitian(dim, gen));
    const EnergyLevels levels_tau = EnergyLevels::of(random_hermitian(dim, gen));
    const cmat drive = random_unitary(dim, gen);
    const double root_half = 0.70710678118654752440;
    return Scenario::from_levels(levels0, levels_tau, drive, AntiUnitary::conjugation(dim),
                                 1.5, root_half, root_half, OverlapMatrix::identity(dim));
}

void BM_Propagator(benchmark::State& state) {
    const spin::SpinScenario sc;
    const Protocol protocol = spin::protocol(sc);
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(propagator(protocol, 0.0, protocol.duration, steps));
    state.SetComplexityN(steps);
}
BENCHMARK(BM_Propagator)->Arg(256)->Arg(1024)->Arg(4096)->Complexity(benchmark::oN);

void BM_ForwardTable(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    SplitMix64 gen{11, 0};
    const EnergyLevels h0 = EnergyLevels::of(random_hermitian(dim, gen));
    const EnergyLevels htau = EnergyLevels::of(random_hermitian(dim, gen));
    const cmat u = random_unitary(dim, gen);
    for (auto _ : state) benchmark::DoNotOptimize(forward_table(h0, htau, u, 1.5));
}
BENCHMARK(BM_ForwardTable)->Arg(2)->Arg(4)->Arg(8);

void BM_ConditionalDistribution(benchmark::State& state) {
    const Scenario s = random_scenario(static_cast<int>(state.range(0)), 5);
    const cvec xi = aux_plus();
    for (auto _ : state) benchmark::DoNotOptimize(conditional_distribution(s, xi));
}
BENCHMARK(BM_ConditionalDistribution)->Arg(2)->Arg(3)->Arg(4);

void BM_Interferometer(benchmark::State& state) {
    const Scenario s = spin::scenario(spin::SpinScenario{});
    for (auto _ : state) benchmark::DoNotOptimize(run_interferometer(s));
}
BENCHMARK(BM_Interferometer);

void BM_ClassicalLimitError(benchmark::State& state) {
    const Scenario s = spin::scenario(spin::SpinScenario{});
    const int length = static_cast<int>(state.range(0));
    const BatteryWindow bw = battery_window(s, 1.0, length);
    for (auto _ : state)
        benchmark::DoNotOptimize(classical_limit_error(s, bw.ladder, bw.length));
    state.SetComplexityN(length);
}
BENCHMARK(BM_ClassicalLimitError)->Arg(64)->Arg(256)->Arg(1024)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
