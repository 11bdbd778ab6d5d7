// Copyright 2026 The spinsbs Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "spinsbs/ensemble.hpp"
#include "spinsbs/measurement_limit.hpp"
#include "spinsbs/states.hpp"
#include "spinsbs/thermal.hpp"

namespace {

using namespace spinsbs;

ThermalParams point(int twice_j) {
    return {SpinQuantumNumber(twice_j), 0.9, 3.7, HalfInteger::from_twice(1),
            HalfInteger::from_twice(-1), 2.3};
}

void BM_GammaThermalClosedForm(benchmark::State &state) {
    const auto p = point(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_thermal(p));
    }
}
BENCHMARK(BM_GammaThermalClosedForm)->Arg(1)->Arg(5)->Arg(20);

void BM_GammaThermalDense(benchmark::State &state) {
    const auto p = point(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_gamma(p));
    }
}
BENCHMARK(BM_GammaThermalDense)->Arg(1)->Arg(5)->Arg(20);

void BM_FidelityThermalClosedForm(benchmark::State &state) {
    const auto p = point(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fidelity_thermal(p));
    }
}
BENCHMARK(BM_FidelityThermalClosedForm)->Arg(1)->Arg(5)->Arg(20);

void BM_FidelityThermalDense(benchmark::State &state) {
    const auto p = point(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_fidelity(p));
    }
}
BENCHMARK(BM_FidelityThermalDense)->Arg(1)->Arg(5)->Arg(20);

void BM_ExtractAxialCoefficients(benchmark::State &state) {
    const auto j = SpinQuantumNumber(static_cast<int>(state.range(0)));
    const auto rho = thermal_state(j, 0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_axial_coefficients(rho));
    }
}
BENCHMARK(BM_ExtractAxialCoefficients)->Arg(1)->Arg(5)->Arg(10);

void BM_EnsembleFig1(benchmark::State &state) {
    EnsembleConfig c;
    c.realizations = static_cast<std::size_t>(state.range(0));
    c.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(c));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.realizations));
}
BENCHMARK(BM_EnsembleFig1)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
