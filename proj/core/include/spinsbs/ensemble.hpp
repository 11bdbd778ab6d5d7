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

/**
 * @file
 * Random-coupling ensembles: each realization draws g_k for the unobserved
 * fraction and for every macrofraction, then evaluates |Gamma|(t),
 * F^mac(t) and the SBS bound for every requested environment spin j.
 *
 * Realization r of a run with base seed s draws from the streams
 * (s, first_realization + r, 0) for the unobserved fraction and
 * (s, first_realization + r, 1 + f) for macrofraction f. Results are
 * therefore independent of thread count and scheduling.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinsbs/linalg.hpp"
#include "spinsbs/spin.hpp"

namespace spinsbs {

enum class CouplingKind { uniform };

struct CouplingDistribution {
    CouplingKind kind = CouplingKind::uniform;
    double low = 0.0;
    double high = 10.0;
    std::uint64_t seed = 42;
};

/// Problems with the distribution, one message per field; empty if valid.
[[nodiscard]] std::vector<std::string> validate(const CouplingDistribution &dist);

/**
 * n couplings for one realization and stream. A pure function of
 * (seed, realization, stream); values lie in [low, high].
 * Throws std::invalid_argument for n == 0 or an invalid distribution.
 */
[[nodiscard]] std::vector<double> sample_couplings(const CouplingDistribution &dist,
                                                   std::size_t n,
                                                   std::uint64_t realization,
                                                   std::uint64_t stream = 0);

/// n equally spaced points from start to stop inclusive.
[[nodiscard]] std::vector<double> linspace(double start, double stop, std::size_t n);

struct EnsembleConfig {
    std::vector<SpinQuantumNumber> j_list = {
        SpinQuantumNumber(1), SpinQuantumNumber(2), SpinQuantumNumber(3),
        SpinQuantumNumber(4), SpinQuantumNumber(5)};
    double beta_omega = 0.9;
    SpinQuantumNumber j_s = SpinQuantumNumber(1);
    HalfInteger m = HalfInteger::from_twice(-1);
    HalfInteger m_prime = HalfInteger::from_twice(1);
    std::size_t unobserved_size = 5;
    std::vector<std::size_t> macrofraction_sizes = {5};
    CouplingDistribution couplings;
    std::size_t realizations = 100;
    std::uint64_t first_realization = 0;
    std::vector<double> time_grid = linspace(0.0, 30.0, 600);
    /// Central-spin matrix alpha_{mm'}; equal superposition when absent.
    std::optional<Matrix> system_alpha;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// "field: message" strings for every invalid field; empty if valid.
[[nodiscard]] std::vector<std::string> validate(const EnsembleConfig &config);

/// Time series for one (j, realization) or one j averaged over realizations.
/// f_mac is the fidelity of the first macrofraction for the pair (m, m').
struct EnsembleSeries {
    std::vector<double> abs_gamma;
    std::vector<double> f_mac;
    std::vector<double> decoherence_term;
    std::vector<double> distinguishability_term;
    std::vector<double> bound;
};

struct EnsembleRun {
    EnsembleConfig config;
    /// couplings[r]: unobserved spins first, then each macrofraction.
    std::vector<std::vector<double>> couplings;
    /// per_realization[jindex][r]
    std::vector<std::vector<EnsembleSeries>> per_realization;
    /// average[jindex], elementwise arithmetic mean over realizations.
    std::vector<EnsembleSeries> average;
};

/**
 * Run every realization (in parallel when threads != 1) and average.
 * Throws std::invalid_argument listing all invalid fields.
 */
[[nodiscard]] EnsembleRun run_experiment(const EnsembleConfig &config);

/// Elementwise mean with compensated summation in index order.
[[nodiscard]] std::vector<double>
mean_of_series(const std::vector<const std::vector<double> *> &series);

} // namespace spinsbs
