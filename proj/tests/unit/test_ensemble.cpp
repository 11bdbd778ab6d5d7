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


#include <gtest/gtest.h>

#include <cmath>

#include "spinsbs/ensemble.hpp"
#include "spinsbs/rng.hpp"
#include "spinsbs/sbs.hpp"
#include "spinsbs/thermal.hpp"

namespace {

using namespace spinsbs;

EnsembleConfig small_config() {
    EnsembleConfig c;
    c.j_list = {SpinQuantumNumber(1), SpinQuantumNumber(3)};
    c.realizations = 6;
    c.time_grid = linspace(0.0, 5.0, 21);
    c.threads = 1;
    return c;
}

TEST(Rng, StreamsAreIndependentAndReproducible) {
    EXPECT_NE(derive_stream_seed(42, 0, 0), derive_stream_seed(42, 0, 1));
    EXPECT_NE(derive_stream_seed(42, 0, 0), derive_stream_seed(42, 1, 0));
    EXPECT_NE(derive_stream_seed(42, 0, 0), derive_stream_seed(43, 0, 0));
    StreamRng a(1, 2, 3);
    StreamRng b(1, 2, 3);
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform01();
        EXPECT_EQ(x, b.uniform01());
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
}

TEST(SampleCouplings, DeterministicAndInRange) {
    const CouplingDistribution d{CouplingKind::uniform, 0.0, 10.0, 7};
    const auto a = sample_couplings(d, 5, 3);
    EXPECT_EQ(a, sample_couplings(d, 5, 3));
    EXPECT_NE(a, sample_couplings(d, 5, 4));
    for (double x : a) {
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 10.0);
    }
    const CouplingDistribution fixed{CouplingKind::uniform, 2.5, 2.5, 7};
    for (double x : sample_couplings(fixed, 8, 0)) {
        EXPECT_EQ(x, 2.5);
    }
}

TEST(SampleCouplings, UniformMoments) {
    const CouplingDistribution d{CouplingKind::uniform, 0.0, 10.0, 99};
    const std::size_t n = 100000;
    const auto x = sample_couplings(d, n, 0);
    double mean = 0.0;
    for (double v : x) {
        mean += v;
    }
    mean /= n;
    double var = 0.0;
    for (double v : x) {
        var += (v - mean) * (v - mean);
    }
    var /= (n - 1);
    const double sigma2 = 100.0 / 12.0;
    EXPECT_NEAR(mean, 5.0, 3.0 * std::sqrt(sigma2 / n));
    // Var of the sample variance for a uniform law: (mu4 - sigma^4)/n, mu4 = 100^2/80.
    EXPECT_NEAR(var, sigma2, 3.0 * std::sqrt((1e4 / 80.0 - sigma2 * sigma2) / n));
}

TEST(SampleCouplings, RejectsBadInput) {
    EXPECT_THROW((void)sample_couplings({CouplingKind::uniform, 0, 10, 1}, 0, 0),
                 std::invalid_argument);
    EXPECT_THROW((void)sample_couplings({CouplingKind::uniform, 5, 1, 1}, 3, 0),
                 std::invalid_argument);
    EXPECT_THROW((void)sample_couplings({CouplingKind::uniform, -1, 1, 1}, 3, 0),
                 std::invalid_argument);
}

TEST(Linspace, EndpointsAndSpacing) {
    const auto x = linspace(0.0, 30.0, 600);
    ASSERT_EQ(x.size(), 600u);
    EXPECT_EQ(x.front(), 0.0);
    EXPECT_EQ(x.back(), 30.0);
    EXPECT_EQ(linspace(2.0, 5.0, 1), std::vector<double>{2.0});
}

TEST(Ensemble, ValidationListsEveryProblem) {
    EnsembleConfig c = small_config();
    c.j_list.clear();
    c.beta_omega = -1.0;
    c.m = HalfInteger::from_twice(3);
    c.realizations = 0;
    c.macrofraction_sizes = {5, 0};
    const auto errors = validate(c);
    EXPECT_EQ(errors.size(), 5u);
    EXPECT_THROW((void)run_experiment(c), std::invalid_argument);
}

TEST(Ensemble, ThreadCountDoesNotChangeResults) {
    auto c = small_config();
    const auto one = run_experiment(c);
    c.threads = 4;
    const auto four = run_experiment(c);
    EXPECT_EQ(one.couplings, four.couplings);
    for (std::size_t ji = 0; ji < c.j_list.size(); ++ji) {
        EXPECT_EQ(one.average[ji].f_mac, four.average[ji].f_mac);
        EXPECT_EQ(one.average[ji].abs_gamma, four.average[ji].abs_gamma);
        EXPECT_EQ(one.average[ji].bound, four.average[ji].bound);
        for (std::size_t r = 0; r < c.realizations; ++r) {
            EXPECT_EQ(one.per_realization[ji][r].bound, four.per_realization[ji][r].bound);
        }
    }
}

TEST(Ensemble, RealizationsDependOnlyOnTheirIndex) {
    auto c = small_config();
    const auto full = run_experiment(c);
    c.first_realization = 3;
    c.realizations = 3;
    const auto tail = run_experiment(c);
    for (std::size_t r = 0; r < 3; ++r) {
        EXPECT_EQ(tail.couplings[r], full.couplings[3 + r]);
        EXPECT_EQ(tail.per_realization[1][r].f_mac, full.per_realization[1][3 + r].f_mac);
    }
}

TEST(Ensemble, HalfAveragesCombineToFullAverage) {
    auto c = small_config();
    const auto full = run_experiment(c);
    c.realizations = 3;
    const auto first = run_experiment(c);
    c.first_realization = 3;
    const auto second = run_experiment(c);
    for (std::size_t i = 0; i < c.time_grid.size(); ++i) {
        const double combined =
            0.5 * (first.average[0].f_mac[i] + second.average[0].f_mac[i]);
        EXPECT_NEAR(full.average[0].f_mac[i], combined, 1e-15);
    }
}

TEST(Ensemble, SeriesMatchLibraryCalls) {
    auto c = small_config();
    const auto run = run_experiment(c);
    const auto &g = run.couplings[2];
    ASSERT_EQ(g.size(), 10u);
    const auto layout = MacrofractionLayout::contiguous(g, 5, {5});
    const ThermalEnvironment env{c.j_list[1], c.beta_omega};
    for (std::size_t i = 0; i < c.time_grid.size(); i += 5) {
        const double t = c.time_grid[i];
        EXPECT_EQ(run.per_realization[1][2].abs_gamma[i],
                  std::abs(total_decoherence_factor(layout, env, c.m, c.m_prime, t)));
        EXPECT_EQ(run.per_realization[1][2].f_mac[i],
                  macrofraction_fidelity(layout, 0, env, c.m, c.m_prime, t));
    }
}

TEST(Ensemble, EqualCouplingsSingleRealizationIsItsOwnAverage) {
    auto c = small_config();
    c.realizations = 1;
    c.couplings.low = c.couplings.high = 3.0;
    const auto run = run_experiment(c);
    EXPECT_EQ(run.average[0].f_mac, run.per_realization[0][0].f_mac);
    const ThermalParams p{c.j_list[0], 0.9, 3.0, c.m, c.m_prime, c.time_grid[7]};
    EXPECT_NEAR(run.average[0].f_mac[7], std::pow(fidelity_thermal(p), 5), 1e-14);
}

TEST(MeanOfSeries, CompensatedSum) {
    std::vector<double> a = {1e16, 1.0};
    std::vector<double> b = {1.0, 1.0};
    std::vector<double> c = {-1e16, 1.0};
    const auto m = mean_of_series({&a, &b, &c});
    EXPECT_EQ(m[0], 1.0 / 3.0);
    EXPECT_EQ(m[1], 1.0);
    EXPECT_TRUE(mean_of_series({}).empty());
}

} // namespace
