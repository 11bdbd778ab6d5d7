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
#include <random>

#include "oracles.hpp"
#include "spinsbs/thermal.hpp"

namespace {

using namespace spinsbs;

constexpr double kPi = 3.14159265358979323846;

HalfInteger half(int twice) { return HalfInteger::from_twice(twice); }

ThermalParams params(int twice_j, double bO, double g, int twice_m, int twice_mp, double t) {
    return {SpinQuantumNumber(twice_j), bO, g, half(twice_m), half(twice_mp), t};
}

// exp(-i t (m g s_z - s_x)) by Rodrigues: rotation by 2 w t about (-1, 0, m g)/w.
oracle::Mat rodrigues(double g, double m, double t) {
    const double w = std::sqrt(1.0 + m * m * g * g);
    oracle::Mat sx(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    const oracle::Mat n = (m * g * sz - sx) / w;
    return std::cos(w * t) * oracle::Mat::Identity(2, 2) - Complex(0, std::sin(w * t)) * n;
}

TEST(Evolution, SpinHalfMatchesRodrigues) {
    for (double g : {0.0, 0.5, 3.0}) {
        for (int tm : {-1, 1}) {
            for (double t : {0.0, 0.3, 2.2}) {
                const Matrix u = thermal_evolution(SpinQuantumNumber(1), g, half(tm), t);
                EXPECT_LT(max_abs(u - rodrigues(g, 0.5 * tm, t)), 1e-13);
            }
        }
    }
    EXPECT_LT(max_abs(thermal_evolution(SpinQuantumNumber(4), 1.0, half(1), 0.0) -
                      Matrix::Identity(5, 5)),
              1e-15);
}

TEST(Evolution, DiagonalPhaseExample) {
    const auto s = build_spin_operators(SpinQuantumNumber(2));
    const Matrix u = unitary_evolution(s.z.matrix, kPi);
    EXPECT_NEAR(u(0, 0).real(), -1.0, 1e-14);
    EXPECT_NEAR(u(1, 1).real(), 1.0, 1e-14);
    EXPECT_NEAR(u(2, 2).real(), -1.0, 1e-14);
}

TEST(GammaKernel, PauliDecompositionOfSpinHalfProduct) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int tm = 2 * static_cast<int>(4 * u(rng)) - 3;
        const int tmp = 2 * static_cast<int>(4 * u(rng)) - 3;
        const double g = 10.0 * u(rng);
        const double t = 10.0 * u(rng);
        const auto p = params(1, 0.9, g, tm, tmp, t);
        const GammaKernel k = gamma_kernel(p);
        const oracle::Mat m = rodrigues(g, 0.5 * tmp, t).adjoint() * rodrigues(g, 0.5 * tm, t);
        oracle::Mat sx(2, 2), sy(2, 2), sz(2, 2);
        sx << 0, 1, 1, 0;
        sy << 0, Complex(0, -1), Complex(0, 1), 0;
        sz << 1, 0, 0, -1;
        // m = a0 + i (ax sx + ay sy + az sz)
        const Complex a0 = m.trace() / 2.0;
        const Complex ax = (m * sx).trace() / Complex(0, 2);
        const Complex ay = (m * sy).trace() / Complex(0, 2);
        const Complex az = (m * sz).trace() / Complex(0, 2);
        EXPECT_NEAR(a0.real(), k.gamma0, 1e-12);
        EXPECT_NEAR(ax.real(), k.gammax, 1e-12);
        EXPECT_NEAR(ay.real(), -k.gammay, 1e-12);
        EXPECT_NEAR(az.real(), k.gammaz, 1e-12);
        EXPECT_NEAR(a0.imag() + ax.imag() + ay.imag() + az.imag(), 0.0, 1e-12);
    }
}

TEST(GammaKernel, SpecExamplePoint) {
    const auto p = params(3, 0.9, 2.0, 1, -1, 0.7);
    const GammaKernel k = gamma_kernel(p);
    const oracle::Mat m = rodrigues(2.0, -0.5, 0.7).adjoint() * rodrigues(2.0, 0.5, 0.7);
    EXPECT_NEAR(k.gamma0, (m.trace() / 2.0).real(), 1e-13);
    EXPECT_NEAR(k.omega_m, std::sqrt(2.0), 1e-15);
}

TEST(GammaKernel, UnitNormOverRandomDraws) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int tm = static_cast<int>(11 * u(rng)) - 5;
        const int tmp = static_cast<int>(11 * u(rng)) - 5;
        const auto p = params(10, 3 * u(rng), 10 * u(rng), tm, tmp, 20 * u(rng));
        EXPECT_NEAR(gamma_kernel(p).norm_squared(), 1.0, 1e-12);
    }
}

TEST(GammaKernel, TrivialCases) {
    const GammaKernel same = gamma_kernel(params(3, 0.9, 4.0, 1, 1, 2.5));
    EXPECT_NEAR(same.gamma0, 1.0, 1e-15);
    EXPECT_NEAR(same.gammax, 0.0, 1e-15);
    EXPECT_NEAR(same.gammay, 0.0, 1e-15);
    EXPECT_NEAR(same.gammaz, 0.0, 1e-15);
    const GammaKernel start = gamma_kernel(params(3, 0.9, 4.0, 1, -1, 0.0));
    EXPECT_EQ(start.gamma0, 1.0);
    EXPECT_EQ(start.gammax, 0.0);
}

class ThermalOracle : public ::testing::TestWithParam<int> {};

TEST_P(ThermalOracle, ClosedFormsMatchDenseMatrices) {
    const int tw = GetParam();
    std::mt19937_64 rng(100 + tw);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const double bO = 0.1 + 2.9 * u(rng);
        const double g = 10.0 * u(rng);
        const int tm = 2 * static_cast<int>(4 * u(rng)) - 3;
        const int tmp = 2 * static_cast<int>(4 * u(rng)) - 3;
        const double t = 10.0 * u(rng);
        const auto p = params(tw, bO, g, tm, tmp, t);
        const Complex want = oracle::gamma_trace(0.5 * tw, bO, g, 0.5 * tm, 0.5 * tmp, t);
        EXPECT_LT(std::abs(gamma_thermal(p) - want), 1e-9);
        EXPECT_LT(std::abs(oracle_gamma(p) - want), 1e-10);
        const double fwant = oracle::fidelity_evolved(0.5 * tw, bO, g, 0.5 * tm, 0.5 * tmp, t);
        // The literal square-root formula only resolves about sqrt(eps) near F = 1.
        EXPECT_NEAR(fidelity_thermal(p), fwant, 1e-7);
        EXPECT_NEAR(fidelity_thermal(p), oracle_fidelity(p), 1e-9);
    }
}

INSTANTIATE_TEST_SUITE_P(SpinsUpToThree, ThermalOracle, ::testing::Range(1, 7));

TEST(GammaThermal, SpecExamplePoints) {
    for (double t : {0.1, 0.5, 1.0}) {
        const auto p = params(3, 0.9, 3.0, 1, -1, t);
        EXPECT_LT(std::abs(gamma_thermal(p) - oracle::gamma_trace(1.5, 0.9, 3.0, 0.5, -0.5, t)),
                  1e-10);
    }
    const auto p = params(2, 0.9, 5.0, 1, -1, 0.8);
    EXPECT_NEAR(fidelity_thermal(p), oracle::fidelity_evolved(1.0, 0.9, 5.0, 0.5, -0.5, 0.8),
                1e-9);
}

TEST(GammaThermal, TrivialLimits) {
    for (int tw = 0; tw <= 6; ++tw) {
        EXPECT_EQ(gamma_thermal(params(tw, 0.9, 3.0, 1, 1, 2.0)), Complex(1.0, 0.0));
        EXPECT_EQ(fidelity_thermal(params(tw, 0.9, 3.0, -1, -1, 2.0)), 1.0);
        EXPECT_LT(std::abs(gamma_thermal(params(tw, 0.9, 3.0, 1, -1, 0.0)) - 1.0), 1e-14);
        EXPECT_NEAR(fidelity_thermal(params(tw, 0.9, 3.0, 1, -1, 0.0)), 1.0, 1e-14);
        for (double t : {0.5, 4.0}) {
            EXPECT_LT(std::abs(gamma_thermal(params(tw, 0.9, 0.0, 1, -1, t)) - 1.0), 1e-13);
            EXPECT_NEAR(fidelity_thermal(params(tw, 0.0, 3.0, 1, -1, t)), 1.0, 1e-13);
        }
    }
}

TEST(GammaThermal, ConjugationAndExchangeSymmetry) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int tw = 1 + trial % 6;
        const double bO = 3 * u(rng);
        const double g = 10 * u(rng);
        const double t = 10 * u(rng);
        const auto a = params(tw, bO, g, 1, -3, t);
        const auto b = params(tw, bO, g, -3, 1, t);
        EXPECT_LT(std::abs(gamma_thermal(a) - std::conj(gamma_thermal(b))), 1e-12);
        EXPECT_NEAR(fidelity_thermal(a), fidelity_thermal(b), 1e-12);
        EXPECT_LE(std::abs(gamma_thermal(a)), 1.0 + 1e-12);
        EXPECT_LE(fidelity_thermal(a), 1.0 + 1e-12);
        EXPECT_GE(fidelity_thermal(a), 0.0);
    }
}

TEST(GammaThermal, BranchInvariance) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = params(1 + trial % 6, 3 * u(rng), 10 * u(rng), 1, -1, 10 * u(rng));
        const Complex lam = decoherence_lambda(p);
        const Complex kappa = decoherence_kappa(p);
        EXPECT_LT(std::abs(0.5 * (lam + 1.0 / lam) - kappa), 1e-10 * std::abs(lam));
        const Complex z0 = spin_power_sum(std::exp(p.beta_omega), p.j);
        EXPECT_LT(std::abs(spin_power_sum(lam, p.j) - spin_power_sum(1.0 / lam, p.j)),
                  1e-10 * std::abs(z0));
    }
}

TEST(FidelityKernel, LargestEigenvalueOfSpinHalfProduct) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    oracle::Mat sx(2, 2);
    sx << 0, 1, 1, 0;
    for (int trial = 0; trial < 200; ++trial) {
        const double bO = 3 * u(rng);
        const double g = 10 * u(rng);
        const double t = 10 * u(rng);
        const auto p = params(1, bO, g, 1, -1, t);
        const oracle::Mat root = oracle::expm(-0.5 * bO * sx);
        const oracle::Mat x = root * rodrigues(g, -0.5, t).adjoint() * rodrigues(g, 0.5, t) * root;
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(x.adjoint() * x);
        EXPECT_NEAR(fidelity_kernel(p).lambda_tilde, es.eigenvalues().maxCoeff(),
                    1e-11 * es.eigenvalues().maxCoeff());
    }
    const auto same = fidelity_kernel(params(3, 0.7, 2.0, 1, 1, 1.0));
    EXPECT_NEAR(same.kappa_tilde, std::cosh(1.4), 1e-14);
    EXPECT_NEAR(same.lambda_tilde, std::exp(1.4), 1e-13);
    const auto hot = fidelity_kernel(params(3, 0.0, 2.0, 1, -1, 1.0));
    EXPECT_EQ(hot.kappa_tilde, 1.0);
    EXPECT_EQ(hot.lambda_tilde, 1.0);
}

TEST(GammaThermal, PeriodicWhenFrequenciesCoincide) {
    // m = -m' gives equal frequencies; at T = pi/w both unitaries are -1 (spin 1/2).
    const double g = 2.3;
    const double w = std::sqrt(1.0 + 0.25 * g * g);
    for (int tw = 1; tw <= 6; ++tw) {
        const auto p = params(tw, 0.9, g, 1, -1, kPi / w);
        EXPECT_LT(std::abs(gamma_thermal(p) - 1.0), 1e-12);
        EXPECT_NEAR(fidelity_thermal(p), 1.0, 1e-12);
        const auto shifted = params(tw, 0.9, g, 1, -1, 0.37 + kPi / w);
        EXPECT_LT(std::abs(gamma_thermal(shifted) - gamma_thermal(params(tw, 0.9, g, 1, -1, 0.37))),
                  1e-12);
    }
}

TEST(GammaThermal, MeasurementLimitWhenTunnelingVanishes) {
    // Omega -> eps: g/Omega = G/eps, t Omega = eps tau, beta Omega -> 0.
    const double eps = 1e-6;
    for (int tw = 1; tw <= 6; ++tw) {
        for (double tau : {0.2, 0.9, 2.5}) {
            const double G = 1.7;
            const auto p = params(tw, 0.0, G / eps, 1, -1, eps * tau);
            EXPECT_LT(std::abs(gamma_thermal(p) - oracle::dirichlet(0.5 * tw, 2.0 * G * tau)),
                      1e-5);
        }
    }
}

TEST(ThermalParams, Validation) {
    EXPECT_THROW(validate(params(1, -0.1, 1.0, 1, -1, 1.0)), std::invalid_argument);
    EXPECT_THROW(validate(params(1, NAN, 1.0, 1, -1, 1.0)), std::invalid_argument);
    EXPECT_THROW(validate(params(1, 0.9, -1.0, 1, -1, 1.0)), std::invalid_argument);
    EXPECT_THROW(validate(params(1, 0.9, 1.0, 1, -1, INFINITY)), std::invalid_argument);
    EXPECT_THROW(validate(params(1, 0.9, 1.0, 3, -1, 1.0), SpinQuantumNumber(1)),
                 std::invalid_argument);
    EXPECT_NO_THROW(validate(params(1, 0.9, 1.0, 3, -1, 1.0), SpinQuantumNumber(3)));
    EXPECT_THROW((void)gamma_thermal(params(1, -1.0, 1.0, 1, -1, 1.0)), std::invalid_argument);
}

} // namespace
