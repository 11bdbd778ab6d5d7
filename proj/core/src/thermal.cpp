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

#include "spinsbs/thermal.hpp"

#include <cmath>
#include <string>

#include "spinsbs/states.hpp"

namespace spinsbs {

void validate(const ThermalParams &p) {
    if (!std::isfinite(p.beta_omega) || p.beta_omega < 0.0) {
        throw std::invalid_argument("betaOmega must be finite and >= 0");
    }
    if (!std::isfinite(p.g_over_omega) || p.g_over_omega < 0.0) {
        throw std::invalid_argument("g/Omega must be finite and >= 0");
    }
    if (!std::isfinite(p.t)) {
        throw std::invalid_argument("t must be finite");
    }
}

void validate(const ThermalParams &p, SpinQuantumNumber j_s) {
    validate(p);
    if (!j_s.admits(p.m) || !j_s.admits(p.m_prime)) {
        throw std::invalid_argument("m and m' must be magnetic numbers of j_S = " +
                                    j_s.to_string());
    }
}

GammaKernel gamma_kernel(const ThermalParams &p) {
    const double g = p.g_over_omega;
    const double m = p.m.value();
    const double mp = p.m_prime.value();

    GammaKernel k;
    k.omega_m = std::sqrt(1.0 + m * m * g * g);
    k.omega_mprime = std::sqrt(1.0 + mp * mp * g * g);
    const double w = k.omega_m;
    const double wp = k.omega_mprime;
    const double s = std::sin(w * p.t);
    const double c = std::cos(w * p.t);
    const double sp = std::sin(wp * p.t);
    const double cp = std::cos(wp * p.t);

    k.gamma0 = c * cp + (1.0 + m * mp * g * g) / (w * wp) * s * sp;
    k.gammax = s * cp / w - sp * c / wp;
    k.gammay = -(m - mp) * g / (w * wp) * s * sp;
    k.gammaz = g * (mp * c * sp / wp - m * cp * s / w);
    return k;
}

Complex spin_power_sum(Complex x, SpinQuantumNumber j) {
    // x^{-2j} (1 + x^2 + ... + x^{4j}) by Horner in x^2.
    const int n = j.twice();
    const Complex x2 = x * x;
    Complex acc(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        acc = acc * x2 + 1.0;
    }
    Complex scale(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        scale /= x;
    }
    return acc * scale;
}

Complex decoherence_kappa(const ThermalParams &p) {
    const auto k = gamma_kernel(p);
    return {k.gamma0 * std::cosh(p.beta_omega), -k.gammax * std::sinh(p.beta_omega)};
}

Complex decoherence_lambda(const ThermalParams &p) {
    const Complex kappa = decoherence_kappa(p);
    return kappa + std::sqrt(kappa * kappa - 1.0);
}

Complex gamma_thermal(const ThermalParams &p) {
    validate(p);
    if (p.m == p.m_prime) {
        return {1.0, 0.0};
    }
    const Complex lambda = decoherence_lambda(p);
    const Complex lambda0(std::exp(p.beta_omega), 0.0);
    return spin_power_sum(lambda, p.j) / spin_power_sum(lambda0, p.j);
}

FidelityKernel fidelity_kernel(const ThermalParams &p) {
    const auto k = gamma_kernel(p);
    FidelityKernel f;
    f.kappa_tilde = k.gammaz * k.gammaz + k.gammay * k.gammay +
                    (k.gamma0 * k.gamma0 + k.gammax * k.gammax) *
                        std::cosh(2.0 * p.beta_omega);
    if (f.kappa_tilde < 1.0) {
        if (f.kappa_tilde < 1.0 - 1e-9) {
            throw NumericalError("fidelity kernel: kappa~ = " +
                                 std::to_string(f.kappa_tilde) + " < 1");
        }
        f.kappa_tilde = 1.0;
    }
    f.lambda_tilde =
        f.kappa_tilde + std::sqrt(f.kappa_tilde * f.kappa_tilde - 1.0);
    return f;
}

double fidelity_thermal(const ThermalParams &p) {
    validate(p);
    if (p.m == p.m_prime) {
        return 1.0;
    }
    const auto k = fidelity_kernel(p);
    // lambda~^l with half-integer l: sum over powers of sqrt(lambda~).
    const double root = std::sqrt(k.lambda_tilde);
    const double root0 = std::exp(p.beta_omega);
    return spin_power_sum(root, p.j).real() / spin_power_sum(root0, p.j).real();
}

Matrix thermal_evolution(SpinQuantumNumber j, double g_over_omega, HalfInteger m,
                         double t) {
    const auto ops = build_spin_operators(j);
    const Matrix h = 2.0 * (m.value() * g_over_omega * ops.z.matrix - ops.x.matrix);
    return unitary_evolution(h, t);
}

Complex oracle_gamma(const ThermalParams &p) {
    validate(p);
    const SpinState rho0 = thermal_state(p.j, p.beta_omega);
    const Matrix u = thermal_evolution(p.j, p.g_over_omega, p.m, p.t);
    const Matrix up = thermal_evolution(p.j, p.g_over_omega, p.m_prime, p.t);
    return (rho0.matrix() * up.adjoint() * u).trace();
}

double oracle_fidelity(const ThermalParams &p) {
    validate(p);
    const Matrix root0 = thermal_state_sqrt(p.j, p.beta_omega);
    const Matrix u = thermal_evolution(p.j, p.g_over_omega, p.m, p.t);
    const Matrix up = thermal_evolution(p.j, p.g_over_omega, p.m_prime, p.t);
    // sqrt(U rho U^dagger) = U sqrt(rho) U^dagger
    const Matrix root_m = u * root0 * u.adjoint();
    const Matrix root_mp = up * root0 * up.adjoint();
    return fidelity_from_roots(root_m, root_mp);
}

} // namespace spinsbs
