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
 * Thermal spin-j environment evolving under
 *
 *     H_m = 2 (m g S_z - Omega S_x)
 *
 * while the central spin sits in |m>. The environment starts in
 * exp(-2 beta Omega S_x)/Z. Everything is measured in units of Omega
 * (Omega = 1 internally): callers pass beta*Omega, g/Omega and t*Omega.
 *
 * The closed forms use the fact that U_m are SU(2) representations: the
 * spin-1/2 problem fixes one eigenvalue lambda, and the spin-j answer is
 * the power sum over l = -j..j of the corresponding eigenvalue powers.
 */
#pragma once

#include "spinsbs/linalg.hpp"
#include "spinsbs/spin.hpp"

namespace spinsbs {

struct ThermalParams {
    SpinQuantumNumber j;
    double beta_omega = 0.9;
    double g_over_omega = 0.0;
    HalfInteger m = HalfInteger::from_twice(1);
    HalfInteger m_prime = HalfInteger::from_twice(-1);
    double t = 0.0;

    [[nodiscard]] double delta_m() const { return m.value() - m_prime.value(); }
};

/// Throws std::invalid_argument on negative or non-finite betaOmega, g/Omega,
/// or non-finite t.
void validate(const ThermalParams &p);

/// As above, and additionally requires m, m' to be magnetic numbers of j_s.
void validate(const ThermalParams &p, SpinQuantumNumber j_s);

/**
 * Spin-1/2 decomposition of U_{m'}^dagger U_m, with
 *
 *   gamma0 = cos(w t) cos(w' t) + (1 + m m' g^2)/(w w') sin(w t) sin(w' t)
 *   gammax = sin(w t) cos(w' t)/w - sin(w' t) cos(w t)/w'
 *   gammay = -dm g/(w w') sin(w t) sin(w' t)
 *   gammaz = g [m' cos(w t) sin(w' t)/w' - m cos(w' t) sin(w t)/w]
 *
 * where w = omega_m = sqrt(1 + m^2 g^2). In terms of Pauli matrices,
 *
 *   U_{m'}^dagger U_m = gamma0 + i (gammax s_x - gammay s_y + gammaz s_z),
 *
 * so the four components have unit norm.
 */
struct GammaKernel {
    double gamma0 = 1.0;
    double gammax = 0.0;
    double gammay = 0.0;
    double gammaz = 0.0;
    double omega_m = 1.0;
    double omega_mprime = 1.0;

    [[nodiscard]] double norm_squared() const {
        return gamma0 * gamma0 + gammax * gammax + gammay * gammay +
               gammaz * gammaz;
    }
};

[[nodiscard]] GammaKernel gamma_kernel(const ThermalParams &p);

/// sum_{l=-j}^{j} x^{2l}; 2l is always an integer.
[[nodiscard]] Complex spin_power_sum(Complex x, SpinQuantumNumber j);

/// kappa = gamma0 cosh(bO) - i gammax sinh(bO).
[[nodiscard]] Complex decoherence_kappa(const ThermalParams &p);

/// lambda = kappa + sqrt(kappa^2 - 1), principal branch.
[[nodiscard]] Complex decoherence_lambda(const ThermalParams &p);

/**
 * gamma_mm'(t) = Tr[rho_0 U_{m'}^dagger U_m]
 *              = sum_l lambda^{2l} / sum_l lambda_0^{2l},  lambda_0 = e^{bO},
 *
 * evaluated as explicit power sums, which are smooth through lambda = +-1
 * and identical for lambda and 1/lambda. Equals the textbook geometric
 * ratio (lambda^{2j+1} - lambda^{-2j-1}) / (lambda - 1/lambda) away from
 * those points.
 */
[[nodiscard]] Complex gamma_thermal(const ThermalParams &p);

struct FidelityKernel {
    double kappa_tilde = 1.0;
    double lambda_tilde = 1.0;
};

/**
 * kappa~ = gammaz^2 + gammay^2 + (gamma0^2 + gammax^2) cosh(2 bO),
 * lambda~ = kappa~ + sqrt(kappa~^2 - 1) >= 1.
 *
 * kappa~ is >= 1 exactly; values in [1 - 1e-9, 1) are rounding and are
 * clipped to 1. Anything lower throws NumericalError.
 */
[[nodiscard]] FidelityKernel fidelity_kernel(const ThermalParams &p);

/**
 * F(rho_m(t), rho_m'(t)) = sum_l lambda~^l / sum_l lambda~_0^l,
 * lambda~_0 = e^{2 bO}, as explicit power sums.
 */
[[nodiscard]] double fidelity_thermal(const ThermalParams &p);

/// exp(-i t H_m) as a dense matrix.
[[nodiscard]] Matrix thermal_evolution(SpinQuantumNumber j, double g_over_omega,
                                       HalfInteger m, double t);

/// Tr[rho_0 U_{m'}^dagger U_m] by dense matrices (reference implementation).
[[nodiscard]] Complex oracle_gamma(const ThermalParams &p);

/// Uhlmann fidelity of U_m rho_0 U_m^dagger and U_m' rho_0 U_m'^dagger by
/// dense matrices (reference implementation).
[[nodiscard]] double oracle_fidelity(const ThermalParams &p);

} // namespace spinsbs
