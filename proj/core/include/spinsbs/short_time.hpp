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
 * Short-time Gaussian approximations of |Gamma| and F^mac for thermal
 * environments, and the thermal moments that control them.
 */
#pragma once

#include "spinsbs/spin.hpp"

namespace spinsbs {

/**
 * <S_z^2> = (1/4) coth(bO) [(2j+1) coth((2j+1) bO) - coth(bO)] in the
 * thermal state exp(-2 bO S_x)/Z (<S_z> = 0 there). Small arguments use the
 * series of x coth(x) - 1, so bO -> 0 goes smoothly to j(j+1)/3.
 */
[[nodiscard]] double sz_variance_thermal(SpinQuantumNumber j, double beta_omega);

/**
 * Quantum Fisher information of exp(-2 bO S_x)/Z for rotations generated
 * by S_z:  (2j+1) tanh(bO) coth((2j+1) bO) - 1. Goes to 0 as bO -> 0 and
 * to 2j as bO -> infinity.
 */
[[nodiscard]] double quantum_fisher_information(SpinQuantumNumber j,
                                                double beta_omega);

/// Inputs shared by the short-time formulas. mean_g2 is the empirical mean
/// of g_k^2 (units of Omega^2) over the fraction in question.
struct ShortTimeInputs {
    double fraction_size = 5.0;
    double mean_g2 = 0.0;
    double delta_m = 1.0;
    double t = 0.0;
    SpinQuantumNumber j;
    double beta_omega = 0.9;
};

/**
 * |Gamma| ~ exp(-2 N <g^2> dm^2 t^2 <S_z^2>), or with large_j
 * exp(-(1/2) N (2j) <g^2> dm^2 t^2 coth(bO)).
 */
[[nodiscard]] double gamma_short_time(const ShortTimeInputs &in, bool large_j = false);

/// Exponent (positive) of gamma_short_time.
[[nodiscard]] double gamma_short_time_exponent(const ShortTimeInputs &in,
                                               bool large_j = false);

/**
 * F^mac ~ exp(-(1/2) N <g^2> dm^2 t^2 QFI), or with large_j
 * exp(-(1/2) N (2j) <g^2> dm^2 t^2 tanh(bO)).
 */
[[nodiscard]] double fidelity_short_time(const ShortTimeInputs &in,
                                         bool large_j = true);

/// Exponent (positive) of fidelity_short_time.
[[nodiscard]] double fidelity_short_time_exponent(const ShortTimeInputs &in,
                                                  bool large_j = true);

/// Second-order single-spin fidelity 1 - (1/2) g^2 dm^2 t^2 QFI.
[[nodiscard]] double fidelity_short_time_factor(double g, double delta_m, double t,
                                                SpinQuantumNumber j,
                                                double beta_omega);

} // namespace spinsbs
