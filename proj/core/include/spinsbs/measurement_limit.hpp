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
 * Single-environment decoherence factors when the interaction
 * S_z (x) sum_k g_k S_z^(k) dominates:
 *
 *     gamma(t) = Tr[ rho_0 exp(-i g t dm S_z) ],   dm = m - m'.
 *
 * Closed form for spin-coherent environments, and the general form in
 * terms of the axial coefficients c_l of the diagonal P-representation
 * rho_0 = sum_l c_l Yhat_l0.
 */
#pragma once

#include <vector>

#include "spinsbs/linalg.hpp"
#include "spinsbs/spin.hpp"
#include "spinsbs/states.hpp"

namespace spinsbs {

/// Inputs of the coherent-state decoherence factor. Only g * t * delta_m
/// and theta enter; the azimuth drops out.
struct CoherentGammaParams {
    SpinQuantumNumber j;
    double theta = 0.0;
    double g = 0.0;
    double t = 0.0;
    double delta_m = 1.0;

    [[nodiscard]] double phase() const { return g * t * delta_m; }
};

/// [cos(a/2) + i sin(a/2) cos(theta)]^{2j}, a = g t dm.
[[nodiscard]] Complex gamma_pure(const CoherentGammaParams &p);

/// [cos^2(theta) + cos^2(a/2) sin^2(theta)]^{2j}.
[[nodiscard]] double gamma_pure_modsq(const CoherentGammaParams &p);

/// Short-time Gaussian exp(-(j/4) sin^2(theta) g^2 dm^2 t^2) for |gamma|.
[[nodiscard]] double gamma_pure_short_time(const CoherentGammaParams &p);

/**
 * I_lk = integral_{-1}^{1} x^k P_l(x) dx.
 *
 * Zero when k < l or k + l is odd; otherwise
 * sqrt(pi) k! / (2^k Gamma((k-l)/2 + 1) Gamma((k+l+3)/2)).
 * Throws std::invalid_argument for negative l or k.
 */
[[nodiscard]] double legendre_moment(int l, int k);

/**
 * Coefficients c_l = c_{l0}, l = 0..2j, of a spin-j state expanded in the
 * azimuthally symmetric operators Yhat_l0. Components with l > 2j are not
 * representable and components with mu != 0 never reach gamma.
 */
class AxialPCoefficients {
  public:
    /// Throws std::invalid_argument unless c.size() == 2j+1 and
    /// c_0 = 1/(2 sqrt(pi)) to c0_tolerance.
    AxialPCoefficients(SpinQuantumNumber j, std::vector<double> c,
                       double c0_tolerance = 1e-12);

    /// c = (1/(2 sqrt(pi)), 0, ..., 0).
    static AxialPCoefficients maximally_mixed(SpinQuantumNumber j);

    [[nodiscard]] SpinQuantumNumber j() const { return j_; }
    [[nodiscard]] const std::vector<double> &values() const { return c_; }
    [[nodiscard]] double operator[](int l) const {
        return c_[static_cast<std::size_t>(l)];
    }

  private:
    SpinQuantumNumber j_;
    std::vector<double> c_;
};

/// 1/(2 sqrt(pi)), fixed by Tr rho = 1.
[[nodiscard]] double normalized_c0();

/**
 * gamma(t) = sqrt(pi) sum_{l=0}^{2j} c_l sqrt(2l+1)
 *            sum_{k=l}^{2j} C(2j,k) c(t)^{2j-k} (i s(t))^k I_lk
 * with c(t) = cos(g t dm / 2), s(t) = sin(g t dm / 2).
 */
[[nodiscard]] Complex gamma_general(const AxialPCoefficients &coeffs, double g,
                                    double t, double delta_m);

/**
 * Yhat_l0 = integral d^2n Y_l0(theta, phi) |n><n|.
 *
 * The azimuthal integral is done analytically (it removes every
 * off-diagonal element in the S_z basis), the polar one by Gauss-Legendre
 * in cos(theta) with node doubling until successive results agree to
 * 1e-11. Returns a real diagonal matrix. Throws std::invalid_argument
 * unless 0 <= l <= 2j, and NumericalError if quadrature does not settle.
 */
[[nodiscard]] Matrix build_Yhat(int l, SpinQuantumNumber j);

/**
 * Diagonals of Yhat_00 ... Yhat_{2j,0}: column l holds the S_z-basis
 * diagonal of Yhat_l0.
 */
[[nodiscard]] RealMatrix axial_basis_diagonals(SpinQuantumNumber j);

/**
 * Project rho onto span{Yhat_00, ..., Yhat_{2j,0}} through its diagonal in
 * the S_z basis. Only that diagonal reaches gamma. Throws NumericalError
 * if the projection system is singular.
 */
[[nodiscard]] AxialPCoefficients extract_axial_coefficients(const SpinState &rho);

/// sum_l c_l diag(Yhat_l0), the S_z-basis diagonal the coefficients encode.
[[nodiscard]] RealVector reconstruct_diagonal(const AxialPCoefficients &coeffs);

} // namespace spinsbs
