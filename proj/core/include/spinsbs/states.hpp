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
 * Density matrices of a single spin, the central-system state, and the
 * distance measures between them.
 */
#pragma once

#include "spinsbs/linalg.hpp"
#include "spinsbs/spin.hpp"

namespace spinsbs {

/// Tolerances used when validating density matrices.
struct StateTolerance {
    double hermitian = 1e-12;
    double trace = 1e-12;
    double min_eigenvalue = -1e-10;
};

/**
 * Density matrix of one spin-j system. Construction validates Hermiticity,
 * unit trace and positivity; the stored matrix is never modified.
 */
class SpinState {
  public:
    /// Throws std::invalid_argument if rho is not a valid density matrix.
    static SpinState from_matrix(SpinQuantumNumber j, Matrix rho,
                                 const StateTolerance &tol = {});

    /// |psi><psi| / <psi|psi>.
    static SpinState from_vector(SpinQuantumNumber j, const ComplexVector &psi);

    [[nodiscard]] SpinQuantumNumber j() const { return j_; }
    [[nodiscard]] const Matrix &matrix() const { return rho_; }

    /// Tr(rho A).
    [[nodiscard]] Complex expectation(const Matrix &a) const;

    [[nodiscard]] double purity() const;

  private:
    SpinState(SpinQuantumNumber j, Matrix rho) : j_(j), rho_(std::move(rho)) {}

    SpinQuantumNumber j_;
    Matrix rho_;
};

/**
 * Initial state of the central spin, held through its matrix elements
 * alpha_{mm'} = <m|sigma_0S|m'> in the descending-m basis.
 */
class SystemState {
  public:
    /// Throws std::invalid_argument unless the diagonal is real,
    /// non-negative and sums to 1 (to 1e-12).
    SystemState(SpinQuantumNumber j_s, Matrix alpha);

    /// Equal-weight superposition of all 2j_S+1 levels, a pure state.
    static SystemState equal_superposition(SpinQuantumNumber j_s);

    /// diag(p) with no coherences.
    static SystemState diagonal(SpinQuantumNumber j_s, const RealVector &p);

    [[nodiscard]] SpinQuantumNumber j() const { return j_s_; }
    [[nodiscard]] const Matrix &alpha() const { return alpha_; }

    [[nodiscard]] Complex alpha(HalfInteger m, HalfInteger m_prime) const;
    [[nodiscard]] double population(HalfInteger m) const;

  private:
    SpinQuantumNumber j_s_;
    Matrix alpha_;
};

/**
 * Uhlmann fidelity F = Tr sqrt(sqrt(rho) sigma sqrt(rho)).
 *
 * Evaluated as the trace norm || sqrt(rho) sqrt(sigma) ||_1, which has the
 * same value and avoids taking square roots of the tiny eigenvalues of
 * sqrt(rho) sigma sqrt(rho). Mismatched dimensions throw
 * std::invalid_argument.
 */
[[nodiscard]] double fidelity(const SpinState &rho, const SpinState &sigma);

/// Fidelity from already computed square roots of the two states.
[[nodiscard]] double fidelity_from_roots(const Matrix &sqrt_rho,
                                         const Matrix &sqrt_sigma);

/// Positive square root of a density matrix; eigenvalues in
/// [-1e-10, 0) are clipped to zero.
[[nodiscard]] Matrix matrix_sqrt(const SpinState &rho);

/**
 * Spin-coherent state exp[-i theta (sin(phi) S_x - cos(phi) S_y)] |j;-j>.
 * Its mean spin vector is j (sin(theta) cos(phi), sin(theta) sin(phi),
 * -cos(theta)), so <S_z> = -j cos(theta).
 */
[[nodiscard]] ComplexVector spin_coherent_vector(SpinQuantumNumber j,
                                                 double theta, double phi);
[[nodiscard]] SpinState spin_coherent_state(SpinQuantumNumber j, double theta,
                                            double phi);

/**
 * Z = Tr exp(-2 betaOmega S_x) = sinh[(2j+1) betaOmega] / sinh(betaOmega).
 * betaOmega = 0 returns the limit 2j+1.
 */
[[nodiscard]] double partition_function(SpinQuantumNumber j, double beta_omega);

/// exp(-2 betaOmega S_x) / Z. Requires finite betaOmega >= 0.
[[nodiscard]] SpinState thermal_state(SpinQuantumNumber j, double beta_omega);

/// exp(-betaOmega S_x) / sqrt(Z), the positive square root of thermal_state.
[[nodiscard]] Matrix thermal_state_sqrt(SpinQuantumNumber j, double beta_omega);

} // namespace spinsbs
