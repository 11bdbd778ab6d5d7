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
 * Dense complex matrix helpers. Every matrix function in the library goes
 * through a full Hermitian eigendecomposition; dimensions here are small
 * (2j+1 <= 41), so nothing smarter is needed.
 */
#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace spinsbs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Raised when a computation cannot meet its numerical contract.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Default tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;

[[nodiscard]] double max_abs(const Matrix &a);

/// max |A - A^dagger| elementwise.
[[nodiscard]] double hermiticity_defect(const Matrix &a);

[[nodiscard]] bool is_hermitian(const Matrix &a,
                                double tol = kHermitianTolerance);

/// Eigenvalues in ascending order, with eigenvectors as columns.
struct HermitianEigen {
    RealVector values;
    Matrix vectors;
};

/**
 * Eigendecomposition of a Hermitian matrix. The input is symmetrized as
 * (A + A^dagger)/2 before decomposition. Throws std::invalid_argument if A
 * is not square or not Hermitian to within tol.
 */
[[nodiscard]] HermitianEigen hermitian_eigen(const Matrix &a,
                                             double tol = kHermitianTolerance);

/// U f(Lambda) U^dagger for a precomputed decomposition.
template <class Fn>
[[nodiscard]] Matrix apply_function(const HermitianEigen &eig, Fn &&f) {
    const auto n = eig.values.size();
    ComplexVector fvals(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        fvals(i) = Complex(f(eig.values(i)));
    }
    return eig.vectors * fvals.asDiagonal() * eig.vectors.adjoint();
}

/**
 * f(A) for Hermitian A, where f maps a real eigenvalue to a real or complex
 * number. Non-Hermitian input throws std::invalid_argument.
 */
template <class Fn>
[[nodiscard]] Matrix hermitian_matrix_function(const Matrix &a, Fn &&f,
                                               double tol = kHermitianTolerance) {
    return apply_function(hermitian_eigen(a, tol), std::forward<Fn>(f));
}

/// exp(-i t H) for Hermitian H.
[[nodiscard]] Matrix unitary_evolution(const Matrix &h, double t);

/// Sum of singular values.
[[nodiscard]] double trace_norm(const Matrix &a);

} // namespace spinsbs
