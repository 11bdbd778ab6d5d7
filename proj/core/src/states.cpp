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

#include "spinsbs/states.hpp"

#include <cmath>
#include <string>

namespace spinsbs {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

void require_beta_omega(double beta_omega) {
    if (!std::isfinite(beta_omega) || beta_omega < 0.0) {
        throw std::invalid_argument("betaOmega must be finite and >= 0");
    }
}

} // namespace

SpinState SpinState::from_matrix(SpinQuantumNumber j, Matrix rho,
                                 const StateTolerance &tol) {
    const Eigen::Index n = j.dimension();
    if (rho.rows() != n || rho.cols() != n) {
        throw std::invalid_argument("density matrix has wrong dimension for j = " +
                                    j.to_string());
    }
    if (hermiticity_defect(rho) > tol.hermitian) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    const auto eig = hermitian_eigen(rho, tol.hermitian);
    if (eig.values.minCoeff() < tol.min_eigenvalue) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
    return SpinState(j, std::move(rho));
}

SpinState SpinState::from_vector(SpinQuantumNumber j, const ComplexVector &psi) {
    const double norm2 = psi.squaredNorm();
    if (!(norm2 > 0.0)) {
        throw std::invalid_argument("state vector has zero norm");
    }
    Matrix rho = psi * psi.adjoint() / norm2;
    // Outer products are Hermitian up to rounding; make it exact.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return from_matrix(j, std::move(rho));
}

Complex SpinState::expectation(const Matrix &a) const {
    require_same_shape(rho_, a, "expectation");
    return (rho_ * a).trace();
}

double SpinState::purity() const { return (rho_ * rho_).trace().real(); }

SystemState::SystemState(SpinQuantumNumber j_s, Matrix alpha)
    : j_s_(j_s), alpha_(std::move(alpha)) {
    const Eigen::Index n = j_s.dimension();
    if (alpha_.rows() != n || alpha_.cols() != n) {
        throw std::invalid_argument("system state has wrong dimension for j_S = " +
                                    j_s.to_string());
    }
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex a = alpha_(i, i);
        if (std::abs(a.imag()) > 1e-12 || a.real() < -1e-12) {
            throw std::invalid_argument(
                "system state populations must be real and non-negative");
        }
        total += a.real();
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("system state populations must sum to 1");
    }
}

SystemState SystemState::equal_superposition(SpinQuantumNumber j_s) {
    const Eigen::Index n = j_s.dimension();
    return SystemState(j_s, Matrix::Constant(n, n, Complex(1.0 / n, 0.0)));
}

SystemState SystemState::diagonal(SpinQuantumNumber j_s, const RealVector &p) {
    if (p.size() != j_s.dimension()) {
        throw std::invalid_argument("population vector has wrong length");
    }
    return SystemState(j_s, p.cast<Complex>().asDiagonal().toDenseMatrix());
}

Complex SystemState::alpha(HalfInteger m, HalfInteger m_prime) const {
    return alpha_(j_s_.index_of(m), j_s_.index_of(m_prime));
}

double SystemState::population(HalfInteger m) const {
    const auto i = j_s_.index_of(m);
    return alpha_(i, i).real();
}

Matrix matrix_sqrt(const SpinState &rho) {
    const auto eig = hermitian_eigen(rho.matrix());
    return apply_function(eig, [](double p) {
        if (p < -1e-10) {
            throw NumericalError("matrix_sqrt: negative eigenvalue");
        }
        return std::sqrt(std::max(p, 0.0));
    });
}

double fidelity_from_roots(const Matrix &sqrt_rho, const Matrix &sqrt_sigma) {
    require_same_shape(sqrt_rho, sqrt_sigma, "fidelity");
    return trace_norm(sqrt_rho * sqrt_sigma);
}

double fidelity(const SpinState &rho, const SpinState &sigma) {
    if (rho.j() != sigma.j()) {
        throw std::invalid_argument("fidelity: states have different j");
    }
    return fidelity_from_roots(matrix_sqrt(rho), matrix_sqrt(sigma));
}

ComplexVector spin_coherent_vector(SpinQuantumNumber j, double theta,
                                   double phi) {
    const auto ops = build_spin_operators(j);
    const Matrix generator =
        theta * (std::sin(phi) * ops.x.matrix - std::cos(phi) * ops.y.matrix);
    const Matrix rotation = unitary_evolution(generator, 1.0);
    // |j;-j> is the last basis vector.
    return rotation.col(j.dimension() - 1);
}

SpinState spin_coherent_state(SpinQuantumNumber j, double theta, double phi) {
    return SpinState::from_vector(j, spin_coherent_vector(j, theta, phi));
}

double partition_function(SpinQuantumNumber j, double beta_omega) {
    require_beta_omega(beta_omega);
    const double n = j.dimension();
    const double b = beta_omega;
    if (b == 0.0) {
        return n;
    }
    // sinh(nb)/sinh(b) rescaled by e^{-(n-1)b} so large arguments do not
    // overflow and small ones do not cancel.
    return std::exp((n - 1.0) * b) * std::expm1(-2.0 * n * b) /
           std::expm1(-2.0 * b);
}

namespace {

// Boltzmann factors exp(-k betaOmega (l + j)) in the S_x eigenbasis,
// shifted so the largest is 1.
Matrix shifted_thermal_function(SpinQuantumNumber j, double beta_omega,
                                double k, double &trace_of_square_weights) {
    require_beta_omega(beta_omega);
    const auto ops = build_spin_operators(j);
    const auto eig = hermitian_eigen(ops.x.matrix);
    const double lowest = eig.values(0);
    trace_of_square_weights = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        trace_of_square_weights +=
            std::exp(-2.0 * beta_omega * (eig.values(i) - lowest));
    }
    return apply_function(eig, [&](double l) {
        return std::exp(-k * beta_omega * (l - lowest));
    });
}

} // namespace

SpinState thermal_state(SpinQuantumNumber j, double beta_omega) {
    double z = 0.0;
    Matrix rho = shifted_thermal_function(j, beta_omega, 2.0, z);
    rho /= z;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return SpinState::from_matrix(j, std::move(rho));
}

Matrix thermal_state_sqrt(SpinQuantumNumber j, double beta_omega) {
    double z = 0.0;
    Matrix root = shifted_thermal_function(j, beta_omega, 1.0, z);
    return root / std::sqrt(z);
}

} // namespace spinsbs
