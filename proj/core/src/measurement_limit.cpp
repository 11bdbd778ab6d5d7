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

#include "spinsbs/measurement_limit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinsbs/quadrature.hpp"

namespace spinsbs {

namespace {

Complex integer_power(Complex z, int n) {
    Complex result(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        result *= z;
    }
    return result;
}

// Row n of Pascal's triangle.
std::vector<double> binomial_row(int n) {
    std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k < n; ++k) {
        row[static_cast<std::size_t>(k)] =
            row[static_cast<std::size_t>(k) - 1] * (n - k + 1) / k;
    }
    return row;
}

// |<j;m|n(theta, 0)>|^2 for every m, at cos(theta) = x.
RealVector coherent_populations(SpinQuantumNumber j, double x) {
    const ComplexVector psi = spin_coherent_vector(j, std::acos(x), 0.0);
    return psi.cwiseAbs2();
}

} // namespace

Complex gamma_pure(const CoherentGammaParams &p) {
    const double half = 0.5 * p.phase();
    return integer_power(Complex(std::cos(half), std::sin(half) * std::cos(p.theta)),
                         p.j.twice());
}

double gamma_pure_modsq(const CoherentGammaParams &p) {
    const double c = std::cos(0.5 * p.phase());
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);
    return std::pow(ct * ct + c * c * st * st, p.j.twice());
}

double gamma_pure_short_time(const CoherentGammaParams &p) {
    const double st = std::sin(p.theta);
    const double a = p.phase();
    return std::exp(-0.25 * p.j.value() * st * st * a * a);
}

double legendre_moment(int l, int k) {
    if (l < 0 || k < 0) {
        throw std::invalid_argument("legendre_moment: l and k must be >= 0");
    }
    if (k < l || (k + l) % 2 != 0) {
        return 0.0;
    }
    // Work in logs so large k stays finite; the result is positive.
    const double log_value = 0.5 * std::log(std::numbers::pi) +
                             std::lgamma(k + 1.0) - k * std::numbers::ln2 -
                             std::lgamma(0.5 * (k - l) + 1.0) -
                             std::lgamma(0.5 * (k + l + 3.0));
    return std::exp(log_value);
}

double normalized_c0() { return 0.5 / std::sqrt(std::numbers::pi); }

AxialPCoefficients::AxialPCoefficients(SpinQuantumNumber j, std::vector<double> c,
                                       double c0_tolerance)
    : j_(j), c_(std::move(c)) {
    if (c_.size() != static_cast<std::size_t>(j.dimension())) {
        throw std::invalid_argument("axial coefficients need 2j+1 entries");
    }
    if (!(std::abs(c_[0] - normalized_c0()) <= c0_tolerance)) {
        throw std::invalid_argument("axial coefficient c_0 must be 1/(2 sqrt(pi))");
    }
}

AxialPCoefficients AxialPCoefficients::maximally_mixed(SpinQuantumNumber j) {
    std::vector<double> c(static_cast<std::size_t>(j.dimension()), 0.0);
    c[0] = normalized_c0();
    return AxialPCoefficients(j, std::move(c));
}

Complex gamma_general(const AxialPCoefficients &coeffs, double g, double t,
                      double delta_m) {
    const int n = coeffs.j().twice();
    const double half = 0.5 * g * t * delta_m;
    const double c = std::cos(half);
    const Complex is(0.0, std::sin(half));

    const auto binom = binomial_row(n);
    // Powers c^{n-k} and (i s)^k for k = 0..n.
    std::vector<double> cpow(static_cast<std::size_t>(n) + 1, 1.0);
    std::vector<Complex> spow(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k) {
        cpow[static_cast<std::size_t>(k)] = cpow[static_cast<std::size_t>(k) - 1] * c;
        spow[static_cast<std::size_t>(k)] = spow[static_cast<std::size_t>(k) - 1] * is;
    }

    Complex total(0.0, 0.0);
    for (int l = 0; l <= n; ++l) {
        const double cl = coeffs[l];
        if (cl == 0.0) {
            continue;
        }
        Complex inner(0.0, 0.0);
        for (int k = l; k <= n; k += 2) {
            const auto ku = static_cast<std::size_t>(k);
            inner += binom[ku] * cpow[static_cast<std::size_t>(n - k)] * spow[ku] *
                     legendre_moment(l, k);
        }
        total += cl * std::sqrt(2.0 * l + 1.0) * inner;
    }
    return std::sqrt(std::numbers::pi) * total;
}

namespace {

// Column l: integral over the sphere of Y_l0 |<m|n>|^2, for every m.
RealMatrix yhat_diagonals_with_rule(SpinQuantumNumber j,
                                    const GaussLegendreRule &rule) {
    const int n = j.dimension();
    RealMatrix diag = RealMatrix::Zero(n, n);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double x = rule.nodes[q];
        const RealVector pops = coherent_populations(j, x);
        for (int l = 0; l < n; ++l) {
            // Y_l0 = sqrt((2l+1)/(4 pi)) P_l(cos theta); the phi integral gives 2 pi.
            const double ylm = std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi)) *
                               legendre_p(l, x);
            diag.col(l) += (2.0 * std::numbers::pi * rule.weights[q] * ylm) * pops;
        }
    }
    return diag;
}

} // namespace

RealMatrix axial_basis_diagonals(SpinQuantumNumber j) {
    require_dense_dimension(j);
    int nodes = 2 * j.dimension();
    RealMatrix previous = yhat_diagonals_with_rule(j, gauss_legendre(nodes));
    for (int attempt = 0; attempt < 8; ++attempt) {
        nodes *= 2;
        RealMatrix current = yhat_diagonals_with_rule(j, gauss_legendre(nodes));
        if ((current - previous).cwiseAbs().maxCoeff() < 1e-11) {
            return current;
        }
        previous = std::move(current);
    }
    throw NumericalError("Yhat quadrature did not converge for j = " + j.to_string());
}

Matrix build_Yhat(int l, SpinQuantumNumber j) {
    if (l < 0 || l > j.twice()) {
        throw std::invalid_argument("build_Yhat: need 0 <= l <= 2j");
    }
    const RealMatrix diag = axial_basis_diagonals(j);
    return diag.col(l).cast<Complex>().asDiagonal().toDenseMatrix();
}

AxialPCoefficients extract_axial_coefficients(const SpinState &rho) {
    const auto j = rho.j();
    const RealMatrix basis = axial_basis_diagonals(j);
    const RealVector target = rho.matrix().diagonal().real();

    Eigen::ColPivHouseholderQR<RealMatrix> qr(basis);
    if (qr.rank() < basis.cols()) {
        throw NumericalError("axial projection system is singular");
    }
    const RealVector c = qr.solve(target);
    std::vector<double> values(c.data(), c.data() + c.size());
    // c_0 is pinned by Tr rho = 1 but comes out of the solve with rounding.
    return AxialPCoefficients(j, std::move(values), 1e-9);
}

RealVector reconstruct_diagonal(const AxialPCoefficients &coeffs) {
    const RealMatrix basis = axial_basis_diagonals(coeffs.j());
    const auto &c = coeffs.values();
    return basis * Eigen::Map<const RealVector>(c.data(),
                                                static_cast<Eigen::Index>(c.size()));
}

} // namespace spinsbs
