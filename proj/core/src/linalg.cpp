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

#include "spinsbs/linalg.hpp"

#include <cmath>
#include <string>

namespace spinsbs {

double max_abs(const Matrix &a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix &a) {
    if (a.rows() != a.cols()) {
        return INFINITY;
    }
    return max_abs(a - a.adjoint());
}

bool is_hermitian(const Matrix &a, double tol) {
    return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

HermitianEigen hermitian_eigen(const Matrix &a, double tol) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    }
    if (const double defect = hermiticity_defect(a); !(defect <= tol)) {
        throw std::invalid_argument(
            "hermitian_eigen: matrix is not Hermitian (defect " +
            std::to_string(defect) + ")");
    }
    const Matrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eigen: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix unitary_evolution(const Matrix &h, double t) {
    return hermitian_matrix_function(
        h, [t](double e) { return std::polar(1.0, -t * e); });
}

double trace_norm(const Matrix &a) {
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues().sum();
}

} // namespace spinsbs
