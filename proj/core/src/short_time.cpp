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

#include "spinsbs/short_time.hpp"

#include <cmath>
#include <stdexcept>

namespace spinsbs {

namespace {

// Below this argument the closed forms lose digits to cancellation and the
// Taylor series (error < 1e-15 relative) takes over.
constexpr double kSeriesSwitch = 0.1;

// y coth(y) - 1 = y^2/3 - y^4/45 + 2y^6/945 - y^8/4725 + 2y^10/93555 - ...
double xcoth_minus_one(double y) {
    if (std::abs(y) < kSeriesSwitch) {
        const double y2 = y * y;
        return y2 * (1.0 / 3.0 +
                     y2 * (-1.0 / 45.0 +
                           y2 * (2.0 / 945.0 + y2 * (-1.0 / 4725.0 + y2 * (2.0 / 93555.0)))));
    }
    return y / std::tanh(y) - 1.0;
}

// tanh(x)/x - 1 = -x^2/3 + 2x^4/15 - 17x^6/315 + 62x^8/2835 - 1382x^10/155925
double tanh_over_x_minus_one(double x) {
    if (std::abs(x) < kSeriesSwitch) {
        const double x2 = x * x;
        return x2 * (-1.0 / 3.0 +
                     x2 * (2.0 / 15.0 +
                           x2 * (-17.0 / 315.0 +
                                 x2 * (62.0 / 2835.0 + x2 * (-1382.0 / 155925.0)))));
    }
    return std::tanh(x) / x - 1.0;
}

void require_beta_omega(double beta_omega) {
    if (!(beta_omega >= 0.0) || std::isnan(beta_omega)) {
        throw std::invalid_argument("betaOmega must be >= 0");
    }
}

double squared_rate(const ShortTimeInputs &in) {
    return in.fraction_size * in.mean_g2 * in.delta_m * in.delta_m * in.t * in.t;
}

} // namespace

double sz_variance_thermal(SpinQuantumNumber j, double beta_omega) {
    require_beta_omega(beta_omega);
    const double jj = j.value();
    const double x = beta_omega;
    if (x == 0.0) {
        return jj * (jj + 1.0) / 3.0;
    }
    if (std::isinf(x)) {
        // Pure S_x = -j eigenstate: <S_z^2> = j/2.
        return 0.5 * jj;
    }
    const double n = j.dimension();
    // (1/4) coth(x) [n coth(nx) - coth(x)]
    //   = coth(x)/(4x) [(nx coth(nx) - 1) - (x coth(x) - 1)]
    const double bracket = xcoth_minus_one(n * x) - xcoth_minus_one(x);
    return bracket / (4.0 * x * std::tanh(x));
}

double quantum_fisher_information(SpinQuantumNumber j, double beta_omega) {
    require_beta_omega(beta_omega);
    const double x = beta_omega;
    if (x == 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return static_cast<double>(j.twice());
    }
    const double n = j.dimension();
    // n tanh(x) coth(nx) - 1 = (1 + a)(1 + b) - 1 with
    // a = tanh(x)/x - 1 and b = nx coth(nx) - 1.
    const double a = tanh_over_x_minus_one(x);
    const double b = xcoth_minus_one(n * x);
    return a + b + a * b;
}

double gamma_short_time_exponent(const ShortTimeInputs &in, bool large_j) {
    const double r = squared_rate(in);
    if (large_j) {
        require_beta_omega(in.beta_omega);
        if (in.beta_omega == 0.0) {
            return r == 0.0 ? 0.0 : INFINITY;
        }
        return 0.5 * r * in.j.twice() / std::tanh(in.beta_omega);
    }
    return 2.0 * r * sz_variance_thermal(in.j, in.beta_omega);
}

double gamma_short_time(const ShortTimeInputs &in, bool large_j) {
    return std::exp(-gamma_short_time_exponent(in, large_j));
}

double fidelity_short_time_exponent(const ShortTimeInputs &in, bool large_j) {
    const double r = squared_rate(in);
    if (large_j) {
        require_beta_omega(in.beta_omega);
        return 0.5 * r * in.j.twice() * std::tanh(in.beta_omega);
    }
    return 0.5 * r * quantum_fisher_information(in.j, in.beta_omega);
}

double fidelity_short_time(const ShortTimeInputs &in, bool large_j) {
    return std::exp(-fidelity_short_time_exponent(in, large_j));
}

double fidelity_short_time_factor(double g, double delta_m, double t,
                                  SpinQuantumNumber j, double beta_omega) {
    return 1.0 - 0.5 * g * g * delta_m * delta_m * t * t *
                     quantum_fisher_information(j, beta_omega);
}

} // namespace spinsbs
