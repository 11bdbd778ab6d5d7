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

#pragma once

#include <vector>

namespace spinsbs {

/// Legendre polynomial P_l(x) by the three-term recurrence.
[[nodiscard]] double legendre_p(int l, double x);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/**
 * n-point Gauss-Legendre rule (exact for polynomials of degree <= 2n-1).
 * Nodes are the roots of P_n found by Newton iteration from Chebyshev
 * initial guesses. Throws std::invalid_argument for n < 1.
 */
[[nodiscard]] GaussLegendreRule gauss_legendre(int n);

/// Integrate f over [-1, 1] with the given rule.
template <class Fn>
[[nodiscard]] auto integrate(const GaussLegendreRule &rule, Fn &&f) {
    using Result = decltype(f(0.0));
    Result sum = Result(0.0 * f(rule.nodes.front()));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

} // namespace spinsbs
