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

#include "spinsbs/sbs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinsbs/thermal.hpp"

namespace spinsbs {

namespace {

void check_index_set(const std::vector<std::size_t> &set, std::size_t n,
                     std::vector<bool> &seen, const std::string &name) {
    if (set.empty()) {
        throw std::invalid_argument(name + " must not be empty");
    }
    for (const auto k : set) {
        if (k >= n) {
            throw std::invalid_argument(name + " refers to spin " +
                                        std::to_string(k) + " but N = " +
                                        std::to_string(n));
        }
        if (seen[k]) {
            throw std::invalid_argument("spin " + std::to_string(k) +
                                        " belongs to more than one fraction");
        }
        seen[k] = true;
    }
}

ThermalParams spin_params(const ThermalEnvironment &env, double g, double w,
                          HalfInteger m, HalfInteger m_prime, double t) {
    ThermalParams p;
    p.j = env.j;
    p.beta_omega = env.beta_omega * w;
    p.g_over_omega = g / w;
    p.m = m;
    p.m_prime = m_prime;
    p.t = t * w;
    return p;
}

void require_matching(std::span<const double> couplings,
                      std::span<const double> tunneling) {
    if (!tunneling.empty() && tunneling.size() != couplings.size()) {
        throw std::invalid_argument("couplings and tunneling differ in length");
    }
}

} // namespace

MacrofractionLayout::MacrofractionLayout(
    std::vector<double> couplings, std::vector<std::size_t> unobserved,
    std::vector<std::vector<std::size_t>> macrofractions,
    std::vector<double> tunneling)
    : couplings_(std::move(couplings)), tunneling_(std::move(tunneling)),
      unobserved_(std::move(unobserved)),
      macrofractions_(std::move(macrofractions)) {
    const std::size_t n = couplings_.size();
    if (tunneling_.empty()) {
        tunneling_.assign(n, 1.0);
    }
    if (tunneling_.size() != n) {
        throw std::invalid_argument("tunneling must have one entry per spin");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(couplings_[k]) || couplings_[k] < 0.0) {
            throw std::invalid_argument("couplings must be finite and >= 0");
        }
        if (!std::isfinite(tunneling_[k]) || tunneling_[k] <= 0.0) {
            throw std::invalid_argument("tunneling energies must be finite and > 0");
        }
    }
    std::vector<bool> seen(n, false);
    check_index_set(unobserved_, n, seen, "unobserved fraction");
    for (std::size_t f = 0; f < macrofractions_.size(); ++f) {
        check_index_set(macrofractions_[f], n, seen,
                        "macrofraction " + std::to_string(f));
    }
}

MacrofractionLayout
MacrofractionLayout::contiguous(std::vector<double> couplings,
                                std::size_t unobserved_size,
                                const std::vector<std::size_t> &fraction_sizes) {
    std::size_t next = 0;
    std::vector<std::size_t> unobserved;
    for (; next < unobserved_size; ++next) {
        unobserved.push_back(next);
    }
    std::vector<std::vector<std::size_t>> fractions;
    for (const auto size : fraction_sizes) {
        std::vector<std::size_t> fraction;
        for (std::size_t i = 0; i < size; ++i) {
            fraction.push_back(next++);
        }
        fractions.push_back(std::move(fraction));
    }
    return MacrofractionLayout(std::move(couplings), std::move(unobserved),
                               std::move(fractions));
}

std::vector<double>
MacrofractionLayout::couplings_of(std::span<const std::size_t> idx) const {
    std::vector<double> out;
    out.reserve(idx.size());
    for (const auto k : idx) {
        out.push_back(couplings_.at(k));
    }
    return out;
}

std::vector<double>
MacrofractionLayout::tunneling_of(std::span<const std::size_t> idx) const {
    std::vector<double> out;
    out.reserve(idx.size());
    for (const auto k : idx) {
        out.push_back(tunneling_.at(k));
    }
    return out;
}

Complex decoherence_product(const ThermalEnvironment &env,
                            std::span<const double> couplings,
                            std::span<const double> tunneling, HalfInteger m,
                            HalfInteger m_prime, double t) {
    require_matching(couplings, tunneling);
    Complex product(1.0, 0.0);
    for (std::size_t k = 0; k < couplings.size(); ++k) {
        const double w = tunneling.empty() ? 1.0 : tunneling[k];
        product *= gamma_thermal(spin_params(env, couplings[k], w, m, m_prime, t));
    }
    return product;
}

double fidelity_product(const ThermalEnvironment &env,
                        std::span<const double> couplings,
                        std::span<const double> tunneling, HalfInteger m,
                        HalfInteger m_prime, double t) {
    require_matching(couplings, tunneling);
    double product = 1.0;
    for (std::size_t k = 0; k < couplings.size(); ++k) {
        const double w = tunneling.empty() ? 1.0 : tunneling[k];
        product *= fidelity_thermal(spin_params(env, couplings[k], w, m, m_prime, t));
    }
    return product;
}

Complex total_decoherence_factor(const MacrofractionLayout &layout,
                                 const ThermalEnvironment &env, HalfInteger m,
                                 HalfInteger m_prime, double t) {
    const auto &idx = layout.unobserved();
    return decoherence_product(env, layout.couplings_of(idx),
                               layout.tunneling_of(idx), m, m_prime, t);
}

Complex total_decoherence_factor(const MacrofractionLayout &layout,
                                 const AxialPCoefficients &coeffs, HalfInteger m,
                                 HalfInteger m_prime, double t) {
    const double dm = m.value() - m_prime.value();
    Complex product(1.0, 0.0);
    for (const auto k : layout.unobserved()) {
        product *= gamma_general(coeffs, layout.couplings()[k], t, dm);
    }
    return product;
}

double macrofraction_fidelity(const MacrofractionLayout &layout,
                              std::size_t fraction, const ThermalEnvironment &env,
                              HalfInteger m, HalfInteger m_prime, double t) {
    if (fraction >= layout.macrofractions().size()) {
        throw std::out_of_range("macrofraction index " + std::to_string(fraction) +
                                " out of range");
    }
    const auto &idx = layout.macrofractions()[fraction];
    return fidelity_product(env, layout.couplings_of(idx), layout.tunneling_of(idx),
                            m, m_prime, t);
}

SbsBoundReport sbs_bound(const SystemState &system,
                         const MacrofractionLayout &layout,
                         const ThermalEnvironment &env, double t) {
    const auto ms = system.j().magnetic_numbers();
    const std::size_t n = ms.size();
    const std::size_t fractions = layout.macrofractions().size();

    SbsBoundReport report;
    report.t = t;
    report.pairs.reserve(n * (n > 0 ? n - 1 : 0));

    // |Gamma| and F^mac are symmetric under m <-> m'; evaluate each
    // unordered pair once.
    std::vector<double> abs_gamma(n * n, 0.0);
    std::vector<double> fid_sum(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const double g = std::abs(total_decoherence_factor(layout, env, ms[a], ms[b], t));
            double f = 0.0;
            for (std::size_t mac = 0; mac < fractions; ++mac) {
                f += macrofraction_fidelity(layout, mac, env, ms[a], ms[b], t);
            }
            abs_gamma[a * n + b] = abs_gamma[b * n + a] = g;
            fid_sum[a * n + b] = fid_sum[b * n + a] = f;
        }
    }

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) {
                continue;
            }
            SbsPairTerm term;
            term.m = ms[a];
            term.m_prime = ms[b];
            term.abs_alpha = std::abs(system.alpha()(static_cast<Eigen::Index>(a),
                                                     static_cast<Eigen::Index>(b)));
            term.abs_gamma = abs_gamma[a * n + b];
            term.sqrt_populations =
                std::sqrt(system.population(ms[a]) * system.population(ms[b]));
            term.fidelity_sum = fid_sum[a * n + b];
            report.decoherence_term += term.abs_alpha * term.abs_gamma;
            report.distinguishability_term += term.sqrt_populations * term.fidelity_sum;
            report.pairs.push_back(term);
        }
    }
    report.bound = report.decoherence_term + report.distinguishability_term;
    return report;
}

} // namespace spinsbs
