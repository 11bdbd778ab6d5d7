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
 * Many-environment quantities: the decoherence factor of the unobserved
 * part, macrofraction fidelities, and the upper bound on the trace distance
 * to the nearest spectrum broadcast structure,
 *
 *   sum_{m != m'} |alpha_mm'| |Gamma_mm'(t)|
 *     + sum_{m != m'} sqrt(alpha_m alpha_m') sum_{mac} F^mac_mm'(t).
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spinsbs/linalg.hpp"
#include "spinsbs/measurement_limit.hpp"
#include "spinsbs/spin.hpp"
#include "spinsbs/states.hpp"

namespace spinsbs {

/**
 * Partition of N environment spins into an unobserved part and observed
 * macrofractions, with the couplings g_k and tunneling energies Omega_k of
 * each spin. Both are given in units of a reference Omega (default
 * Omega_k = 1 for all k). Indices are 0-based.
 */
class MacrofractionLayout {
  public:
    /// Throws std::invalid_argument if index sets overlap, are empty, or
    /// point outside [0, N); or if couplings/tunneling are negative,
    /// non-finite or of the wrong length.
    MacrofractionLayout(std::vector<double> couplings,
                        std::vector<std::size_t> unobserved,
                        std::vector<std::vector<std::size_t>> macrofractions,
                        std::vector<double> tunneling = {});

    /// Spins [0, unobserved_size) are unobserved, followed by consecutive
    /// macrofractions of the given sizes.
    static MacrofractionLayout contiguous(std::vector<double> couplings,
                                          std::size_t unobserved_size,
                                          const std::vector<std::size_t> &fraction_sizes);

    [[nodiscard]] std::size_t size() const { return couplings_.size(); }
    [[nodiscard]] const std::vector<double> &couplings() const { return couplings_; }
    [[nodiscard]] const std::vector<double> &tunneling() const { return tunneling_; }
    [[nodiscard]] const std::vector<std::size_t> &unobserved() const {
        return unobserved_;
    }
    [[nodiscard]] const std::vector<std::vector<std::size_t>> &macrofractions() const {
        return macrofractions_;
    }

    /// Couplings of the listed spins, in order.
    [[nodiscard]] std::vector<double> couplings_of(std::span<const std::size_t> idx) const;
    [[nodiscard]] std::vector<double> tunneling_of(std::span<const std::size_t> idx) const;

  private:
    std::vector<double> couplings_;
    std::vector<double> tunneling_;
    std::vector<std::size_t> unobserved_;
    std::vector<std::vector<std::size_t>> macrofractions_;
};

/// Environment spins share j and the thermal betaOmega (reference Omega).
struct ThermalEnvironment {
    SpinQuantumNumber j;
    double beta_omega = 0.9;
};

/**
 * Product of single-spin thermal decoherence factors over the given spins.
 * An empty set gives 1. A spin with tunneling ratio w = Omega_k/Omega is
 * evaluated at betaOmega w, g/(Omega w), t w.
 */
[[nodiscard]] Complex decoherence_product(const ThermalEnvironment &env,
                                          std::span<const double> couplings,
                                          std::span<const double> tunneling,
                                          HalfInteger m, HalfInteger m_prime, double t);

/// Product of single-spin thermal fidelities; empty set gives 1.
[[nodiscard]] double fidelity_product(const ThermalEnvironment &env,
                                      std::span<const double> couplings,
                                      std::span<const double> tunneling,
                                      HalfInteger m, HalfInteger m_prime, double t);

/// Gamma_mm'(t) over the unobserved spins of a thermal environment.
[[nodiscard]] Complex total_decoherence_factor(const MacrofractionLayout &layout,
                                               const ThermalEnvironment &env,
                                               HalfInteger m, HalfInteger m_prime,
                                               double t);

/**
 * Gamma_mm'(t) over the unobserved spins in the measurement limit, every
 * spin starting in the state described by coeffs. Tunneling is ignored.
 */
[[nodiscard]] Complex total_decoherence_factor(const MacrofractionLayout &layout,
                                               const AxialPCoefficients &coeffs,
                                               HalfInteger m, HalfInteger m_prime,
                                               double t);

/// F^mac_mm'(t) = prod over members of the single-spin fidelities.
/// Throws std::out_of_range for a bad fraction index.
[[nodiscard]] double macrofraction_fidelity(const MacrofractionLayout &layout,
                                            std::size_t fraction,
                                            const ThermalEnvironment &env,
                                            HalfInteger m, HalfInteger m_prime,
                                            double t);

struct SbsPairTerm {
    HalfInteger m;
    HalfInteger m_prime;
    double abs_alpha = 0.0;
    double abs_gamma = 0.0;
    double sqrt_populations = 0.0;
    double fidelity_sum = 0.0;
};

struct SbsBoundReport {
    double t = 0.0;
    double decoherence_term = 0.0;
    double distinguishability_term = 0.0;
    double bound = 0.0;
    /// One entry per ordered pair m != m', in basis order.
    std::vector<SbsPairTerm> pairs;
};

/**
 * Right-hand side of the SBS distance bound. The distinguishability sum
 * runs over the observed macrofractions with F the macrofraction fidelity.
 * A spin-0 system has no pairs and a zero bound.
 */
[[nodiscard]] SbsBoundReport sbs_bound(const SystemState &system,
                                       const MacrofractionLayout &layout,
                                       const ThermalEnvironment &env, double t);

} // namespace spinsbs
