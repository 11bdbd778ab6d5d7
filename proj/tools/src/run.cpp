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


#include "spinsbs/cli/run.hpp"

#include <cmath>

#include "spinsbs/measurement_limit.hpp"
#include "spinsbs/short_time.hpp"
#include "spinsbs/states.hpp"
#include "spinsbs/thermal.hpp"

namespace spinsbs::cli {

namespace {

SpinState environment_state(const ScenarioConfig &c, SpinQuantumNumber j) {
    switch (c.environment_state) {
    case EnvironmentState::coherent:
        return spin_coherent_state(j, c.theta, c.phi);
    case EnvironmentState::thermal:
        return thermal_state(j, c.beta_omega);
    case EnvironmentState::maximally_mixed: {
        const int d = j.dimension();
        return SpinState::from_matrix(j, Matrix::Identity(d, d) / static_cast<double>(d));
    }
    case EnvironmentState::thermal_z: {
        // exp(-2 bO S_z)/Z, weights shifted by the largest exponent.
        const auto ms = j.magnetic_numbers();
        RealVector w(j.dimension());
        for (int i = 0; i < j.dimension(); ++i) {
            w(i) = std::exp(-2.0 * c.beta_omega * (ms[static_cast<std::size_t>(i)].value() + j.value()));
        }
        w /= w.sum();
        return SpinState::from_matrix(j, w.cast<Complex>().asDiagonal().toDenseMatrix());
    }
    }
    throw std::logic_error("unhandled environment state");
}

} // namespace

ResultTable run_thermal(const ScenarioConfig &c) {
    ResultTable table{columns::kThermal, {}};
    const auto times = c.time.materialize();
    for (const auto &j : c.j_list) {
        for (double t : times) {
            const ThermalParams p{j, c.beta_omega, c.g, c.m, c.m_prime, t};
            const Complex gamma = gamma_thermal(p);
            table.add_row({t, j.to_string(), gamma.real(), gamma.imag(), std::abs(gamma),
                           fidelity_thermal(p)});
        }
    }
    return table;
}

ResultTable run_measurement_limit(const ScenarioConfig &c, bool pure_only) {
    ResultTable table{columns::kMeasurementLimit, {}};
    const auto times = c.time.materialize();
    const double dm = c.m.value() - c.m_prime.value();
    for (const auto &j : c.j_list) {
        std::optional<AxialPCoefficients> coeffs;
        if (!pure_only) {
            coeffs = extract_axial_coefficients(environment_state(c, j));
        }
        for (double t : times) {
            const Complex gamma = pure_only
                                      ? gamma_pure(CoherentGammaParams{j, c.theta, c.g, t, dm})
                                      : gamma_general(*coeffs, c.g, t, dm);
            table.add_row({t, j.to_string(), gamma.real(), gamma.imag(), std::abs(gamma)});
        }
    }
    return table;
}

ResultTable run_short_time(const ScenarioConfig &c) {
    ResultTable table{columns::kShortTime, {}};
    const auto times = c.time.materialize();
    const double dm = c.m.value() - c.m_prime.value();
    const auto n_unobs = static_cast<double>(c.unobserved);
    const auto n_mac = static_cast<double>(c.macrofractions.front());
    for (const auto &j : c.j_list) {
        for (double t : times) {
            const ThermalParams p{j, c.beta_omega, c.g, c.m, c.m_prime, t};
            const double gamma_gauss = gamma_short_time(
                ShortTimeInputs{n_unobs, c.g * c.g, dm, t, j, c.beta_omega}, false);
            const double f_gauss = fidelity_short_time(
                ShortTimeInputs{n_mac, c.g * c.g, dm, t, j, c.beta_omega}, false);
            table.add_row({t, j.to_string(), gamma_gauss,
                           std::pow(std::abs(gamma_thermal(p)), n_unobs), f_gauss,
                           std::pow(fidelity_thermal(p), n_mac)});
        }
    }
    return table;
}

ResultTable run_sbs_bound(const ScenarioConfig &c) {
    auto ec = to_ensemble_config(c);
    ec.realizations = 1;
    const auto run = run_experiment(ec);
    ResultTable table{columns::kSbsBound, {}};
    for (std::size_t ji = 0; ji < ec.j_list.size(); ++ji) {
        const auto &s = run.per_realization[ji][0];
        for (std::size_t i = 0; i < ec.time_grid.size(); ++i) {
            table.add_row({ec.time_grid[i], ec.j_list[ji].to_string(), s.decoherence_term[i],
                           s.distinguishability_term[i], s.bound[i]});
        }
    }
    return table;
}

ResultTable ensemble_table(const EnsembleRun &run, bool include_realizations,
                           bool include_average, std::optional<std::size_t> only_realization) {
    ResultTable table{columns::kEnsemble, {}};
    const auto &cfg = run.config;
    auto emit = [&](const std::string &j, const Cell &label, const EnsembleSeries &s) {
        for (std::size_t i = 0; i < cfg.time_grid.size(); ++i) {
            table.add_row({cfg.time_grid[i], j, label, s.abs_gamma[i], s.f_mac[i],
                           s.decoherence_term[i], s.distinguishability_term[i], s.bound[i]});
        }
    };
    for (std::size_t ji = 0; ji < cfg.j_list.size(); ++ji) {
        const std::string j = cfg.j_list[ji].to_string();
        if (include_realizations) {
            for (std::size_t r = 0; r < run.per_realization[ji].size(); ++r) {
                if (only_realization && *only_realization != r) {
                    continue;
                }
                emit(j, static_cast<std::int64_t>(cfg.first_realization + r),
                     run.per_realization[ji][r]);
            }
        }
        if (include_average) {
            emit(j, std::string("avg"), run.average[ji]);
        }
    }
    return table;
}

} // namespace spinsbs::cli
