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
 * Result tables for each scenario mode.
 */
#pragma once

#include <cstddef>
#include <optional>

#include "spinsbs/cli/config.hpp"
#include "spinsbs/cli/output.hpp"
#include "spinsbs/ensemble.hpp"

namespace spinsbs::cli {

/// One environment spin, closed-form thermal gamma and F over the grid.
[[nodiscard]] ResultTable run_thermal(const ScenarioConfig &config);

/**
 * Measurement-limit gamma over the grid. With pure_only the environment is
 * the spin-coherent state at theta and the closed power form is used;
 * otherwise the state's axial coefficients feed the general formula.
 */
[[nodiscard]] ResultTable run_measurement_limit(const ScenarioConfig &config,
                                                bool pure_only);

/// Gaussian short-time |Gamma| and F^mac next to the exact products, all
/// spins sharing the coupling g.
[[nodiscard]] ResultTable run_short_time(const ScenarioConfig &config);

/// SBS bound terms for realization first_realization.
[[nodiscard]] ResultTable run_sbs_bound(const ScenarioConfig &config);

/**
 * Rows of an ensemble run, ordered by j, then realization (averages last),
 * then time. only_realization keeps one realization's rows (by position in
 * the run); include_average adds the "avg" rows.
 */
[[nodiscard]] ResultTable ensemble_table(const EnsembleRun &run, bool include_realizations,
                                         bool include_average,
                                         std::optional<std::size_t> only_realization = {});

} // namespace spinsbs::cli
