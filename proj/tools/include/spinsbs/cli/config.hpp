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
 * Scenario configuration for the spinsbs tool.
 *
 * A scenario is a JSON document with these sections (all optional):
 *
 *   mode         "measurement_limit" | "thermal" | "ensemble" | "sbs_bound" |
 *                "short_time"
 *   seed         unsigned 64-bit base seed
 *   system       { j, m, m_prime, state: "superposition" | "diagonal" }
 *   environment  { j: spin or list of spins, beta_omega, theta, phi,
 *                  state: "thermal" | "coherent" | "maximally_mixed" |
 *                         "thermal_z" }
 *   couplings    { distribution: "uniform", low, high, g }
 *   layout       { unobserved, macrofractions: [sizes] }
 *   ensemble     { realizations, first_realization, threads }
 *   time         { start, stop, points } or { values: [...] }
 *   output       { dir, format: "csv" | "json-lines", svg }
 *
 * Spins and magnetic numbers are strings such as "3/2" or plain numbers.
 * Unknown keys are errors.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinsbs/ensemble.hpp"
#include "spinsbs/spin.hpp"

namespace spinsbs::cli {

enum class Mode { measurement_limit, thermal, ensemble, sbs_bound, short_time };

enum class EnvironmentState { thermal, coherent, maximally_mixed, thermal_z };

enum class SystemInit { superposition, diagonal };

enum class OutputFormat { csv, json_lines };

struct TimeGrid {
    double start = 0.0;
    double stop = 30.0;
    std::size_t points = 600;
    /// Explicit times; when non-empty start/stop/points are ignored.
    std::vector<double> values;

    [[nodiscard]] std::vector<double> materialize() const;

    bool operator==(const TimeGrid &) const = default;
};

struct ScenarioConfig {
    Mode mode = Mode::thermal;
    std::uint64_t seed = 42;

    SpinQuantumNumber j_s = SpinQuantumNumber(1);
    HalfInteger m = HalfInteger::from_twice(-1);
    HalfInteger m_prime = HalfInteger::from_twice(1);
    SystemInit system_state = SystemInit::superposition;

    std::vector<SpinQuantumNumber> j_list = {
        SpinQuantumNumber(1), SpinQuantumNumber(2), SpinQuantumNumber(3),
        SpinQuantumNumber(4), SpinQuantumNumber(5)};
    double beta_omega = 0.9;
    double theta = 1.5707963267948966;
    double phi = 0.0;
    EnvironmentState environment_state = EnvironmentState::thermal;

    double low = 0.0;
    double high = 10.0;
    /// Single coupling g/Omega for the one-spin modes.
    double g = 1.0;

    std::size_t unobserved = 5;
    std::vector<std::size_t> macrofractions = {5};

    std::size_t realizations = 100;
    std::uint64_t first_realization = 0;
    unsigned threads = 0;

    TimeGrid time;

    /// Empty: print the table to standard output and write no files.
    std::string out_dir;
    OutputFormat format = OutputFormat::csv;
    bool svg = false;

    bool operator==(const ScenarioConfig &) const = default;
};

/// All problems found while reading a configuration, one "key.path: message"
/// per entry.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> errors);
    [[nodiscard]] const std::vector<std::string> &errors() const { return errors_; }

  private:
    std::vector<std::string> errors_;
};

/**
 * Build a validated configuration from a JSON document. Missing keys take
 * the defaults above. Throws ConfigError listing every unknown key, type
 * mismatch and out-of-range value.
 */
[[nodiscard]] ScenarioConfig parse_config(const nlohmann::json &doc);

/**
 * Read a configuration file. A run manifest is accepted as well; its
 * recorded configuration is used. Throws ConfigError if the file is
 * missing or is not valid JSON.
 */
[[nodiscard]] nlohmann::json load_config_document(const std::filesystem::path &path);

/// Canonical JSON form; parse_config(to_json(c)) == c.
[[nodiscard]] nlohmann::json to_json(const ScenarioConfig &config);

/// Range and consistency checks for the configured mode.
[[nodiscard]] std::vector<std::string> validate(const ScenarioConfig &config);

/// The ensemble-module view of the configuration.
[[nodiscard]] EnsembleConfig to_ensemble_config(const ScenarioConfig &config);

[[nodiscard]] std::string to_string(Mode mode);
[[nodiscard]] std::string to_string(OutputFormat format);

} // namespace spinsbs::cli
