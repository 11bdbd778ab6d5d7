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
 * Tidy result tables and the files a run leaves behind.
 *
 * CSV files have one header line and print reals with 17 significant
 * digits. JSON-lines files hold one object per row with the same keys.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinsbs/cli/config.hpp"

namespace spinsbs::cli {

/// Failure to create, write or rename an output file.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::int64_t, std::string>;

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws std::invalid_argument if the row width does not match.
    void add_row(std::vector<Cell> row);

    /// Throws NumericalError naming the first non-finite real.
    void require_finite() const;
};

/// Column sets shared by the subcommands. Stable across versions.
namespace columns {
inline const std::vector<std::string> kEnsemble = {
    "time",  "j", "realization", "abs_gamma", "f_mac", "decoherence_term",
    "distinguishability_term", "bound"};
inline const std::vector<std::string> kThermal = {
    "time", "j", "re_gamma", "im_gamma", "abs_gamma", "fidelity"};
inline const std::vector<std::string> kMeasurementLimit = {
    "time", "j", "re_gamma", "im_gamma", "abs_gamma"};
inline const std::vector<std::string> kSbsBound = {
    "time", "j", "decoherence_term", "distinguishability_term", "bound"};
inline const std::vector<std::string> kShortTime = {
    "time", "j", "abs_gamma_gaussian", "abs_gamma_exact", "f_mac_gaussian",
    "f_mac_exact"};
} // namespace columns

/// "%.17g" for reals, decimal for integers, strings verbatim.
[[nodiscard]] std::string format_cell(const Cell &cell);

void write_csv(std::ostream &out, const ResultTable &table);
void write_json_lines(std::ostream &out, const ResultTable &table);
void write_table(std::ostream &out, const ResultTable &table, OutputFormat format);

/// ".csv" or ".jsonl".
[[nodiscard]] std::string file_extension(OutputFormat format);

/**
 * Writes the files of one run into a directory. Each file is written to a
 * temporary name and renamed into place. If the run is not committed, the
 * destructor removes every file written so far.
 */
class OutputDirectory {
  public:
    /// Creates the directory if needed. Throws IoError.
    explicit OutputDirectory(std::filesystem::path dir);
    ~OutputDirectory();

    OutputDirectory(const OutputDirectory &) = delete;
    OutputDirectory &operator=(const OutputDirectory &) = delete;

    /// Throws IoError; the partial file is removed.
    void write(const std::string &name, const std::string &contents);

    [[nodiscard]] const std::vector<std::string> &files() const { return files_; }
    [[nodiscard]] const std::filesystem::path &path() const { return dir_; }

    /// Keep the files.
    void commit() { committed_ = true; }

  private:
    std::filesystem::path dir_;
    std::vector<std::string> files_;
    bool committed_ = false;
};

/**
 * Run manifest: the full configuration (feed it back with --config to
 * repeat the run), seed, tool version, wall time and files written.
 */
[[nodiscard]] nlohmann::json make_manifest(const std::string &command,
                                           const ScenarioConfig &config,
                                           double wall_seconds,
                                           const std::vector<std::string> &files);

} // namespace spinsbs::cli
