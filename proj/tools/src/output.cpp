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


#include "spinsbs/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "spinsbs/linalg.hpp"
#include "spinsbs/version.hpp"

namespace spinsbs::cli {

namespace fs = std::filesystem;

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("ResultTable: row has " + std::to_string(row.size()) +
                                    " cells, expected " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

void ResultTable::require_finite() const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (const auto *x = std::get_if<double>(&rows[r][c]); x && !std::isfinite(*x)) {
                throw NumericalError("non-finite value in column " + columns[c] +
                                     " at row " + std::to_string(r));
            }
        }
    }
}

std::string format_cell(const Cell &cell) {
    if (const auto *x = std::get_if<double>(&cell)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", *x);
        return buf;
    }
    if (const auto *i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(cell);
}

void write_csv(std::ostream &out, const ResultTable &table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_cell(row[c]);
        }
        out << '\n';
    }
}

void write_json_lines(std::ostream &out, const ResultTable &table) {
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::visit([&](const auto &v) { obj[table.columns[c]] = v; }, row[c]);
        }
        out << obj.dump() << '\n';
    }
}

void write_table(std::ostream &out, const ResultTable &table, OutputFormat format) {
    if (format == OutputFormat::csv) {
        write_csv(out, table);
    } else {
        write_json_lines(out, table);
    }
}

std::string file_extension(OutputFormat format) {
    return format == OutputFormat::csv ? ".csv" : ".jsonl";
}

OutputDirectory::OutputDirectory(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) {
        throw IoError("cannot create output directory " + dir_.string() +
                      (ec ? ": " + ec.message() : ""));
    }
}

OutputDirectory::~OutputDirectory() {
    if (committed_) {
        return;
    }
    for (const auto &name : files_) {
        std::error_code ec;
        fs::remove(dir_ / name, ec);
    }
}

void OutputDirectory::write(const std::string &name, const std::string &contents) {
    const fs::path target = dir_ / name;
    const fs::path tmp = dir_ / (name + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << contents;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("cannot write " + target.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot write " + target.string() + ": " + ec.message());
    }
    files_.push_back(name);
}

nlohmann::json make_manifest(const std::string &command, const ScenarioConfig &config,
                             double wall_seconds, const std::vector<std::string> &files) {
    return {
        {"spinsbs_manifest", 1},
        {"version", std::string(kVersion)},
        {"command", command},
        {"seed", config.seed},
        {"config", to_json(config)},
        {"wall_time_seconds", wall_seconds},
        {"files", files},
    };
}

} // namespace spinsbs::cli
