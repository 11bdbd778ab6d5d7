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


#include "spinsbs/cli/app.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spinsbs/cli/config.hpp"
#include "spinsbs/cli/output.hpp"
#include "spinsbs/cli/run.hpp"
#include "spinsbs/cli/svg.hpp"
#include "spinsbs/ensemble.hpp"
#include "spinsbs/linalg.hpp"
#include "spinsbs/version.hpp"

namespace spinsbs::cli {

using nlohmann::json;

namespace {

// Values given on the command line. Only options that were actually passed
// end up in the override document.
struct Flags {
    std::string config;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    std::string js;
    std::string m;
    std::string m_prime;
    std::string system_state;
    std::vector<std::string> j;
    double beta_omega = 0.0;
    double g = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    std::string state;
    double low = 0.0;
    double high = 0.0;
    std::size_t unobserved = 0;
    std::vector<std::size_t> macrofractions;
    std::size_t realizations = 0;
    std::uint64_t first_realization = 0;
    unsigned threads = 0;
    std::vector<double> t;
    double t_start = 0.0;
    double t_max = 0.0;
    std::size_t points = 0;
    bool svg = false;
};

void add_flags(CLI::App &sub, Flags &f) {
    sub.add_option("--config", f.config, "JSON scenario file or run manifest");
    sub.add_option("--seed", f.seed, "Base seed of the coupling draws");
    sub.add_option("--out", f.out, "Output directory (default: print to stdout)");
    sub.add_option("--format", f.format, "csv or json-lines");
    sub.add_option("--js", f.js, "Central spin j_S, e.g. 1/2");
    sub.add_option("--m", f.m, "Magnetic number m");
    sub.add_option("--m-prime", f.m_prime, "Magnetic number m'");
    sub.add_option("--system-state", f.system_state, "superposition or diagonal");
    sub.add_option("--j", f.j, "Environment spin(s), comma separated")->delimiter(',');
    sub.add_option("--beta-omega", f.beta_omega, "Inverse temperature times Omega");
    sub.add_option("--g", f.g, "Coupling g/Omega for single-spin modes");
    sub.add_option("--theta", f.theta, "Polar angle of the coherent state");
    sub.add_option("--phi", f.phi, "Azimuth of the coherent state");
    sub.add_option("--state", f.state,
                   "Environment state: thermal, coherent, maximally_mixed, thermal_z");
    sub.add_option("--low", f.low, "Lower end of the coupling distribution");
    sub.add_option("--high", f.high, "Upper end of the coupling distribution");
    sub.add_option("--unobserved", f.unobserved, "Size of the unobserved fraction");
    sub.add_option("--macrofractions", f.macrofractions, "Macrofraction sizes, comma separated")
        ->delimiter(',');
    sub.add_option("--realizations", f.realizations, "Number of coupling realizations");
    sub.add_option("--first-realization", f.first_realization, "Index of the first realization");
    sub.add_option("--threads", f.threads, "Worker threads (0: all cores)");
    sub.add_option("--t", f.t, "Explicit time value(s), comma separated")->delimiter(',');
    sub.add_option("--t-start", f.t_start, "First time of the grid");
    sub.add_option("--t-max", f.t_max, "Last time of the grid");
    sub.add_option("--points", f.points, "Number of grid points");
    sub.add_flag("--svg", f.svg, "Also write SVG charts (needs --out)");
}

json overrides(const CLI::App &sub, const Flags &f) {
    json patch = json::object();
    auto given = [&](const char *name) { return sub.count(name) > 0; };
    if (given("--seed")) patch["seed"] = f.seed;
    if (given("--out")) patch["output"]["dir"] = f.out;
    if (given("--format")) patch["output"]["format"] = f.format;
    if (given("--svg")) patch["output"]["svg"] = f.svg;
    if (given("--js")) patch["system"]["j"] = f.js;
    if (given("--m")) patch["system"]["m"] = f.m;
    if (given("--m-prime")) patch["system"]["m_prime"] = f.m_prime;
    if (given("--system-state")) patch["system"]["state"] = f.system_state;
    if (given("--j")) patch["environment"]["j"] = f.j;
    if (given("--beta-omega")) patch["environment"]["beta_omega"] = f.beta_omega;
    if (given("--theta")) patch["environment"]["theta"] = f.theta;
    if (given("--phi")) patch["environment"]["phi"] = f.phi;
    if (given("--state")) patch["environment"]["state"] = f.state;
    if (given("--g")) patch["couplings"]["g"] = f.g;
    if (given("--low")) patch["couplings"]["low"] = f.low;
    if (given("--high")) patch["couplings"]["high"] = f.high;
    if (given("--unobserved")) patch["layout"]["unobserved"] = f.unobserved;
    if (given("--macrofractions")) patch["layout"]["macrofractions"] = f.macrofractions;
    if (given("--realizations")) patch["ensemble"]["realizations"] = f.realizations;
    if (given("--first-realization"))
        patch["ensemble"]["first_realization"] = f.first_realization;
    if (given("--threads")) patch["ensemble"]["threads"] = f.threads;
    if (given("--t")) {
        patch["time"] = {{"values", f.t}, {"start", nullptr}, {"stop", nullptr},
                         {"points", nullptr}};
    } else if (given("--t-start") || given("--t-max") || given("--points")) {
        patch["time"]["values"] = nullptr;
        if (given("--t-start")) patch["time"]["start"] = f.t_start;
        if (given("--t-max")) patch["time"]["stop"] = f.t_max;
        if (given("--points")) patch["time"]["points"] = f.points;
    }
    return patch;
}

using Tables = std::vector<std::pair<std::string, ResultTable>>;

struct Command {
    std::string name;
    Mode mode;
    std::function<Tables(const ScenarioConfig &)> run;
};

// Series of column ycol against time, one per j, from rows whose
// "realization" column (if any) equals realization.
LineChart chart(const ResultTable &table, const std::string &ycol, const std::string &title,
                const std::string &realization = "") {
    auto col = [&](const std::string &name) -> std::ptrdiff_t {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (table.columns[c] == name) {
                return static_cast<std::ptrdiff_t>(c);
            }
        }
        return -1;
    };
    const auto tcol = col("time");
    const auto jcol = col("j");
    const auto ycol_index = col(ycol);
    const auto rcol = col("realization");
    LineChart out{title, "t Omega", ycol, {}};
    std::map<std::string, std::size_t> index;
    for (const auto &row : table.rows) {
        if (rcol >= 0 && format_cell(row[static_cast<std::size_t>(rcol)]) != realization) {
            continue;
        }
        const std::string j = format_cell(row[static_cast<std::size_t>(jcol)]);
        auto [it, inserted] = index.emplace(j, out.series.size());
        if (inserted) {
            out.series.push_back({"j = " + j, {}, {}});
        }
        auto &s = out.series[it->second];
        s.x.push_back(std::get<double>(row[static_cast<std::size_t>(tcol)]));
        s.y.push_back(std::get<double>(row[static_cast<std::size_t>(ycol_index)]));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> charts(const std::string &command,
                                                        const ScenarioConfig &c,
                                                        const Tables &tables) {
    std::vector<std::pair<std::string, std::string>> out;
    auto add = [&](const std::string &name, const LineChart &chart) {
        out.emplace_back(name, render_svg(chart));
    };
    const auto &[stem, table] = tables.front();
    if (command == "demo fig1") {
        const std::string sample = std::to_string(c.first_realization);
        add("fig1_sample_f_mac.svg",
            chart(tables[0].second, "f_mac", "F^mac, realization " + sample, sample));
        add("fig1_sample_abs_gamma.svg",
            chart(tables[0].second, "abs_gamma", "|Gamma|, realization " + sample, sample));
        add("fig1_average_f_mac.svg", chart(tables[1].second, "f_mac", "F^mac, average", "avg"));
        add("fig1_average_abs_gamma.svg",
            chart(tables[1].second, "abs_gamma", "|Gamma|, average", "avg"));
    } else if (stem == "ensemble") {
        add("ensemble_f_mac.svg", chart(table, "f_mac", "F^mac, average", "avg"));
        add("ensemble_abs_gamma.svg", chart(table, "abs_gamma", "|Gamma|, average", "avg"));
    } else if (stem == "sbs_bound") {
        add("sbs_bound.svg", chart(table, "bound", "SBS distance bound"));
    } else if (stem == "short_time") {
        add("short_time_f_mac.svg", chart(table, "f_mac_exact", "F^mac"));
        add("short_time_abs_gamma.svg", chart(table, "abs_gamma_exact", "|Gamma|"));
    } else {
        add(stem + ".svg", chart(table, "abs_gamma", "|gamma|"));
    }
    return out;
}

int execute(const Command &cmd, const ScenarioConfig &config, std::ostream &out) {
    const auto started = std::chrono::steady_clock::now();
    Tables tables = cmd.run(config);
    for (const auto &[stem, table] : tables) {
        table.require_finite();
    }
    if (config.out_dir.empty()) {
        for (const auto &[stem, table] : tables) {
            write_table(out, table, config.format);
        }
        return kExitOk;
    }

    OutputDirectory dir(config.out_dir);
    for (const auto &[stem, table] : tables) {
        std::ostringstream body;
        write_table(body, table, config.format);
        dir.write(stem + file_extension(config.format), body.str());
    }
    if (config.svg) {
        for (const auto &[name, svg] : charts(cmd.name, config, tables)) {
            dir.write(name, svg);
        }
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                            .count();
    auto files = dir.files();
    dir.write("manifest.json", make_manifest(cmd.name, config, wall, files).dump(2) + "\n");
    dir.commit();
    for (const auto &name : dir.files()) {
        out << (dir.path() / name).string() << '\n';
    }
    return kExitOk;
}

std::vector<Command> commands() {
    auto single = [](std::string stem, std::function<ResultTable(const ScenarioConfig &)> f) {
        return [stem = std::move(stem), f = std::move(f)](const ScenarioConfig &c) {
            return Tables{{stem, f(c)}};
        };
    };
    return {
        {"gamma-pure", Mode::measurement_limit,
         single("gamma_pure", [](const auto &c) { return run_measurement_limit(c, true); })},
        {"gamma-general", Mode::measurement_limit,
         single("gamma_general", [](const auto &c) { return run_measurement_limit(c, false); })},
        {"thermal", Mode::thermal, single("thermal", run_thermal)},
        {"ensemble", Mode::ensemble,
         [](const ScenarioConfig &c) {
             const auto run = run_experiment(to_ensemble_config(c));
             return Tables{{"ensemble", ensemble_table(run, true, true)}};
         }},
        {"sbs-bound", Mode::sbs_bound, single("sbs_bound", run_sbs_bound)},
        {"short-time", Mode::short_time, single("short_time", run_short_time)},
        {"demo fig1", Mode::ensemble,
         [](const ScenarioConfig &c) {
             const auto run = run_experiment(to_ensemble_config(c));
             return Tables{{"fig1_sample", ensemble_table(run, true, false, std::size_t{0})},
                           {"fig1_average", ensemble_table(run, false, true)}};
         }},
    };
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Decoherence, fidelities and SBS bounds for a central spin in a spin bath",
                 "spinsbs"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Flags flags;
    const auto cmds = commands();
    std::map<const CLI::App *, const Command *> by_app;
    for (const auto &cmd : cmds) {
        if (cmd.name == "demo fig1") {
            continue;
        }
        auto *sub = app.add_subcommand(cmd.name, "Run the " + to_string(cmd.mode) + " scenario");
        add_flags(*sub, flags);
        by_app[sub] = &cmd;
    }
    auto *demo = app.add_subcommand("demo", "Regenerate figure data");
    demo->require_subcommand(1);
    auto *fig1 = demo->add_subcommand(
        "fig1", "Random-coupling ensemble: one realization and the average over all");
    add_flags(*fig1, flags);
    by_app[fig1] = &cmds.back();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const CLI::App *chosen = nullptr;
    for (const auto &[sub, cmd] : by_app) {
        if (sub->parsed()) {
            chosen = sub;
        }
    }
    const Command &cmd = *by_app.at(chosen);

    try {
        json doc = flags.config.empty() ? json::object() : load_config_document(flags.config);
        if (!doc.is_object()) {
            throw ConfigError({"--config: top level must be an object"});
        }
        doc.merge_patch(overrides(*chosen, flags));
        doc["mode"] = to_string(cmd.mode);
        if (cmd.name == "gamma-pure") {
            doc["environment"]["state"] = "coherent";
        }
        if (cmd.name == "demo fig1") {
            if (!doc.contains("output") || !doc["output"].contains("dir")) {
                doc["output"]["dir"] = "fig1-output";
            }
        }
        const ScenarioConfig config = parse_config(doc);
        if (config.svg && config.out_dir.empty()) {
            throw ConfigError({"output.svg: needs an output directory (--out)"});
        }
        return execute(cmd, config, out);
    } catch (const ConfigError &e) {
        err << "spinsbs: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError &e) {
        err << "spinsbs: " << e.what() << '\n';
        return kExitIo;
    } catch (const NumericalError &e) {
        err << "spinsbs: numerical error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::invalid_argument &e) {
        err << "spinsbs: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "spinsbs: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace spinsbs::cli
