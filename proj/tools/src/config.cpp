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


#include "spinsbs/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>

#include "spinsbs/states.hpp"

namespace spinsbs::cli {

using nlohmann::json;

namespace {

const std::map<std::string, Mode> kModes = {
    {"measurement_limit", Mode::measurement_limit},
    {"thermal", Mode::thermal},
    {"ensemble", Mode::ensemble},
    {"sbs_bound", Mode::sbs_bound},
    {"short_time", Mode::short_time},
};

const std::map<std::string, EnvironmentState> kEnvStates = {
    {"thermal", EnvironmentState::thermal},
    {"coherent", EnvironmentState::coherent},
    {"maximally_mixed", EnvironmentState::maximally_mixed},
    {"thermal_z", EnvironmentState::thermal_z},
};

const std::map<std::string, SystemInit> kSystemStates = {
    {"superposition", SystemInit::superposition},
    {"diagonal", SystemInit::diagonal},
};

const std::map<std::string, OutputFormat> kFormats = {
    {"csv", OutputFormat::csv},
    {"json-lines", OutputFormat::json_lines},
};

template <class E>
std::string name_of(const std::map<std::string, E> &table, E value) {
    for (const auto &[name, v] : table) {
        if (v == value) {
            return name;
        }
    }
    return "?";
}

template <class E>
std::string choices(const std::map<std::string, E> &table) {
    std::string out;
    for (const auto &[name, v] : table) {
        out += (out.empty() ? "" : ", ") + name;
    }
    return out;
}

// Walks one JSON object, recording type errors and unknown keys.
class Section {
  public:
    Section(const json *node, std::string path, std::vector<std::string> &errors)
        : node_(node), path_(std::move(path)), errors_(errors) {
        if (node_ != nullptr && !node_->is_object()) {
            fail(path_, "must be an object");
            node_ = nullptr;
        }
    }

    ~Section() {
        if (node_ == nullptr) {
            return;
        }
        for (const auto &item : node_->items()) {
            if (seen_.count(item.key()) == 0) {
                fail(key_path(item.key()), "unknown key");
            }
        }
    }

    Section(const Section &) = delete;
    Section &operator=(const Section &) = delete;

    [[nodiscard]] const json *get(const std::string &key) {
        seen_.insert(key);
        if (node_ == nullptr) {
            return nullptr;
        }
        auto it = node_->find(key);
        if (it == node_->end() || it->is_null()) {
            return nullptr;
        }
        return &*it;
    }

    Section child(const std::string &key) { return Section(get(key), key_path(key), errors_); }

    void number(const std::string &key, double &out) {
        if (const json *v = get(key)) {
            if (v->is_number()) {
                out = v->get<double>();
            } else {
                fail(key_path(key), "must be a number");
            }
        }
    }

    template <class Int>
    void integer(const std::string &key, Int &out) {
        if (const json *v = get(key)) {
            read_integer(*v, key_path(key), out);
        }
    }

    void boolean(const std::string &key, bool &out) {
        if (const json *v = get(key)) {
            if (v->is_boolean()) {
                out = v->get<bool>();
            } else {
                fail(key_path(key), "must be true or false");
            }
        }
    }

    void string(const std::string &key, std::string &out) {
        if (const json *v = get(key)) {
            if (v->is_string()) {
                out = v->get<std::string>();
            } else {
                fail(key_path(key), "must be a string");
            }
        }
    }

    template <class E>
    void choice(const std::string &key, const std::map<std::string, E> &table, E &out) {
        if (const json *v = get(key)) {
            const auto it = v->is_string() ? table.find(v->get<std::string>()) : table.end();
            if (it == table.end()) {
                fail(key_path(key), "must be one of " + choices(table));
            } else {
                out = it->second;
            }
        }
    }

    void half_integer(const std::string &key, HalfInteger &out) {
        if (const json *v = get(key)) {
            read_half_integer(*v, key_path(key), out);
        }
    }

    void spin(const std::string &key, SpinQuantumNumber &out) {
        if (const json *v = get(key)) {
            read_spin(*v, key_path(key), out);
        }
    }

    [[nodiscard]] std::string key_path(const std::string &key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    void fail(const std::string &where, const std::string &what) {
        errors_.push_back(where + ": " + what);
    }

    template <class Int>
    void read_integer(const json &v, const std::string &where, Int &out) {
        if (v.is_number_unsigned() ||
            (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            const auto x = v.get<std::uint64_t>();
            if (x > std::numeric_limits<Int>::max()) {
                fail(where, "is too large");
            } else {
                out = static_cast<Int>(x);
            }
        } else {
            fail(where, "must be a non-negative integer");
        }
    }

    void read_half_integer(const json &v, const std::string &where, HalfInteger &out) {
        try {
            if (v.is_string()) {
                out = HalfInteger::parse(v.get<std::string>());
            } else if (v.is_number()) {
                out = HalfInteger::from_double(v.get<double>());
            } else {
                fail(where, "must be a half-integer such as \"3/2\"");
            }
        } catch (const std::invalid_argument &) {
            fail(where, "is not a multiple of 1/2");
        }
    }

    void read_spin(const json &v, const std::string &where, SpinQuantumNumber &out) {
        HalfInteger h;
        const auto before = errors_.size();
        read_half_integer(v, where, h);
        if (errors_.size() != before) {
            return;
        }
        if (h.twice() < 0) {
            fail(where, "spin must be >= 0");
        } else {
            out = SpinQuantumNumber::from_twice(h.twice());
        }
    }

  private:
    const json *node_;
    std::string path_;
    std::vector<std::string> &errors_;
    std::set<std::string> seen_;
};

json spin_json(SpinQuantumNumber j) { return j.to_string(); }

} // namespace

std::vector<double> TimeGrid::materialize() const {
    if (!values.empty()) {
        return values;
    }
    return linspace(start, stop, points);
}

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error([&] {
          std::string msg = "invalid configuration:";
          for (const auto &e : errors) {
              msg += "\n  " + e;
          }
          return msg;
      }()),
      errors_(std::move(errors)) {}

std::string to_string(Mode mode) { return name_of(kModes, mode); }
std::string to_string(OutputFormat format) { return name_of(kFormats, format); }

ScenarioConfig parse_config(const json &doc) {
    ScenarioConfig c;
    std::vector<std::string> errors;
    {
        Section root(&doc, "", errors);
        root.choice("mode", kModes, c.mode);
        root.integer("seed", c.seed);
        {
            auto s = root.child("system");
            s.spin("j", c.j_s);
            s.half_integer("m", c.m);
            s.half_integer("m_prime", c.m_prime);
            s.choice("state", kSystemStates, c.system_state);
        }
        {
            auto s = root.child("environment");
            if (const json *j = s.get("j")) {
                const std::string where = s.key_path("j");
                if (j->is_array()) {
                    c.j_list.clear();
                    for (std::size_t i = 0; i < j->size(); ++i) {
                        SpinQuantumNumber spin;
                        const auto before = errors.size();
                        s.read_spin((*j)[i], where + "[" + std::to_string(i) + "]", spin);
                        if (errors.size() == before) {
                            c.j_list.push_back(spin);
                        }
                    }
                } else {
                    SpinQuantumNumber spin;
                    const auto before = errors.size();
                    s.read_spin(*j, where, spin);
                    if (errors.size() == before) {
                        c.j_list = {spin};
                    }
                }
            }
            s.number("beta_omega", c.beta_omega);
            s.number("theta", c.theta);
            s.number("phi", c.phi);
            s.choice("state", kEnvStates, c.environment_state);
        }
        {
            auto s = root.child("couplings");
            std::string dist = "uniform";
            s.string("distribution", dist);
            if (dist != "uniform") {
                s.fail(s.key_path("distribution"), "only \"uniform\" is supported");
            }
            s.number("low", c.low);
            s.number("high", c.high);
            s.number("g", c.g);
        }
        {
            auto s = root.child("layout");
            s.integer("unobserved", c.unobserved);
            if (const json *f = s.get("macrofractions")) {
                const std::string where = s.key_path("macrofractions");
                if (!f->is_array()) {
                    s.fail(where, "must be a list of sizes");
                } else {
                    c.macrofractions.assign(f->size(), 0);
                    for (std::size_t i = 0; i < f->size(); ++i) {
                        s.read_integer((*f)[i], where + "[" + std::to_string(i) + "]",
                                       c.macrofractions[i]);
                    }
                }
            }
        }
        {
            auto s = root.child("ensemble");
            s.integer("realizations", c.realizations);
            s.integer("first_realization", c.first_realization);
            s.integer("threads", c.threads);
        }
        {
            auto s = root.child("time");
            const bool has_values = s.get("values") != nullptr;
            const bool has_range = s.get("start") != nullptr || s.get("stop") != nullptr ||
                                   s.get("points") != nullptr;
            if (has_values && has_range) {
                s.fail("time", "give either values or start/stop/points, not both");
            }
            s.number("start", c.time.start);
            s.number("stop", c.time.stop);
            s.integer("points", c.time.points);
            if (const json *v = s.get("values")) {
                if (!v->is_array() || v->empty()) {
                    s.fail("time.values", "must be a non-empty list of numbers");
                } else {
                    for (std::size_t i = 0; i < v->size(); ++i) {
                        if ((*v)[i].is_number()) {
                            c.time.values.push_back((*v)[i].get<double>());
                        } else {
                            s.fail("time.values[" + std::to_string(i) + "]",
                                   "must be a number");
                        }
                    }
                }
            }
        }
        {
            auto s = root.child("output");
            s.string("dir", c.out_dir);
            s.choice("format", kFormats, c.format);
            s.boolean("svg", c.svg);
        }
    }
    if (!errors.empty()) {
        throw ConfigError(std::move(errors));
    }
    if (auto problems = validate(c); !problems.empty()) {
        throw ConfigError(std::move(problems));
    }
    return c;
}

std::vector<std::string> validate(const ScenarioConfig &c) {
    std::vector<std::string> errors;
    auto finite_nonneg = [&](double x, const char *key) {
        if (!std::isfinite(x) || x < 0.0) {
            errors.push_back(std::string(key) + ": must be finite and >= 0");
        }
    };
    if (!c.j_s.admits(c.m)) {
        errors.push_back("system.m: " + c.m.to_string() +
                         " is not a magnetic number of j = " + c.j_s.to_string());
    }
    if (!c.j_s.admits(c.m_prime)) {
        errors.push_back("system.m_prime: " + c.m_prime.to_string() +
                         " is not a magnetic number of j = " + c.j_s.to_string());
    }
    if (c.j_list.empty()) {
        errors.emplace_back("environment.j: at least one spin is required");
    }
    for (const auto &j : c.j_list) {
        if (j.twice() > kMaxDenseTwiceJ) {
            errors.push_back("environment.j: " + j.to_string() + " exceeds the limit " +
                             HalfInteger::from_twice(kMaxDenseTwiceJ).to_string());
        }
    }
    if (c.j_s.twice() > kMaxDenseTwiceJ) {
        errors.emplace_back("system.j: exceeds the dense-matrix limit");
    }
    finite_nonneg(c.beta_omega, "environment.beta_omega");
    if (!std::isfinite(c.theta)) {
        errors.emplace_back("environment.theta: must be finite");
    }
    if (!std::isfinite(c.phi)) {
        errors.emplace_back("environment.phi: must be finite");
    }
    finite_nonneg(c.g, "couplings.g");
    for (auto &e : validate(CouplingDistribution{CouplingKind::uniform, c.low, c.high, c.seed})) {
        errors.push_back(std::move(e));
    }
    if (c.unobserved == 0) {
        errors.emplace_back("layout.unobserved: must be >= 1");
    }
    if (c.macrofractions.empty()) {
        errors.emplace_back("layout.macrofractions: at least one macrofraction is required");
    }
    for (std::size_t f = 0; f < c.macrofractions.size(); ++f) {
        if (c.macrofractions[f] == 0) {
            errors.push_back("layout.macrofractions[" + std::to_string(f) +
                             "]: must be >= 1");
        }
    }
    if (c.realizations == 0) {
        errors.emplace_back("ensemble.realizations: must be >= 1");
    }
    if (c.time.values.empty()) {
        finite_nonneg(c.time.start, "time.start");
        if (!std::isfinite(c.time.stop) || c.time.stop < c.time.start) {
            errors.emplace_back("time.stop: must be finite and >= time.start");
        }
        if (c.time.points == 0) {
            errors.emplace_back("time.points: must be >= 1");
        }
    } else {
        for (std::size_t i = 0; i < c.time.values.size(); ++i) {
            if (!std::isfinite(c.time.values[i]) || c.time.values[i] < 0.0) {
                errors.push_back("time.values[" + std::to_string(i) +
                                 "]: must be finite and >= 0");
            } else if (i > 0 && c.time.values[i] < c.time.values[i - 1]) {
                errors.push_back("time.values[" + std::to_string(i) +
                                 "]: values must be ascending");
            }
        }
    }
    return errors;
}

json to_json(const ScenarioConfig &c) {
    json j_list = json::array();
    for (const auto &j : c.j_list) {
        j_list.push_back(spin_json(j));
    }
    json time;
    if (c.time.values.empty()) {
        time = {{"start", c.time.start}, {"stop", c.time.stop}, {"points", c.time.points}};
    } else {
        time = {{"values", c.time.values}};
    }
    return {
        {"mode", to_string(c.mode)},
        {"seed", c.seed},
        {"system",
         {{"j", spin_json(c.j_s)},
          {"m", c.m.to_string()},
          {"m_prime", c.m_prime.to_string()},
          {"state", name_of(kSystemStates, c.system_state)}}},
        {"environment",
         {{"j", j_list},
          {"beta_omega", c.beta_omega},
          {"theta", c.theta},
          {"phi", c.phi},
          {"state", name_of(kEnvStates, c.environment_state)}}},
        {"couplings",
         {{"distribution", "uniform"}, {"low", c.low}, {"high", c.high}, {"g", c.g}}},
        {"layout", {{"unobserved", c.unobserved}, {"macrofractions", c.macrofractions}}},
        {"ensemble",
         {{"realizations", c.realizations},
          {"first_realization", c.first_realization},
          {"threads", c.threads}}},
        {"time", time},
        {"output",
         {{"dir", c.out_dir}, {"format", to_string(c.format)}, {"svg", c.svg}}},
    };
}

json load_config_document(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError({"--config: cannot open " + path.string()});
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError({"--config: " + path.string() + " is not valid JSON: " + e.what()});
    }
    if (doc.is_object() && doc.contains("spinsbs_manifest") && doc.contains("config")) {
        return doc.at("config");
    }
    return doc;
}

EnsembleConfig to_ensemble_config(const ScenarioConfig &c) {
    EnsembleConfig e;
    e.j_list = c.j_list;
    e.beta_omega = c.beta_omega;
    e.j_s = c.j_s;
    e.m = c.m;
    e.m_prime = c.m_prime;
    e.unobserved_size = c.unobserved;
    e.macrofraction_sizes = c.macrofractions;
    e.couplings = CouplingDistribution{CouplingKind::uniform, c.low, c.high, c.seed};
    e.realizations = c.realizations;
    e.first_realization = c.first_realization;
    e.time_grid = c.time.materialize();
    if (c.system_state == SystemInit::diagonal) {
        const int d = c.j_s.dimension();
        e.system_alpha = Matrix::Identity(d, d) / static_cast<double>(d);
    }
    e.threads = c.threads;
    return e;
}

} // namespace spinsbs::cli
