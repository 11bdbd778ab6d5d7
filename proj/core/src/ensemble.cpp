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

#include "spinsbs/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "spinsbs/rng.hpp"
#include "spinsbs/sbs.hpp"
#include "spinsbs/states.hpp"

namespace spinsbs {

std::vector<std::string> validate(const CouplingDistribution &dist) {
    std::vector<std::string> errors;
    if (!std::isfinite(dist.low) || !std::isfinite(dist.high)) {
        errors.emplace_back("couplings.low/high: must be finite");
    } else {
        if (dist.low < 0.0) {
            errors.emplace_back("couplings.low: must be >= 0");
        }
        if (dist.low > dist.high) {
            errors.emplace_back("couplings.high: must be >= couplings.low");
        }
    }
    return errors;
}

std::vector<double> sample_couplings(const CouplingDistribution &dist, std::size_t n,
                                     std::uint64_t realization, std::uint64_t stream) {
    if (n == 0) {
        throw std::invalid_argument("sample_couplings: n must be >= 1");
    }
    if (const auto errors = validate(dist); !errors.empty()) {
        throw std::invalid_argument(errors.front());
    }
    StreamRng rng(dist.seed, realization, stream);
    std::vector<double> g(n);
    for (auto &value : g) {
        value = rng.uniform(dist.low, dist.high);
    }
    return g;
}

std::vector<double> linspace(double start, double stop, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = start + step * static_cast<double>(i);
    }
    if (n > 1) {
        out.back() = stop;
    }
    return out;
}

std::vector<std::string> validate(const EnsembleConfig &config) {
    std::vector<std::string> errors;
    if (config.j_list.empty()) {
        errors.emplace_back("environment.j: at least one spin is required");
    }
    if (!std::isfinite(config.beta_omega) || config.beta_omega < 0.0) {
        errors.emplace_back("environment.beta_omega: must be finite and >= 0");
    }
    if (!config.j_s.admits(config.m)) {
        errors.emplace_back("system.m: " + config.m.to_string() +
                            " is not a magnetic number of j_s = " +
                            config.j_s.to_string());
    }
    if (!config.j_s.admits(config.m_prime)) {
        errors.emplace_back("system.m_prime: " + config.m_prime.to_string() +
                            " is not a magnetic number of j_s = " +
                            config.j_s.to_string());
    }
    if (config.unobserved_size == 0) {
        errors.emplace_back("layout.unobserved: must be >= 1");
    }
    if (config.macrofraction_sizes.empty()) {
        errors.emplace_back("layout.macrofractions: at least one macrofraction is required");
    }
    for (std::size_t f = 0; f < config.macrofraction_sizes.size(); ++f) {
        if (config.macrofraction_sizes[f] == 0) {
            errors.emplace_back("layout.macrofractions[" + std::to_string(f) +
                                "]: must be >= 1");
        }
    }
    for (auto &e : validate(config.couplings)) {
        errors.push_back(std::move(e));
    }
    if (config.realizations == 0) {
        errors.emplace_back("ensemble.realizations: must be >= 1");
    }
    if (config.time_grid.empty()) {
        errors.emplace_back("time: grid must not be empty");
    }
    for (std::size_t i = 0; i < config.time_grid.size(); ++i) {
        if (!std::isfinite(config.time_grid[i]) || config.time_grid[i] < 0.0) {
            errors.emplace_back("time: values must be finite and >= 0");
            break;
        }
        if (i > 0 && config.time_grid[i] < config.time_grid[i - 1]) {
            errors.emplace_back("time: grid must be sorted ascending");
            break;
        }
    }
    if (config.system_alpha) {
        try {
            SystemState check(config.j_s, *config.system_alpha);
            (void)check;
        } catch (const std::invalid_argument &e) {
            errors.emplace_back(std::string("system.alpha: ") + e.what());
        }
    }
    return errors;
}

std::vector<double>
mean_of_series(const std::vector<const std::vector<double> *> &series) {
    if (series.empty()) {
        return {};
    }
    const std::size_t n = series.front()->size();
    std::vector<double> mean(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        // Neumaier summation, realizations in index order.
        double sum = 0.0;
        double comp = 0.0;
        for (const auto *s : series) {
            const double x = (*s)[i];
            const double t = sum + x;
            if (std::abs(sum) >= std::abs(x)) {
                comp += (sum - t) + x;
            } else {
                comp += (x - t) + sum;
            }
            sum = t;
        }
        mean[i] = (sum + comp) / static_cast<double>(series.size());
    }
    return mean;
}

namespace {

std::vector<double> draw_realization(const EnsembleConfig &config, std::uint64_t r) {
    const std::uint64_t index = config.first_realization + r;
    std::vector<double> g = sample_couplings(config.couplings, config.unobserved_size,
                                             index, 0);
    for (std::size_t f = 0; f < config.macrofraction_sizes.size(); ++f) {
        const auto part = sample_couplings(config.couplings,
                                           config.macrofraction_sizes[f], index, 1 + f);
        g.insert(g.end(), part.begin(), part.end());
    }
    return g;
}

EnsembleSeries evaluate_realization(const EnsembleConfig &config,
                                    const SystemState &system,
                                    const MacrofractionLayout &layout,
                                    SpinQuantumNumber j) {
    const ThermalEnvironment env{j, config.beta_omega};
    const std::size_t n = config.time_grid.size();
    EnsembleSeries s;
    s.abs_gamma.resize(n);
    s.f_mac.resize(n);
    s.decoherence_term.resize(n);
    s.distinguishability_term.resize(n);
    s.bound.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = config.time_grid[i];
        s.abs_gamma[i] =
            std::abs(total_decoherence_factor(layout, env, config.m, config.m_prime, t));
        s.f_mac[i] = macrofraction_fidelity(layout, 0, env, config.m, config.m_prime, t);
        const auto report = sbs_bound(system, layout, env, t);
        s.decoherence_term[i] = report.decoherence_term;
        s.distinguishability_term[i] = report.distinguishability_term;
        s.bound[i] = report.bound;
    }
    return s;
}

} // namespace

EnsembleRun run_experiment(const EnsembleConfig &config) {
    if (const auto errors = validate(config); !errors.empty()) {
        std::string message = "invalid ensemble configuration:";
        for (const auto &e : errors) {
            message += "\n  " + e;
        }
        throw std::invalid_argument(message);
    }

    const SystemState system =
        config.system_alpha ? SystemState(config.j_s, *config.system_alpha)
                            : SystemState::equal_superposition(config.j_s);
    const std::size_t nr = config.realizations;
    const std::size_t nj = config.j_list.size();

    EnsembleRun run;
    run.config = config;
    run.couplings.resize(nr);
    run.per_realization.assign(nj, std::vector<EnsembleSeries>(nr));

    auto work = [&](std::size_t r) {
        auto g = draw_realization(config, r);
        const auto layout = MacrofractionLayout::contiguous(
            g, config.unobserved_size, config.macrofraction_sizes);
        for (std::size_t ji = 0; ji < nj; ++ji) {
            run.per_realization[ji][r] =
                evaluate_realization(config, system, layout, config.j_list[ji]);
        }
        run.couplings[r] = std::move(g);
    };

    unsigned threads = config.threads;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, nr));

    if (threads <= 1) {
        for (std::size_t r = 0; r < nr; ++r) {
            work(r);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t r = next++; r < nr; r = next++) {
                    try {
                        work(r);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    run.average.resize(nj);
    for (std::size_t ji = 0; ji < nj; ++ji) {
        const auto &reals = run.per_realization[ji];
        auto collect = [&](std::vector<double> EnsembleSeries::*field) {
            std::vector<const std::vector<double> *> ptrs;
            ptrs.reserve(reals.size());
            for (const auto &s : reals) {
                ptrs.push_back(&(s.*field));
            }
            return mean_of_series(ptrs);
        };
        auto &avg = run.average[ji];
        avg.abs_gamma = collect(&EnsembleSeries::abs_gamma);
        avg.f_mac = collect(&EnsembleSeries::f_mac);
        avg.decoherence_term = collect(&EnsembleSeries::decoherence_term);
        avg.distinguishability_term = collect(&EnsembleSeries::distinguishability_term);
        avg.bound = collect(&EnsembleSeries::bound);
    }
    return run;
}

} // namespace spinsbs
