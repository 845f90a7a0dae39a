// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/harness.hpp"

#include <fstream>
#include <stdexcept>

#include "scnsim/baseline.hpp"
#include "scnsim/rng.hpp"

namespace scnsim {

namespace {

struct Task {
    int num_users = 0;
    int num_picocells = 0;
    int run = 0; // 1-based
    std::uint64_t seed = 0;
};

std::vector<MetricsRecord> execute_task(const Config& base, const Task& task,
                                        AlgorithmSelection algorithms) {
    Config cfg = base;
    cfg.num_users = task.num_users;
    cfg.num_picocells = task.num_picocells;
    const Scenario scenario = generate_scenario(cfg, task.seed);

    std::vector<MetricsRecord> out;
    if (algorithms != AlgorithmSelection::MaxSinrOnly) {
        const SolveResult result = solve(scenario);
        out.push_back(collect_matching_metrics(scenario, result, task.seed));
    }
    if (algorithms != AlgorithmSelection::MatchingOnly) {
        const Matching baseline = max_sinr_assignment(scenario);
        out.push_back(collect_baseline_metrics(scenario, baseline, task.seed));
    }
    return out;
}

} // namespace

std::vector<MetricsRecord> run_experiment(const Config& config, const SweepSpec& sweep, int runs,
                                          AlgorithmSelection algorithms, ExecutionMode mode) {
    config.validate();
    if (runs < 0)
        throw std::invalid_argument("run_experiment: runs must be >= 0");

    std::vector<Task> tasks;
    for (int n : sweep.num_users) {
        for (int p : sweep.num_picocells) {
            if (n < 0 || p < 0)
                throw std::invalid_argument("run_experiment: grid counts must be >= 0");
            for (int run = 1; run <= runs; ++run) {
                Task t;
                t.num_users = n;
                t.num_picocells = p;
                t.run = run;
                t.seed = mix64(mix64(config.rng_seed, static_cast<std::uint64_t>(n) << 20 |
                                                          static_cast<std::uint64_t>(p)),
                               static_cast<std::uint64_t>(run));
                tasks.push_back(t);
            }
        }
    }

    // one result slot per task keeps the output order independent of the
    // thread schedule
    std::vector<std::vector<MetricsRecord>> slots(tasks.size());
    std::vector<std::string> errors(tasks.size());

    const std::int64_t total = static_cast<std::int64_t>(tasks.size());
    if (mode == ExecutionMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < total; ++k) {
            try {
                slots[k] = execute_task(config, tasks[k], algorithms);
            } catch (const std::exception& e) {
                errors[k] = e.what();
            }
        }
    } else {
        for (std::int64_t k = 0; k < total; ++k) {
            try {
                slots[k] = execute_task(config, tasks[k], algorithms);
            } catch (const std::exception& e) {
                errors[k] = e.what();
            }
        }
    }

    for (std::size_t k = 0; k < tasks.size(); ++k)
        if (!errors[k].empty())
            throw std::runtime_error("run_experiment: grid point (num_users=" +
                                     std::to_string(tasks[k].num_users) + ", num_picocells=" +
                                     std::to_string(tasks[k].num_picocells) + ", run=" +
                                     std::to_string(tasks[k].run) + ") failed: " + errors[k]);

    std::vector<MetricsRecord> records;
    records.reserve(tasks.size() * 2);
    for (auto& slot : slots)
        for (MetricsRecord& r : slot)
            records.push_back(std::move(r));
    return records;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw std::runtime_error("short write to '" + path + "'");
}

void emit_csv(const std::vector<MetricsRecord>& records, const std::string& path) {
    write_file(path, records_to_csv(records));
}

} // namespace scnsim
