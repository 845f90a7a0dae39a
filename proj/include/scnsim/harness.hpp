// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_HARNESS_HPP
#define SCNSIM_HARNESS_HPP

#include <string>
#include <vector>

#include "scnsim/config.hpp"
#include "scnsim/metrics.hpp"

namespace scnsim {

/// Cartesian experiment grid over user and picocell counts.
struct SweepSpec {
    std::vector<int> num_users;
    std::vector<int> num_picocells;
};

enum class AlgorithmSelection { Both, MatchingOnly, MaxSinrOnly };

enum class ExecutionMode { Serial, Parallel };

/// Runs `runs` seeded realizations of every grid point, solving the matching
/// game and/or the max-SINR baseline on each, and returns records ordered by
/// (grid point, run, algorithm). Per-run seeds are derived deterministically
/// from the config seed and the grid coordinates, so serial and parallel
/// execution produce identical output. Errors carry the failing grid point.
std::vector<MetricsRecord> run_experiment(const Config& config, const SweepSpec& sweep, int runs,
                                          AlgorithmSelection algorithms = AlgorithmSelection::Both,
                                          ExecutionMode mode = ExecutionMode::Parallel);

/// Writes records_to_csv output; throws std::runtime_error on an unwritable
/// destination.
void emit_csv(const std::vector<MetricsRecord>& records, const std::string& path);

void write_file(const std::string& path, const std::string& content);

} // namespace scnsim

#endif
