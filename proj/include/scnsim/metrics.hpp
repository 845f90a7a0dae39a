// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_METRICS_HPP
#define SCNSIM_METRICS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "scnsim/matching.hpp"
#include "scnsim/scenario.hpp"

namespace scnsim {

/// Aggregates of one algorithm run on one scenario. Per-class utilities are
/// reported twice: over all users of the class and over the pico-served ones
/// only (NaN when the class or subset is empty).
struct MetricsRecord {
    int num_users = 0;
    int num_picocells = 0;
    std::uint64_t seed = 0;
    std::string algorithm; // "matching" | "max_sinr"
    std::string outcome;   // "converged" | "cycle" | "cap" | "-"
    double avg_rate_bps = 0.0;
    double avg_utility = 0.0;
    std::array<double, 3> class_utility_all{};  // laptop, tablet, smartphone
    std::array<double, 3> class_utility_pico{};
    double avg_scbs_utility = 0.0;
    double iterations_per_user = 0.0;
    int outer_iterations = 0;
    int pico_assigned = 0;

    bool operator==(const MetricsRecord&) const = default;
};

/// Metrics of a solved matching (iteration effort from the solve result).
MetricsRecord collect_matching_metrics(const Scenario& scenario, const SolveResult& result,
                                       std::uint64_t seed);

/// Metrics of a baseline assignment.
MetricsRecord collect_baseline_metrics(const Scenario& scenario, const Matching& matching,
                                       std::uint64_t seed);

/// Fixed-order CSV with a header row; floats rendered with full precision so
/// identical record sequences serialize byte-identically.
std::string records_to_csv(const std::vector<MetricsRecord>& records);

/// Inverse of records_to_csv; throws std::runtime_error on malformed input.
std::vector<MetricsRecord> records_from_csv(const std::string& csv);

/// Relative improvement of the matching run over the baseline run, per grid
/// point: (mean_matching - mean_baseline) / |mean_baseline|.
struct GainRow {
    int num_users = 0;
    int num_picocells = 0;
    int runs = 0;
    double rate_gain = 0.0;
    double utility_gain = 0.0;
    double scbs_utility_gain = 0.0;
};

/// Throws std::runtime_error when a grid point lacks either algorithm.
std::vector<GainRow> summarize_gain(const std::vector<MetricsRecord>& records);

std::string gains_to_csv(const std::vector<GainRow>& gains);

} // namespace scnsim

#endif
