// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_MATCHING_HPP
#define SCNSIM_MATCHING_HPP

#include <string>
#include <vector>

#include "scnsim/scenario.hpp"

namespace scnsim {

/// Many-to-one assignment of users to cells. Every user maps to exactly one
/// cell index; users on no picocell sit on the macro (index 0). Both
/// directions of the map are kept consistent.
struct Matching {
    std::vector<int> user_cell;              // per user: serving cell index
    std::vector<std::vector<int>> cell_users; // per cell: sorted user ids

    static Matching all_macro(const Scenario& scenario);
    static Matching from_user_cells(std::vector<int> user_cell, int num_cells);

    int cell_of(int user) const { return user_cell[user]; }
    int load(int cell) const { return static_cast<int>(cell_users[cell].size()); }

    bool operator==(const Matching& other) const { return user_cell == other.user_cell; }

    /// Checks quota, bidirectional consistency and the macro fallback rule;
    /// throws std::runtime_error on violation.
    void validate(const Scenario& scenario) const;
};

/// Strict ranked preference lists for one round of proposals. A pico appears
/// in a user's list only if the user is acceptable to that pico, and only if
/// the user values it above its macro fallback. Ties in utility are broken
/// toward the lower id, so all rankings are strict.
struct PreferenceProfile {
    std::vector<std::vector<int>> user_prefs;     // per user: pico cell indices, best first
    std::vector<std::vector<double>> user_utils;  // parallel to user_prefs
    std::vector<double> macro_utils;              // fallback utility per user
    std::vector<std::vector<int>> cell_prefs;     // per cell: user ids, best first (empty for macro)
    std::vector<std::vector<double>> cell_utils;  // parallel to cell_prefs
    std::vector<std::vector<int>> cell_rank;      // per cell: user id -> rank, -1 if unacceptable

    void validate() const; // duplicate-free lists, mutual acceptability
};

enum class SolveOutcome { Converged, CycleDetected, IterationCapHit };

const char* outcome_name(SolveOutcome o);

struct DaStats {
    int rounds = 0;
    long proposals = 0;
    std::vector<long> user_proposals; // per user
};

struct SolveResult {
    Matching matching;
    SolveOutcome outcome = SolveOutcome::IterationCapHit;
    int outer_iterations = 0;
    std::vector<int> inner_rounds;        // proposal rounds per outer iteration
    std::vector<long> proposals_per_outer;
    std::vector<long> user_proposals;     // totals over iterations that changed the matching
};

struct BlockingPair {
    int user = 0;
    int cell = 0;
    bool operator==(const BlockingPair&) const = default;
};

/// Users cell j would consider admitting under the current matching: inside
/// j's coverage, crossing long enough to outlast the handover preparation
/// time, and with an admissible predicted handover-failure probability for
/// the route from the user's current cell (macro-to-pico or pico-to-pico; no
/// handover is needed to keep the current cell).
std::vector<int> acceptable_set(int cell, const Matching& matching, const Scenario& scenario);

/// Ranks mutually acceptable user/pico pairs by the context-aware utilities
/// evaluated under the current matching.
PreferenceProfile build_preferences(const Matching& matching, const Scenario& scenario);

/// User-proposing deferred acceptance over fixed preference lists: users work
/// down their lists while cells hold their best applicants up to quota.
/// Users whose lists are exhausted fall back to the macro.
Matching deferred_acceptance(const PreferenceProfile& prefs, const std::vector<int>& quotas,
                             int num_users, int num_cells, DaStats* stats = nullptr);

/// Runs the outer fixed-point iteration: starting from the all-macro state,
/// rebuild utilities and preferences under the current matching and re-run
/// deferred acceptance until the matching repeats. A repeat of the previous
/// matching converges; a repeat with a longer period is reported as a cycle
/// and the best matching of the cycle (by mean user utility) is returned.
SolveResult solve(const Scenario& scenario, int max_outer);
SolveResult solve(const Scenario& scenario); // max_outer from config

/// Blocking pairs of a matching against a frozen preference profile.
std::vector<BlockingPair> blocking_pairs(const Matching& matching, const PreferenceProfile& prefs,
                                         const std::vector<int>& quotas);

/// Blocking pairs under the utilities induced by the matching itself
/// (preferences are rebuilt at the given matching). Empty result == stable.
std::vector<BlockingPair> is_stable(const Matching& matching, const Scenario& scenario);

/// Exhaustive enumeration of quota-feasible, individually rational matchings
/// with no blocking pair; guarded to num_users <= 8, picos <= 3, quotas <= 2.
std::vector<Matching> brute_force_stable(const Scenario& scenario);

/// Mean user utility of a matching (over all users, each at its serving cell).
double mean_user_utility(const Matching& matching, const Scenario& scenario);

/// CSV rows user_id,cell_id,utility for golden comparisons.
std::string serialize_matching_csv(const Matching& matching, const Scenario& scenario);

} // namespace scnsim

#endif
