// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "scnsim/geometry.hpp"
#include "scnsim/handover.hpp"
#include "scnsim/utility.hpp"

namespace scnsim {

namespace {

std::vector<int> cell_quotas(const Scenario& scenario) {
    std::vector<int> q;
    q.reserve(scenario.cells.size());
    for (const Cell& c : scenario.cells)
        q.push_back(c.quota);
    return q;
}

} // namespace

const char* outcome_name(SolveOutcome o) {
    switch (o) {
    case SolveOutcome::Converged:
        return "converged";
    case SolveOutcome::CycleDetected:
        return "cycle";
    case SolveOutcome::IterationCapHit:
        return "cap";
    }
    return "?";
}

Matching Matching::all_macro(const Scenario& scenario) {
    return from_user_cells(std::vector<int>(scenario.num_users(), 0), scenario.num_cells());
}

Matching Matching::from_user_cells(std::vector<int> user_cell, int num_cells) {
    Matching m;
    m.user_cell = std::move(user_cell);
    m.cell_users.assign(num_cells, {});
    for (int i = 0; i < static_cast<int>(m.user_cell.size()); ++i)
        m.cell_users[m.user_cell[i]].push_back(i);
    return m;
}

void Matching::validate(const Scenario& scenario) const {
    if (static_cast<int>(user_cell.size()) != scenario.num_users() ||
        static_cast<int>(cell_users.size()) != scenario.num_cells())
        throw std::runtime_error("matching: shape mismatch with scenario");
    std::vector<int> seen(user_cell.size(), 0);
    for (int c = 0; c < static_cast<int>(cell_users.size()); ++c) {
        if (scenario.cells[c].tier == Tier::Pico &&
            static_cast<int>(cell_users[c].size()) > scenario.cells[c].quota)
            throw std::runtime_error("matching: quota exceeded at cell " + std::to_string(c));
        for (int u : cell_users[c]) {
            if (user_cell[u] != c)
                throw std::runtime_error("matching: user/cell maps disagree");
            seen[u] += 1;
        }
    }
    for (int s : seen)
        if (s != 1)
            throw std::runtime_error("matching: every user must appear in exactly one cell");
}

void PreferenceProfile::validate() const {
    for (int i = 0; i < static_cast<int>(user_prefs.size()); ++i) {
        std::vector<int> sorted = user_prefs[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::runtime_error("preferences: duplicate cell in a user list");
        for (int j : user_prefs[i])
            if (cell_rank[j].empty() || cell_rank[j][i] < 0)
                throw std::runtime_error("preferences: user lists a cell that does not rank it");
    }
    for (int j = 0; j < static_cast<int>(cell_prefs.size()); ++j) {
        std::vector<int> sorted = cell_prefs[j];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::runtime_error("preferences: duplicate user in a cell list");
    }
}

std::vector<int> acceptable_set(int cell, const Matching& matching, const Scenario& scenario) {
    std::vector<int> out;
    const Cell& target = scenario.cells[cell];
    if (target.tier != Tier::Pico)
        return out;
    const Config& cfg = scenario.config;
    const double v_min = cfg.speed_range.lo * (1000.0 / 3600.0);
    const double v_max = cfg.speed_range.hi * (1000.0 / 3600.0);

    for (int i = 0; i < scenario.num_users(); ++i) {
        if (scenario.distance(i, cell) > target.coverage_radius)
            continue;
        const double dwell =
            interaction_time(target.coverage_radius, scenario.theta(i, cell),
                             scenario.users[i].speed);
        if (classify_visitor(dwell, cfg.prep_time) != VisitorClass::Candidate)
            continue;

        const int origin = matching.cell_of(i);
        if (origin == cell) {
            out.push_back(i); // keeping the current cell needs no handover
            continue;
        }
        if (scenario.cells[origin].tier == Tier::Macro) {
            if (hf_prob_m2p(target.hf_radius, target.coverage_radius) <= cfg.hf_threshold)
                out.push_back(i);
        } else {
            P2PGeometry g;
            g.r1 = scenario.cells[origin].coverage_radius;
            g.r1_exit = cfg.exit_radius_factor * g.r1;
            g.r2_coverage = target.coverage_radius;
            g.r2_failure = target.hf_radius;
            const double dx = scenario.cells[origin].x - target.x;
            const double dy = scenario.cells[origin].y - target.y;
            g.center_distance = std::hypot(dx, dy);
            g.prep_time = cfg.prep_time;
            g.v_min = v_min;
            g.v_max = v_max;
            if (p2p_feasible(g) && hf_prob_p2p(g) <= cfg.hf_threshold)
                out.push_back(i);
        }
    }
    return out;
}

PreferenceProfile build_preferences(const Matching& matching, const Scenario& scenario) {
    const int n = scenario.num_users();
    const int c = scenario.num_cells();
    PreferenceProfile p;
    p.user_prefs.assign(n, {});
    p.user_utils.assign(n, {});
    p.macro_utils.assign(n, 0.0);
    p.cell_prefs.assign(c, {});
    p.cell_utils.assign(c, {});
    p.cell_rank.assign(c, {});

    // cell side: admission filter, then rank by the cell's utility
    for (int j = 1; j < c; ++j) {
        std::vector<int> acc = acceptable_set(j, matching, scenario);
        std::vector<std::pair<double, int>> ranked;
        ranked.reserve(acc.size());
        for (int i : acc)
            ranked.emplace_back(scbs_utility(matching, j, i, scenario), i);
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first > b.first;
            return a.second < b.second;
        });
        p.cell_rank[j].assign(n, -1);
        for (int r = 0; r < static_cast<int>(ranked.size()); ++r) {
            p.cell_prefs[j].push_back(ranked[r].second);
            p.cell_utils[j].push_back(ranked[r].first);
            p.cell_rank[j][ranked[r].second] = r;
        }
    }

    // user side: rank admissible picos that beat the macro fallback
    for (int i = 0; i < n; ++i) {
        p.macro_utils[i] = user_utility(matching, i, 0, scenario);
        std::vector<std::pair<double, int>> ranked;
        for (int j = 1; j < c; ++j) {
            if (p.cell_rank[j].empty() || p.cell_rank[j][i] < 0)
                continue;
            const double u = user_utility(matching, i, j, scenario);
            if (u > p.macro_utils[i])
                ranked.emplace_back(u, j);
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first > b.first;
            return a.second < b.second;
        });
        for (const auto& [u, j] : ranked) {
            p.user_prefs[i].push_back(j);
            p.user_utils[i].push_back(u);
        }
    }
    return p;
}

Matching deferred_acceptance(const PreferenceProfile& prefs, const std::vector<int>& quotas,
                             int num_users, int num_cells, DaStats* stats) {
    for (int i = 0; i < num_users; ++i)
        for (int j : prefs.user_prefs[i])
            if (j < 1 || j >= num_cells || prefs.cell_rank[j].empty() || prefs.cell_rank[j][i] < 0)
                throw std::invalid_argument("deferred_acceptance: dangling preference entry");

    std::vector<std::size_t> next(num_users, 0);
    std::vector<int> held_by(num_users, -1);
    std::vector<std::vector<int>> waiting(num_cells);
    DaStats local;
    local.user_proposals.assign(num_users, 0);

    for (;;) {
        std::vector<std::vector<int>> applicants(num_cells);
        bool any = false;
        for (int i = 0; i < num_users; ++i) {
            if (held_by[i] != -1 || next[i] >= prefs.user_prefs[i].size())
                continue;
            const int j = prefs.user_prefs[i][next[i]++];
            applicants[j].push_back(i);
            local.proposals += 1;
            local.user_proposals[i] += 1;
            any = true;
        }
        if (!any)
            break;
        local.rounds += 1;

        for (int j = 1; j < num_cells; ++j) {
            if (applicants[j].empty())
                continue;
            std::vector<int> pool = waiting[j];
            pool.insert(pool.end(), applicants[j].begin(), applicants[j].end());
            std::sort(pool.begin(), pool.end(),
                      [&](int a, int b) { return prefs.cell_rank[j][a] < prefs.cell_rank[j][b]; });
            const std::size_t keep = std::min<std::size_t>(pool.size(), quotas[j]);
            for (std::size_t k = keep; k < pool.size(); ++k)
                held_by[pool[k]] = -1;
            pool.resize(keep);
            for (int u : pool)
                held_by[u] = j;
            waiting[j] = std::move(pool);
            if (static_cast<int>(waiting[j].size()) > quotas[j])
                throw std::logic_error("deferred_acceptance: quota exceeded mid-round");
        }
    }

    std::vector<int> assignment(num_users, 0);
    for (int i = 0; i < num_users; ++i)
        assignment[i] = held_by[i] == -1 ? 0 : held_by[i];
    if (stats)
        *stats = std::move(local);
    return Matching::from_user_cells(std::move(assignment), num_cells);
}

SolveResult solve(const Scenario& scenario, int max_outer) {
    const std::vector<int> quotas = cell_quotas(scenario);
    const int n = scenario.num_users();
    const int c = scenario.num_cells();

    SolveResult res;
    res.user_proposals.assign(n, 0);

    Matching current = Matching::all_macro(scenario);
    std::map<std::vector<int>, int> seen;
    std::vector<Matching> trajectory;
    seen.emplace(current.user_cell, 0);
    trajectory.push_back(current);

    for (int t = 1; t <= max_outer; ++t) {
        const PreferenceProfile prefs = build_preferences(current, scenario);
        DaStats stats;
        Matching next = deferred_acceptance(prefs, quotas, n, c, &stats);
        res.inner_rounds.push_back(stats.rounds);
        res.proposals_per_outer.push_back(stats.proposals);
        res.outer_iterations = t;

        if (next == current) {
            res.outcome = SolveOutcome::Converged;
            res.matching = std::move(next);
            return res;
        }
        // this run changed the matching, so its proposals count as work
        for (int i = 0; i < n; ++i)
            res.user_proposals[i] += stats.user_proposals[i];

        const auto it = seen.find(next.user_cell);
        if (it != seen.end()) {
            // revisited an earlier state with period > 1: report the best
            // matching of the cycle rather than an arbitrary member
            res.outcome = SolveOutcome::CycleDetected;
            int best = it->second;
            double best_value = mean_user_utility(trajectory[best], scenario);
            for (int k = it->second + 1; k < static_cast<int>(trajectory.size()); ++k) {
                const double v = mean_user_utility(trajectory[k], scenario);
                if (v > best_value) {
                    best_value = v;
                    best = k;
                }
            }
            res.matching = trajectory[best];
            return res;
        }
        seen.emplace(next.user_cell, t);
        trajectory.push_back(next);
        current = std::move(next);
    }
    res.outcome = SolveOutcome::IterationCapHit;
    res.matching = std::move(current);
    return res;
}

SolveResult solve(const Scenario& scenario) { return solve(scenario, scenario.config.max_outer); }

std::vector<BlockingPair> blocking_pairs(const Matching& matching, const PreferenceProfile& prefs,
                                         const std::vector<int>& quotas) {
    std::vector<BlockingPair> out;
    const int n = static_cast<int>(matching.user_cell.size());
    for (int i = 0; i < n; ++i) {
        const auto& list = prefs.user_prefs[i];
        const int current = matching.cell_of(i);
        std::size_t current_pos = list.size(); // macro (or an unlisted pico) ranks last
        for (std::size_t pos = 0; pos < list.size(); ++pos) {
            if (list[pos] == current) {
                current_pos = pos;
                break;
            }
        }
        for (std::size_t pos = 0; pos < current_pos; ++pos) {
            const int j = list[pos];
            bool blocks = matching.load(j) < quotas[j];
            if (!blocks) {
                const int my_rank = prefs.cell_rank[j][i];
                for (int held : matching.cell_users[j]) {
                    const int held_rank = prefs.cell_rank[j][held];
                    if (held_rank < 0 || my_rank < held_rank) {
                        blocks = true;
                        break;
                    }
                }
            }
            if (blocks)
                out.push_back({i, j});
        }
    }
    return out;
}

std::vector<BlockingPair> is_stable(const Matching& matching, const Scenario& scenario) {
    const PreferenceProfile prefs = build_preferences(matching, scenario);
    return blocking_pairs(matching, prefs, cell_quotas(scenario));
}

std::vector<Matching> brute_force_stable(const Scenario& scenario) {
    const int n = scenario.num_users();
    const int p = scenario.num_cells() - 1;
    int max_quota = 0;
    for (int j = 1; j < scenario.num_cells(); ++j)
        max_quota = std::max(max_quota, scenario.cells[j].quota);
    if (n > 8 || p > 3 || max_quota > 2)
        throw std::invalid_argument(
            "brute_force_stable: instance exceeds the size guard (users <= 8, picos <= 3, quotas <= 2)");

    const std::vector<int> quotas = cell_quotas(scenario);
    std::vector<Matching> stable;
    std::vector<int> assignment(n, 0);
    std::vector<int> load(scenario.num_cells(), 0);

    auto consider = [&]() {
        Matching m = Matching::from_user_cells(assignment, scenario.num_cells());
        const PreferenceProfile prefs = build_preferences(m, scenario);
        // individual rationality: a served user must find its pico admissible
        // and worth leaving the macro for
        for (int i = 0; i < n; ++i) {
            const int j = m.cell_of(i);
            if (j == 0)
                continue;
            const auto& list = prefs.user_prefs[i];
            if (std::find(list.begin(), list.end(), j) == list.end())
                return;
        }
        if (blocking_pairs(m, prefs, quotas).empty())
            stable.push_back(std::move(m));
    };

    auto recurse = [&](auto&& self, int user) -> void {
        if (user == n) {
            consider();
            return;
        }
        for (int j = 0; j < scenario.num_cells(); ++j) {
            if (j != 0 && load[j] >= quotas[j])
                continue;
            assignment[user] = j;
            load[j] += 1;
            self(self, user + 1);
            load[j] -= 1;
        }
        assignment[user] = 0;
    };
    recurse(recurse, 0);
    return stable;
}

double mean_user_utility(const Matching& matching, const Scenario& scenario) {
    const int n = scenario.num_users();
    if (n == 0)
        return 0.0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += user_utility(matching, i, matching.cell_of(i), scenario);
    return sum / n;
}

std::string serialize_matching_csv(const Matching& matching, const Scenario& scenario) {
    std::string out = "user_id,cell_id,utility\n";
    char buf[64];
    for (int i = 0; i < scenario.num_users(); ++i) {
        const double u = user_utility(matching, i, matching.cell_of(i), scenario);
        std::snprintf(buf, sizeof(buf), "%d,%d,%.17g\n", i, matching.cell_of(i), u);
        out += buf;
    }
    return out;
}

} // namespace scnsim
