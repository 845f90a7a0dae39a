// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "scnsim/channel.hpp"

namespace scnsim {

Matching max_sinr_assignment(const Scenario& scenario) {
    const int n = scenario.num_users();
    const int c = scenario.num_cells();
    const double min_sinr_linear = std::pow(10.0, scenario.config.min_sinr / 10.0);

    // per user: admissible picos sorted by SINR, strongest first
    std::vector<std::vector<std::pair<double, int>>> options(n);
    std::vector<double> best(n, -1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j < c; ++j) {
            if (scenario.distance(i, j) > scenario.cells[j].coverage_radius)
                continue;
            const double s = sinr(scenario, i, j);
            if (s < min_sinr_linear)
                continue;
            options[i].emplace_back(s, j);
        }
        std::sort(options[i].begin(), options[i].end(), [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first > b.first;
            return a.second < b.second;
        });
        if (!options[i].empty())
            best[i] = options[i].front().first;
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (best[a] != best[b])
            return best[a] > best[b];
        return a < b;
    });

    std::vector<int> assignment(n, 0);
    std::vector<int> load(c, 0);
    const bool enforce_quota = scenario.config.baseline_enforce_quota;
    for (int i : order) {
        for (const auto& [s, j] : options[i]) {
            if (enforce_quota && load[j] >= scenario.cells[j].quota)
                continue;
            assignment[i] = j;
            load[j] += 1;
            break;
        }
    }
    return Matching::from_user_cells(std::move(assignment), c);
}

} // namespace scnsim
