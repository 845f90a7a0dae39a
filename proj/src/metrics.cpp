// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "scnsim/channel.hpp"
#include "scnsim/utility.hpp"

namespace scnsim {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_field(const std::string& s) {
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw std::runtime_error("metrics csv: malformed numeric field '" + s + "'");
    return x;
}

MetricsRecord base_metrics(const Scenario& scenario, const Matching& matching,
                           std::uint64_t seed) {
    MetricsRecord r;
    r.num_users = scenario.num_users();
    r.num_picocells = scenario.num_cells() - 1;
    r.seed = seed;

    const int n = scenario.num_users();
    int assigned_total = 0;
    for (const auto& users : matching.cell_users)
        assigned_total += static_cast<int>(users.size());
    if (assigned_total != n)
        throw std::runtime_error("metrics: matching does not cover every user exactly once");

    double rate_sum = 0.0, util_sum = 0.0;
    std::array<double, 3> class_sum{}, class_pico_sum{};
    std::array<int, 3> class_count{}, class_pico_count{};
    for (int i = 0; i < n; ++i) {
        const int j = matching.cell_of(i);
        const double rate = link_rate(scenario, i, j);
        const double util = user_utility(matching, i, j, scenario);
        rate_sum += rate;
        util_sum += util;
        const int k = static_cast<int>(scenario.users[i].device);
        class_sum[k] += util;
        class_count[k] += 1;
        if (scenario.cells[j].tier == Tier::Pico) {
            class_pico_sum[k] += util;
            class_pico_count[k] += 1;
            r.pico_assigned += 1;
        }
    }
    r.avg_rate_bps = n > 0 ? rate_sum / n : nan_value;
    r.avg_utility = n > 0 ? util_sum / n : nan_value;
    for (int k = 0; k < 3; ++k) {
        r.class_utility_all[k] = class_count[k] > 0 ? class_sum[k] / class_count[k] : nan_value;
        r.class_utility_pico[k] =
            class_pico_count[k] > 0 ? class_pico_sum[k] / class_pico_count[k] : nan_value;
    }

    const int picos = scenario.num_cells() - 1;
    if (picos > 0) {
        double scbs_sum = 0.0;
        for (int j = 1; j < scenario.num_cells(); ++j)
            for (int u : matching.cell_users[j])
                scbs_sum += scbs_utility(matching, j, u, scenario);
        r.avg_scbs_utility = scbs_sum / picos;
    } else {
        r.avg_scbs_utility = nan_value;
    }
    return r;
}

} // namespace

MetricsRecord collect_matching_metrics(const Scenario& scenario, const SolveResult& result,
                                       std::uint64_t seed) {
    MetricsRecord r = base_metrics(scenario, result.matching, seed);
    r.algorithm = "matching";
    r.outcome = outcome_name(result.outcome);
    r.outer_iterations = result.outer_iterations;
    const int n = scenario.num_users();
    if (n > 0) {
        // every user participates at least once per solve even when its list
        // is empty, so the per-user effort never drops below one
        double total = 0.0;
        for (long p : result.user_proposals)
            total += std::max<long>(1, p);
        r.iterations_per_user = total / n;
    }
    return r;
}

MetricsRecord collect_baseline_metrics(const Scenario& scenario, const Matching& matching,
                                       std::uint64_t seed) {
    MetricsRecord r = base_metrics(scenario, matching, seed);
    r.algorithm = "max_sinr";
    r.outcome = "-";
    r.outer_iterations = 1;
    r.iterations_per_user = scenario.num_users() > 0 ? 1.0 : 0.0;
    return r;
}

static const char* csv_header =
    "num_users,num_picocells,seed,algorithm,outcome,avg_rate_bps,avg_utility,"
    "util_laptop,util_tablet,util_smartphone,util_laptop_pico,util_tablet_pico,"
    "util_smartphone_pico,avg_scbs_utility,iterations_per_user,outer_iterations,pico_assigned";

std::string records_to_csv(const std::vector<MetricsRecord>& records) {
    std::string out = csv_header;
    out += '\n';
    for (const MetricsRecord& r : records) {
        out += std::to_string(r.num_users) + ',' + std::to_string(r.num_picocells) + ',' +
               std::to_string(r.seed) + ',' + r.algorithm + ',' + r.outcome + ',' +
               fmt(r.avg_rate_bps) + ',' + fmt(r.avg_utility);
        for (double v : r.class_utility_all)
            out += ',' + fmt(v);
        for (double v : r.class_utility_pico)
            out += ',' + fmt(v);
        out += ',' + fmt(r.avg_scbs_utility) + ',' + fmt(r.iterations_per_user) + ',' +
               std::to_string(r.outer_iterations) + ',' + std::to_string(r.pico_assigned) + '\n';
    }
    return out;
}

std::vector<MetricsRecord> records_from_csv(const std::string& csv) {
    std::stringstream lines(csv);
    std::string line;
    if (!std::getline(lines, line) || line != csv_header)
        throw std::runtime_error("metrics csv: missing or unexpected header");
    std::vector<MetricsRecord> out;
    while (std::getline(lines, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ','))
            f.push_back(field);
        if (f.size() != 17)
            throw std::runtime_error("metrics csv: expected 17 fields per row");
        MetricsRecord r;
        r.num_users = static_cast<int>(parse_field(f[0]));
        r.num_picocells = static_cast<int>(parse_field(f[1]));
        char* end = nullptr;
        r.seed = std::strtoull(f[2].c_str(), &end, 10);
        if (f[2].empty() || end != f[2].c_str() + f[2].size())
            throw std::runtime_error("metrics csv: malformed seed field '" + f[2] + "'");
        r.algorithm = f[3];
        r.outcome = f[4];
        r.avg_rate_bps = parse_field(f[5]);
        r.avg_utility = parse_field(f[6]);
        for (int k = 0; k < 3; ++k)
            r.class_utility_all[k] = parse_field(f[7 + k]);
        for (int k = 0; k < 3; ++k)
            r.class_utility_pico[k] = parse_field(f[10 + k]);
        r.avg_scbs_utility = parse_field(f[13]);
        r.iterations_per_user = parse_field(f[14]);
        r.outer_iterations = static_cast<int>(parse_field(f[15]));
        r.pico_assigned = static_cast<int>(parse_field(f[16]));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<GainRow> summarize_gain(const std::vector<MetricsRecord>& records) {
    struct Acc {
        double rate[2] = {0, 0}, util[2] = {0, 0}, scbs[2] = {0, 0};
        int count[2] = {0, 0};
    };
    std::map<std::pair<int, int>, Acc> grid;
    for (const MetricsRecord& r : records) {
        const int side = r.algorithm == "matching" ? 0 : 1;
        Acc& a = grid[{r.num_users, r.num_picocells}];
        a.rate[side] += r.avg_rate_bps;
        a.util[side] += r.avg_utility;
        a.scbs[side] += r.avg_scbs_utility;
        a.count[side] += 1;
    }
    std::vector<GainRow> out;
    for (const auto& [key, a] : grid) {
        if (a.count[0] == 0 || a.count[1] == 0)
            throw std::runtime_error("summarize_gain: grid point (num_users=" +
                                     std::to_string(key.first) + ", num_picocells=" +
                                     std::to_string(key.second) +
                                     ") lacks one of the algorithm runs");
        GainRow g;
        g.num_users = key.first;
        g.num_picocells = key.second;
        g.runs = a.count[0];
        auto rel = [](double m, double b) { return (m - b) / std::fabs(b); };
        g.rate_gain = rel(a.rate[0] / a.count[0], a.rate[1] / a.count[1]);
        g.utility_gain = rel(a.util[0] / a.count[0], a.util[1] / a.count[1]);
        g.scbs_utility_gain = rel(a.scbs[0] / a.count[0], a.scbs[1] / a.count[1]);
        out.push_back(g);
    }
    return out;
}

std::string gains_to_csv(const std::vector<GainRow>& gains) {
    std::string out = "num_users,num_picocells,runs,rate_gain,utility_gain,scbs_utility_gain\n";
    for (const GainRow& g : gains)
        out += std::to_string(g.num_users) + ',' + std::to_string(g.num_picocells) + ',' +
               std::to_string(g.runs) + ',' + fmt(g.rate_gain) + ',' + fmt(g.utility_gain) + ',' +
               fmt(g.scbs_utility_gain) + '\n';
    return out;
}

} // namespace scnsim
