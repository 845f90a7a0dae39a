// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any criterion fails. Experiment criteria (5-10)
// run the offload-seeking (reward) load-term variant; the solver-dynamics
// criteria (5, 6, 8) additionally use the dense deployment profile
// (pico_coverage_radius = 300 m) so cells overlap and quotas contend.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "scnsim/baseline.hpp"
#include "scnsim/geometry.hpp"
#include "scnsim/handover.hpp"
#include "scnsim/harness.hpp"
#include "support/frozen_oracle.hpp"
#include "support/quadrature.hpp"

using namespace scnsim;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass)
        ++failures;
}

Config experiment_config() {
    Config cfg;
    cfg.load_term_sign = LoadTermSign::Reward;
    return cfg;
}

Config dense_config() {
    Config cfg = experiment_config();
    cfg.pico_coverage_radius = 300.0;
    return cfg;
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

// criterion 1: the chord-length density integrates to one
void criterion_pdf_normalization() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    double worst = 0.0;
    for (double radius : {1.0, 100.0, 1000.0}) {
        const double upper = 2.0 * radius * (1.0 - 1e-14);
        const double integral = testing::adaptive_simpson(
            [radius](double d) { return chord_pdf(d, radius); }, 0.0, upper);
        worst = std::max(worst, std::fabs(integral - 1.0));
        pass = pass && std::fabs(integral - 1.0) <= 1e-6;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pass = pass && secs < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "chord pdf normalization, worst |integral-1| = %.2e (%.2fs)", worst, secs);
    report(1, pass, buf);
}

// criterion 2: closed-form failure probability against sampled crossings
void criterion_mc_handover() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    double worst_sigma = 0.0;
    const int samples = 1000000;
    Rng rng(424242);
    for (double ratio : {0.05, 0.08, 0.3, 0.5}) {
        const double p = hf_prob_m2p(ratio, 1.0);
        const double threshold = 2.0 * std::sqrt(1.0 - ratio * ratio);
        int failures_mc = 0;
        for (int k = 0; k < samples; ++k) {
            const double theta = rng.uniform(-pi / 2.0, pi / 2.0);
            if (2.0 * std::cos(theta) >= threshold)
                ++failures_mc;
        }
        const double sigma = std::sqrt(p * (1.0 - p) / samples);
        const double deviation =
            std::fabs(static_cast<double>(failures_mc) / samples - p) / sigma;
        worst_sigma = std::max(worst_sigma, deviation);
        pass = pass && deviation <= 3.0;
    }
    const bool exact_third = std::fabs(hf_prob_m2p(0.5, 1.0) - 1.0 / 3.0) <= 1e-12;
    pass = pass && exact_third;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pass = pass && secs < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "sampled handover failures within %.2f sigma; value at ratio 0.5 %s 1/3 (%.2fs)",
                  worst_sigma, exact_third ? "==" : "!=", secs);
    report(2, pass, buf);
}

// criterion 3: worked reliability number
void criterion_reliability() {
    const double r = reliability_ratio(0.05);
    const bool pass = r >= 0.075 && r <= 0.085;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "reliability_ratio(0.05) = %.6f in [0.075, 0.085]", r);
    report(3, pass, buf);
}

// criterion 4: deferred acceptance against the enumeration oracle
void criterion_da_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240817);
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const testing::FrozenInstance inst = testing::random_frozen_instance(rng);
        const Matching result =
            deferred_acceptance(inst.profile, inst.quotas, inst.num_users, inst.num_cells);
        const auto stable = testing::frozen_stable_set(inst);
        if (std::find(stable.begin(), stable.end(), result.user_cell) == stable.end()) {
            ++violations;
            continue;
        }
        for (const auto& other : stable)
            for (int i = 0; i < inst.num_users; ++i)
                if (testing::user_rank(inst, i, result.user_cell[i]) >
                    testing::user_rank(inst, i, other[i])) {
                    ++violations;
                    i = inst.num_users;
                    break;
                }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "deferred acceptance stable and proposer-optimal on 100 instances, "
                  "%d violations (%.2fs)",
                  violations, secs);
    report(4, violations == 0 && secs < 30.0, buf);
}

// criteria 5 and 6: stability of converged solves, convergence prevalence
void criteria_stability_and_convergence() {
    const auto t0 = std::chrono::steady_clock::now();
    Config cfg = dense_config();
    cfg.num_users = 20;
    cfg.num_picocells = 8;
    int converged = 0, cycles = 0, caps = 0, unstable = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : converged, cycles, caps, unstable)
    for (int seed = 1; seed <= 200; ++seed) {
        const Scenario s = generate_scenario(cfg, static_cast<std::uint64_t>(seed));
        const SolveResult r = solve(s, 1000);
        if (r.outcome == SolveOutcome::Converged) {
            ++converged;
            if (!is_stable(r.matching, s).empty())
                ++unstable;
        } else if (r.outcome == SolveOutcome::CycleDetected) {
            ++cycles;
        } else {
            ++caps;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "all %d converged solves stable (%d unstable) over 200 scenarios (%.2fs)",
                  converged, unstable, secs);
    report(5, unstable == 0 && converged > 0 && secs < 120.0, buf);

    const double settled = (converged + cycles) / 200.0;
    std::snprintf(buf, sizeof(buf),
                  "outcomes: %d converged, %d cycles, %d cap hits -> %.1f%% settled",
                  converged, cycles, caps, 100.0 * settled);
    report(6, settled >= 0.99, buf);
}

struct GridStats {
    std::map<int, std::vector<double>> matching_rate, baseline_rate;
    std::map<int, std::vector<double>> matching_util, baseline_util;
    std::map<int, std::vector<double>> laptop_pico, smartphone_pico;
    std::map<int, std::vector<double>> iters;
};

GridStats collect(const std::vector<MetricsRecord>& records, bool key_by_users) {
    GridStats g;
    for (const MetricsRecord& r : records) {
        const int key = key_by_users ? r.num_users : r.num_picocells;
        if (r.algorithm == "matching") {
            g.matching_rate[key].push_back(r.avg_rate_bps);
            g.matching_util[key].push_back(r.avg_utility);
            g.iters[key].push_back(r.iterations_per_user);
            if (std::isfinite(r.class_utility_pico[0]))
                g.laptop_pico[key].push_back(r.class_utility_pico[0]);
            if (std::isfinite(r.class_utility_pico[2]))
                g.smartphone_pico[key].push_back(r.class_utility_pico[2]);
        } else {
            g.baseline_rate[key].push_back(r.avg_rate_bps);
            g.baseline_util[key].push_back(r.avg_utility);
        }
    }
    return g;
}

// criterion 7: the context-aware matching beats max-SINR on rate and utility
void criterion_directional_gain() {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepSpec sweep{{60}, {12, 18, 24, 30, 36}};
    const auto records = run_experiment(experiment_config(), sweep, 200);
    const GridStats g = collect(records, false);
    bool pass = true;
    std::string detail = "matching vs max-SINR (utility gain, rate gain):";
    for (int p : sweep.num_picocells) {
        const double mu = mean(g.matching_util.at(p)), bu = mean(g.baseline_util.at(p));
        const double mr = mean(g.matching_rate.at(p)), br = mean(g.baseline_rate.at(p));
        pass = pass && mu > bu && mr > br;
        char buf[80];
        std::snprintf(buf, sizeof(buf), " P=%d(%+.2f,%+.1f%%)", p, mu - bu,
                      100.0 * (mr - br) / br);
        detail += buf;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.1fs)", secs);
    detail += buf;
    report(7, pass && secs < 600.0, detail);
}

// criterion 8: solve effort per user grows with the population
void criterion_iteration_trend() {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepSpec sweep{{3, 20, 40, 60, 80}, {15}};
    const auto records =
        run_experiment(dense_config(), sweep, 200, AlgorithmSelection::MatchingOnly);
    const GridStats g = collect(records, true);
    bool pass = true;
    double prev = 0.0;
    std::string detail = "iterations per user:";
    for (int n : sweep.num_users) {
        const double m = mean(g.iters.at(n));
        pass = pass && m >= prev && m >= 1.0 && m <= 15.0;
        prev = m;
        char buf[48];
        std::snprintf(buf, sizeof(buf), " N=%d:%.3f", n, m);
        detail += buf;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.1fs)", secs);
    detail += buf;
    report(8, pass && secs < 600.0, detail);
}

// criterion 9: device-class crossover between the high- and low-rate regimes
void criterion_class_crossover() {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepSpec sweep{{60}, {4, 12, 20, 28, 36}};
    const auto records =
        run_experiment(experiment_config(), sweep, 200, AlgorithmSelection::MatchingOnly);
    const GridStats g = collect(records, false);
    const int small_p = sweep.num_picocells.front();
    const int large_p = sweep.num_picocells.back();
    const double lap_small = mean(g.laptop_pico.at(small_p));
    const double sp_small = mean(g.smartphone_pico.at(small_p));
    const double lap_large = mean(g.laptop_pico.at(large_p));
    const double sp_large = mean(g.smartphone_pico.at(large_p));
    const bool pass = lap_small >= sp_small && sp_large >= lap_large;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "pico-served utility, laptop vs smartphone: P=%d %.2f vs %.2f, P=%d %.2f vs "
                  "%.2f (%.1fs)",
                  small_p, lap_small, sp_small, large_p, lap_large, sp_large, secs);
    report(9, pass && secs < 600.0, buf);
}

// criterion 10: repeated experiments serialize byte-identically
void criterion_determinism() {
    const SweepSpec sweep{{20}, {8, 12}};
    const auto a = run_experiment(experiment_config(), sweep, 5, AlgorithmSelection::Both,
                                  ExecutionMode::Parallel);
    const auto b = run_experiment(experiment_config(), sweep, 5, AlgorithmSelection::Both,
                                  ExecutionMode::Parallel);
    const auto c = run_experiment(experiment_config(), sweep, 5, AlgorithmSelection::Both,
                                  ExecutionMode::Serial);
    const bool pass =
        records_to_csv(a) == records_to_csv(b) && records_to_csv(a) == records_to_csv(c);
    report(10, pass, pass ? "repeated and serial/parallel experiment CSVs byte-identical"
                          : "experiment CSVs differ between runs");
}

} // namespace

int main() {
    std::printf("acceptance suite (experiment criteria use the reward load-term variant)\n");
    criterion_pdf_normalization();
    criterion_mc_handover();
    criterion_reliability();
    criterion_da_oracle();
    criteria_stability_and_convergence();
    criterion_directional_gain();
    criterion_iteration_trend();
    criterion_class_crossover();
    criterion_determinism();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
