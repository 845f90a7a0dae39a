// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks
//
// Command line front end. Subcommands:
//   sweep     run a seeded Monte Carlo experiment grid and emit metrics CSV
//   scenario  generate one network realization and emit its CSV snapshot
//   solve     solve one realization and emit the resulting association

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scnsim/baseline.hpp"
#include "scnsim/harness.hpp"
#include "scnsim/matching.hpp"

namespace {

scnsim::Config make_config(const std::string& config_path, double hf_threshold,
                           const std::string& load_sign, std::int64_t seed) {
    scnsim::Config cfg;
    if (!config_path.empty())
        cfg = scnsim::load_config_file(config_path);
    if (hf_threshold >= 0)
        cfg.hf_threshold = hf_threshold;
    if (load_sign == "cost")
        cfg.load_term_sign = scnsim::LoadTermSign::Cost;
    else if (load_sign == "reward")
        cfg.load_term_sign = scnsim::LoadTermSign::Reward;
    else if (!load_sign.empty())
        throw scnsim::ConfigError("--offload-sign must be 'cost' or 'reward'");
    if (seed >= 0)
        cfg.rng_seed = static_cast<std::uint64_t>(seed);
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-tier small cell association simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string load_sign;
    double hf_threshold = -1.0;
    std::int64_t seed = -1;
    app.add_option("--config", config_path, "key=value configuration file")->capture_default_str();
    app.add_option("--hf-threshold", hf_threshold,
                   "override the admissible handover-failure probability");
    app.add_option("--offload-sign", load_sign,
                   "load term sign in the user utility: cost or reward");
    app.add_option("--seed", seed, "override the base RNG seed");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run a Monte Carlo experiment grid");
    std::vector<int> n_list{60};
    std::vector<int> p_list{12};
    int runs = -1;
    std::string algorithm = "both";
    std::string out_path = "records.csv";
    std::string gains_path;
    bool serial = false;
    sweep_cmd->add_option("--n-users", n_list, "user counts to sweep")->delimiter(',');
    sweep_cmd->add_option("--picos", p_list, "picocell counts to sweep")->delimiter(',');
    sweep_cmd->add_option("--runs", runs, "seeded runs per grid point (default from config)");
    sweep_cmd->add_option("--algorithm", algorithm, "matching, max-sinr or both")
        ->check(CLI::IsMember({"matching", "max-sinr", "both"}));
    sweep_cmd->add_option("--out", out_path, "metrics CSV destination")->capture_default_str();
    sweep_cmd->add_option("--gains", gains_path, "also write per-grid-point gains CSV");
    sweep_cmd->add_flag("--serial", serial, "disable the parallel runner");

    // scenario
    auto* scenario_cmd = app.add_subcommand("scenario", "emit one network realization as CSV");
    int scenario_n = -1, scenario_p = -1;
    std::string scenario_out = "scenario.csv";
    scenario_cmd->add_option("--n-users", scenario_n, "override the configured user count");
    scenario_cmd->add_option("--picos", scenario_p, "override the configured picocell count");
    scenario_cmd->add_option("--out", scenario_out, "destination path")->capture_default_str();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve one realization");
    int solve_n = -1, solve_p = -1;
    std::string solve_out;
    std::string solve_algorithm = "matching";
    solve_cmd->add_option("--n-users", solve_n, "override the configured user count");
    solve_cmd->add_option("--picos", solve_p, "override the configured picocell count");
    solve_cmd->add_option("--algorithm", solve_algorithm, "matching or max-sinr")
        ->check(CLI::IsMember({"matching", "max-sinr"}));
    solve_cmd->add_option("--out", solve_out, "write the association CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        scnsim::Config cfg = make_config(config_path, hf_threshold, load_sign, seed);

        if (sweep_cmd->parsed()) {
            scnsim::SweepSpec sweep{n_list, p_list};
            scnsim::AlgorithmSelection sel = scnsim::AlgorithmSelection::Both;
            if (algorithm == "matching")
                sel = scnsim::AlgorithmSelection::MatchingOnly;
            else if (algorithm == "max-sinr")
                sel = scnsim::AlgorithmSelection::MaxSinrOnly;
            const int n_runs = runs >= 0 ? runs : cfg.monte_carlo_runs;
            const auto mode = serial ? scnsim::ExecutionMode::Serial
                                     : scnsim::ExecutionMode::Parallel;
            const auto records = scnsim::run_experiment(cfg, sweep, n_runs, sel, mode);
            scnsim::emit_csv(records, out_path);
            std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
            if (!gains_path.empty()) {
                scnsim::write_file(gains_path,
                                   scnsim::gains_to_csv(scnsim::summarize_gain(records)));
                std::cout << "wrote gains to " << gains_path << "\n";
            }
        } else if (scenario_cmd->parsed()) {
            if (scenario_n >= 0)
                cfg.num_users = scenario_n;
            if (scenario_p >= 0)
                cfg.num_picocells = scenario_p;
            const auto scenario = scnsim::generate_scenario(cfg, cfg.rng_seed);
            scnsim::write_file(scenario_out, scnsim::serialize_scenario_csv(scenario));
            std::cout << "wrote scenario (" << scenario.num_users() << " users, "
                      << scenario.num_cells() - 1 << " picos) to " << scenario_out << "\n";
        } else if (solve_cmd->parsed()) {
            if (solve_n >= 0)
                cfg.num_users = solve_n;
            if (solve_p >= 0)
                cfg.num_picocells = solve_p;
            const auto scenario = scnsim::generate_scenario(cfg, cfg.rng_seed);
            scnsim::Matching matching;
            if (solve_algorithm == "matching") {
                const auto result = scnsim::solve(scenario);
                matching = result.matching;
                std::cout << "outcome=" << scnsim::outcome_name(result.outcome)
                          << " outer_iterations=" << result.outer_iterations
                          << " mean_user_utility="
                          << scnsim::mean_user_utility(matching, scenario) << "\n";
            } else {
                matching = scnsim::max_sinr_assignment(scenario);
                std::cout << "mean_user_utility="
                          << scnsim::mean_user_utility(matching, scenario) << "\n";
            }
            int offloaded = 0;
            for (int i = 0; i < scenario.num_users(); ++i)
                if (matching.cell_of(i) != 0)
                    ++offloaded;
            std::cout << "pico_assigned=" << offloaded << "/" << scenario.num_users() << "\n";
            if (!solve_out.empty())
                scnsim::write_file(solve_out, scnsim::serialize_matching_csv(matching, scenario));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
