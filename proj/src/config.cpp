// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace scnsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x))
        throw ConfigError("config: field '" + key + "' has malformed numeric value '" + v + "'");
    return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& value, std::size_t n) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_number(key, item));
    if (out.size() != n)
        throw ConfigError("config: field '" + key + "' expects " + std::to_string(n) +
                          " comma-separated values");
    return out;
}

int parse_count(const std::string& key, const std::string& value) {
    const double x = parse_number(key, value);
    if (x < 0 || x != std::floor(x))
        throw ConfigError("config: field '" + key + "' must be a non-negative integer");
    return static_cast<int>(x);
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (v.empty() || v[0] == '-' || end != v.c_str() + v.size())
        throw ConfigError("config: field '" + key + "' must be an unsigned integer");
    return x;
}

} // namespace

void Config::validate() const {
    if (macro_radius <= 0)
        throw ConfigError("config: field 'macro_radius' must be positive");
    if (num_picocells < 0)
        throw ConfigError("config: field 'num_picocells' must be >= 0");
    if (num_users < 0)
        throw ConfigError("config: field 'num_users' must be >= 0");
    if (bandwidth <= 0)
        throw ConfigError("config: field 'bandwidth' must be positive");
    if (quota < 1)
        throw ConfigError("config: field 'quota' must be >= 1");
    if (tau_range.lo <= 0 || tau_range.hi < tau_range.lo)
        throw ConfigError("config: field 'tau_range' must be a positive interval lo <= hi");
    if (speed_range.lo <= 0 || speed_range.hi < speed_range.lo)
        throw ConfigError("config: field 'speed_range' must be a positive interval lo <= hi");
    if (pico_coverage_radius <= 0 || pico_coverage_radius > macro_radius)
        throw ConfigError("config: field 'pico_coverage_radius' must lie in (0, macro_radius]");
    if (hf_ratio <= 0 || hf_ratio >= 1)
        throw ConfigError("config: field 'hf_ratio' must lie in (0, 1)");
    if (exit_radius_factor <= 1)
        throw ConfigError("config: field 'exit_radius_factor' must exceed 1");
    if (hf_threshold < 0 || hf_threshold > 1)
        throw ConfigError("config: field 'hf_threshold' must lie in [0, 1]");
    if (pathloss_exponent <= 0)
        throw ConfigError("config: field 'pathloss_exponent' must be positive");
    if (pathloss_ref_gain <= 0)
        throw ConfigError("config: field 'pathloss_ref_gain' must be positive");
    if (rate_norm <= 0)
        throw ConfigError("config: field 'K' must be positive");
    if (prep_time < 0)
        throw ConfigError("config: field 'prep_time' must be >= 0");
    if (max_outer < 1)
        throw ConfigError("config: field 'max_outer' must be >= 1");
    if (monte_carlo_runs < 0)
        throw ConfigError("config: field 'monte_carlo_runs' must be >= 0");
    double mix_sum = 0;
    for (double m : device_mix) {
        if (m < 0)
            throw ConfigError("config: field 'device_mix' proportions must be >= 0");
        mix_sum += m;
    }
    if (std::fabs(mix_sum - 1.0) > 1e-9)
        throw ConfigError("config: field 'device_mix' proportions must sum to 1");
    for (const ShapeParams* s : {&laptop_shape, &tablet_shape, &smartphone_shape})
        if (s->alpha <= 0 || s->beta <= 0 || s->lambda <= 0)
            throw ConfigError("config: shape parameters alpha, beta, lambda must be positive");
    if (scbs_log_base < 0 || scbs_log_base == 1.0)
        throw ConfigError("config: field 'scbs_log_base' must be 0 (natural) or a valid log base");
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: malformed line '" + line + "' (expected key=value)");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "macro_radius") {
            cfg.macro_radius = parse_number(key, value);
        } else if (key == "num_picocells") {
            cfg.num_picocells = parse_count(key, value);
        } else if (key == "num_users") {
            cfg.num_users = parse_count(key, value);
        } else if (key == "pico_power") {
            cfg.pico_power = parse_number(key, value);
        } else if (key == "macro_power") {
            cfg.macro_power = parse_number(key, value);
        } else if (key == "bandwidth") {
            cfg.bandwidth = parse_number(key, value);
        } else if (key == "quota") {
            cfg.quota = parse_count(key, value);
        } else if (key == "noise_power") {
            cfg.noise_power = parse_number(key, value);
        } else if (key == "min_sinr") {
            cfg.min_sinr = parse_number(key, value);
        } else if (key == "tau_range") {
            const auto v = parse_list(key, value, 2);
            cfg.tau_range = {v[0], v[1]};
        } else if (key == "speed_range") {
            const auto v = parse_list(key, value, 2);
            cfg.speed_range = {v[0], v[1]};
        } else if (key == "gamma") {
            cfg.gamma = parse_number(key, value);
        } else if (key == "K") {
            cfg.rate_norm = parse_number(key, value);
        } else if (key == "device_mix") {
            const auto v = parse_list(key, value, 3);
            cfg.device_mix = {v[0], v[1], v[2]};
        } else if (key == "prep_time") {
            cfg.prep_time = parse_number(key, value);
        } else if (key == "pathloss_exponent") {
            cfg.pathloss_exponent = parse_number(key, value);
        } else if (key == "pathloss_ref_gain") {
            cfg.pathloss_ref_gain = parse_number(key, value);
        } else if (key == "monte_carlo_runs") {
            cfg.monte_carlo_runs = parse_count(key, value);
        } else if (key == "rng_seed") {
            cfg.rng_seed = parse_seed(key, value);
        } else if (key == "pico_coverage_radius") {
            cfg.pico_coverage_radius = parse_number(key, value);
        } else if (key == "hf_ratio") {
            cfg.hf_ratio = parse_number(key, value);
        } else if (key == "exit_radius_factor") {
            cfg.exit_radius_factor = parse_number(key, value);
        } else if (key == "hf_threshold") {
            cfg.hf_threshold = parse_number(key, value);
        } else if (key == "load_term_sign") {
            if (value == "cost")
                cfg.load_term_sign = LoadTermSign::Cost;
            else if (value == "reward")
                cfg.load_term_sign = LoadTermSign::Reward;
            else
                throw ConfigError("config: field 'load_term_sign' must be 'cost' or 'reward'");
        } else if (key == "fading") {
            if (value == "exponential")
                cfg.fading = FadingModel::Exponential;
            else if (value == "nakagami2")
                cfg.fading = FadingModel::NakagamiM2;
            else
                throw ConfigError("config: field 'fading' must be 'exponential' or 'nakagami2'");
        } else if (key == "scbs_log_base") {
            cfg.scbs_log_base = parse_number(key, value);
        } else if (key == "max_outer") {
            cfg.max_outer = parse_count(key, value);
        } else if (key == "baseline_enforce_quota") {
            cfg.baseline_enforce_quota = parse_number(key, value) != 0.0;
        } else if (key == "laptop_shape" || key == "tablet_shape" || key == "smartphone_shape") {
            const auto v = parse_list(key, value, 3);
            ShapeParams s{v[0], v[1], v[2]};
            if (key == "laptop_shape")
                cfg.laptop_shape = s;
            else if (key == "tablet_shape")
                cfg.tablet_shape = s;
            else
                cfg.smartphone_shape = s;
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace scnsim
