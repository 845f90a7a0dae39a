// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_CONFIG_HPP
#define SCNSIM_CONFIG_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace scnsim {

/// Error raised for malformed keys or out-of-range values in a configuration;
/// the message names the offending field.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Per-device-class utility shape coefficients.
struct ShapeParams {
    double alpha = 1.0;  // surplus exponent
    double beta = 1.0;   // deficit exponent
    double lambda = 1.0; // deficit weight
};

enum class FadingModel { Exponential, NakagamiM2 };

/// Sign convention for the load term in the user utility. Cost charges free
/// capacity, -gamma*(q_j - m_j), so fuller cells score higher; Reward flips
/// the sign so users seek lightly loaded cells.
enum class LoadTermSign { Cost, Reward };

/// Simulation parameters. Values are stored in the units of the input file
/// (dBm, km/h, ms) and converted to SI where they are consumed.
struct Config {
    // deployment
    double macro_radius = 1000.0;       // m
    int num_picocells = 12;
    int num_users = 60;
    double pico_coverage_radius = 100.0; // m
    double hf_ratio = 0.08;              // handover-failure radius over coverage radius
    double exit_radius_factor = 1.2;     // exit radius over coverage radius, > 1

    // radio
    double pico_power = 30.0;    // dBm
    double macro_power = 46.0;   // dBm
    double bandwidth = 200e3;    // Hz
    double noise_power = -121.0; // dBm
    double min_sinr = 9.56;      // dB, baseline admission threshold
    double pathloss_exponent = 5.0;
    double pathloss_ref_gain = 1e-4; // linear gain at 1 m
    FadingModel fading = FadingModel::Exponential;

    // association game
    int quota = 4;
    double gamma = 1.0;          // load cost per free slot
    double rate_norm = 400e3;    // K, bps
    double hf_threshold = 0.051; // max admissible handover-failure probability
    LoadTermSign load_term_sign = LoadTermSign::Cost;
    double scbs_log_base = 0.0;  // 0 = natural log
    double prep_time = 2.0;      // s
    int max_outer = 1000;
    bool baseline_enforce_quota = true;

    // population
    std::array<double, 3> device_mix = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; // laptop, tablet, smartphone
    ShapeParams laptop_shape{2.0, 2.0, 2.0};
    ShapeParams tablet_shape{1.0, 1.0, 1.0};
    ShapeParams smartphone_shape{0.5, 0.5, 0.5};
    Interval tau_range{0.5, 5.0};    // ms
    Interval speed_range{20.0, 40.0}; // km/h

    // experiments
    int monte_carlo_runs = 100;
    std::uint64_t rng_seed = 1;

    /// Throws ConfigError naming the first violated field.
    void validate() const;
};

/// Parses flat key=value text ('#' starts a comment). Unknown keys and values
/// violating an invariant raise ConfigError. Absent keys keep their defaults.
Config parse_config(const std::string& text);

/// parse_config over the contents of a file.
Config load_config_file(const std::string& path);

} // namespace scnsim

#endif
