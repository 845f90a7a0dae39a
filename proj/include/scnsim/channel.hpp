// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_CHANNEL_HPP
#define SCNSIM_CHANNEL_HPP

#include <utility>
#include <vector>

#include "scnsim/config.hpp"
#include "scnsim/rng.hpp"

namespace scnsim {

struct Scenario;

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// One downlink budget: serving transmitter, its linear gain to the user,
/// noise, and the set of interfering (power dBm, gain) pairs.
struct LinkBudget {
    double tx_power_dbm = 0.0;
    double gain = 0.0; // linear, >= 0
    double noise_dbm = 0.0;
    std::vector<std::pair<double, double>> interferers; // (power dBm, linear gain)

    double sinr() const; // linear ratio
};

/// Distance power law ref_gain * d^-exponent. Distances below 1 m are clamped
/// to 1 m so co-located endpoints stay finite.
double path_gain(double distance_m, double exponent, double ref_gain);

/// Unit-mean multipath power gain draw.
double sample_fading(Rng& rng, FadingModel model);

/// SINR of user i served by cell j under the scenario's gains; every other
/// cell of either tier interferes.
double sinr(const Scenario& scenario, int user, int cell);

/// Shannon rate W log2(1 + sinr) in bps.
double shannon_rate(double sinr_linear, double bandwidth_hz);

/// Convenience: shannon_rate of sinr(scenario, user, cell).
double link_rate(const Scenario& scenario, int user, int cell);

} // namespace scnsim

#endif
