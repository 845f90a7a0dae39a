// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/channel.hpp"

#include <cmath>

#include "scnsim/scenario.hpp"

namespace scnsim {

double path_gain(double distance_m, double exponent, double ref_gain) {
    const double d = distance_m < 1.0 ? 1.0 : distance_m;
    return ref_gain * std::pow(d, -exponent);
}

double sample_fading(Rng& rng, FadingModel model) {
    switch (model) {
    case FadingModel::Exponential:
        return rng.exponential();
    case FadingModel::NakagamiM2:
        // Gamma(2, 1/2): unit-mean power gain with reduced variance.
        return 0.5 * (rng.exponential() + rng.exponential());
    }
    return 1.0;
}

double LinkBudget::sinr() const {
    double interference = 0.0;
    for (const auto& [power_dbm, g] : interferers)
        interference += dbm_to_mw(power_dbm) * g;
    return dbm_to_mw(tx_power_dbm) * gain / (interference + dbm_to_mw(noise_dbm));
}

double sinr(const Scenario& scenario, int user, int cell) {
    LinkBudget budget;
    budget.tx_power_dbm = scenario.cells[cell].power_dbm;
    budget.gain = scenario.gain(user, cell);
    budget.noise_dbm = scenario.config.noise_power;
    budget.interferers.reserve(scenario.cells.size() - 1);
    for (int k = 0; k < scenario.num_cells(); ++k)
        if (k != cell)
            budget.interferers.emplace_back(scenario.cells[k].power_dbm, scenario.gain(user, k));
    return budget.sinr();
}

double shannon_rate(double sinr_linear, double bandwidth_hz) {
    return bandwidth_hz * std::log2(1.0 + sinr_linear);
}

double link_rate(const Scenario& scenario, int user, int cell) {
    return shannon_rate(sinr(scenario, user, cell), scenario.config.bandwidth);
}

} // namespace scnsim
