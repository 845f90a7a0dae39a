// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/utility.hpp"

#include <algorithm>
#include <cmath>

#include "scnsim/channel.hpp"
#include "scnsim/matching.hpp"

namespace scnsim {

double qos_decay(double t, double tau) {
    if (tau <= 0)
        throw std::domain_error("qos_decay: tau must be positive");
    return 1.0 / (1.0 + std::exp(t - tau));
}

double user_utility(const Matching& matching, int user, int cell, const Scenario& scenario) {
    const Config& cfg = scenario.config;
    const UserEquipment& ue = scenario.users[user];

    const double rate = link_rate(scenario, user, cell);
    double rate_term;
    if (rate >= ue.target_rate)
        rate_term = std::pow((rate - ue.target_rate) / cfg.rate_norm, ue.shape.alpha);
    else
        rate_term = -ue.shape.lambda *
                    std::pow((ue.target_rate - rate) / cfg.rate_norm, ue.shape.beta);

    if (scenario.cells[cell].tier == Tier::Macro)
        return rate_term; // fallback option: capacity is never binding

    // occupancy as the user would find it, i.e. without counting itself
    int occupancy = matching.load(cell);
    if (matching.cell_of(user) == cell)
        occupancy -= 1;
    const double free_slots = scenario.cells[cell].quota - occupancy;
    const double load_term = cfg.gamma * free_slots;
    return cfg.load_term_sign == LoadTermSign::Cost ? rate_term - load_term
                                                       : rate_term + load_term;
}

double scbs_utility(const Matching& matching, int cell, int user, const Scenario& scenario) {
    const Config& cfg = scenario.config;
    const UserEquipment& ue = scenario.users[user];

    const int origin = matching.cell_of(user);
    const double origin_load = std::max(1, matching.load(origin));
    const double origin_quota = scenario.cells[origin].quota; // macro quota == user count
    double log_ratio = std::log(origin_load / origin_quota);
    if (cfg.scbs_log_base > 0)
        log_ratio /= std::log(cfg.scbs_log_base);
    const double bracket = 1.0 + log_ratio;

    const double dwell = std::cos(scenario.theta(user, cell)) / ue.speed;
    return dwell * bracket / ue.tau;
}

} // namespace scnsim
