// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_UTILITY_HPP
#define SCNSIM_UTILITY_HPP

#include "scnsim/scenario.hpp"

namespace scnsim {

struct Matching;

/// Delivery-time quality factor 1 / (1 + e^(t - tau)); t and tau share the
/// same unit (ms here). Strictly decreasing in t, 0.5 at t == tau.
double qos_decay(double t, double tau);

/// Context-aware value user i assigns to being served by cell j under the
/// current matching. The rate term rewards surplus over the device target
/// rate with exponent alpha and penalizes deficit with weight lambda and
/// exponent beta, both normalized by K. Picocell evaluations add the load
/// term on the cell's free capacity (sign per config); the occupancy m_j
/// excludes user i itself. The macro cell is the fallback option and carries
/// the rate term only.
double user_utility(const Matching& matching, int user, int cell, const Scenario& scenario);

/// Value cell j assigns to admitting user i: dwell incentive cos(theta)/V,
/// times the offload bracket 1 + log(max(1, m_origin)/q_origin) on the load
/// of the user's current serving cell, times the urgency factor 1/tau. The
/// macro quota is taken as the user count, so arrivals from a drained macro
/// carry little offload value.
double scbs_utility(const Matching& matching, int cell, int user, const Scenario& scenario);

} // namespace scnsim

#endif
