// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/handover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scnsim {

void P2PGeometry::validate() const {
    if (r1 <= 0 || r1_exit <= r1)
        throw std::domain_error("p2p geometry: requires r1_exit > r1 > 0");
    if (r2_coverage <= 0 || r2_failure < 0 || r2_failure >= r2_coverage)
        throw std::domain_error("p2p geometry: requires 0 <= r2_failure < r2_coverage");
    if (center_distance < 0)
        throw std::domain_error("p2p geometry: center distance must be non-negative");
    if (prep_time <= 0)
        throw std::domain_error("p2p geometry: preparation time must be positive");
    if (v_min <= 0 || v_max < v_min)
        throw std::domain_error("p2p geometry: requires 0 < v_min <= v_max");
}

double hf_prob_m2p(double failure_radius, double coverage_radius) {
    if (coverage_radius <= 0 || failure_radius < 0 || failure_radius > coverage_radius)
        throw std::domain_error("hf_prob_m2p: requires 0 <= r <= R with R > 0");
    const double ratio = failure_radius / coverage_radius;
    return (2.0 / std::numbers::pi) * std::acos(std::sqrt(1.0 - ratio * ratio));
}

double reliability_ratio(double max_prob) {
    if (max_prob < 0 || max_prob > 1)
        throw std::domain_error("reliability_ratio: probability must lie in [0, 1]");
    return std::sin(std::numbers::pi * max_prob / 2.0);
}

bool p2p_feasible(const P2PGeometry& g) {
    g.validate();
    return g.r1 + g.r2_failure <= g.center_distance &&
           g.center_distance <= g.r1_exit + g.r2_coverage;
}

double hf_prob_p2p(const P2PGeometry& g) {
    g.validate();
    const double trigger_speed = (g.r1_exit - g.r1) / g.prep_time;
    double slow_enough;
    if (g.v_max == g.v_min)
        slow_enough = trigger_speed >= g.v_min ? 1.0 : 0.0;
    else
        slow_enough = std::clamp((trigger_speed - g.v_min) / (g.v_max - g.v_min), 0.0, 1.0);
    const double misses_failure_circle = 1.0 - hf_prob_m2p(g.r2_failure, g.r2_coverage);
    return std::clamp(1.0 - slow_enough * misses_failure_circle, 0.0, 1.0);
}

} // namespace scnsim
