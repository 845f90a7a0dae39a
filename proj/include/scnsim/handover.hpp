// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_HANDOVER_HPP
#define SCNSIM_HANDOVER_HPP

namespace scnsim {

/// Geometry of a pico-to-pico handover: source cell coverage radius R1 and
/// exit radius r1_exit > R1, destination cell coverage radius R2 and
/// failure radius r2 < R2, center distance, preparation time, speed bounds.
struct P2PGeometry {
    double r1 = 0.0;          // m, source coverage radius
    double r1_exit = 0.0;     // m, must exceed r1
    double r2_coverage = 0.0; // m, destination coverage radius
    double r2_failure = 0.0;  // m, destination failure radius, < r2_coverage
    double center_distance = 0.0; // m
    double prep_time = 0.0;       // s
    double v_min = 0.0;           // m/s
    double v_max = 0.0;           // m/s

    void validate() const; // throws std::domain_error on a violated bound
};

/// Probability that a macro-to-pico handover fails: the chance a uniformly
/// angled crossing of a cell with coverage radius R intersects the inner
/// failure circle of radius r, (2/pi) acos(sqrt(1 - (r/R)^2)).
double hf_prob_m2p(double failure_radius, double coverage_radius);

/// Inverse of hf_prob_m2p in the ratio r/R: the largest ratio whose failure
/// probability does not exceed max_prob, sin(pi * max_prob / 2).
double reliability_ratio(double max_prob);

/// Whether the two cells are close enough, and far enough apart, for a
/// handover to complete between the source exit radius and the destination
/// failure radius: R1 + r2 <= OO' <= r1_exit + R2 (both ends inclusive).
bool p2p_feasible(const P2PGeometry& g);

/// Probability that a pico-to-pico handover fails. The success probability is
/// the product of the chance the user is slow enough for the handover to
/// trigger before leaving the source exit radius and the chance its path
/// misses the destination failure circle; the speed factor is clamped to
/// [0, 1] (the point-mass limit applies when v_min == v_max).
double hf_prob_p2p(const P2PGeometry& g);

} // namespace scnsim

#endif
