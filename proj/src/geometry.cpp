// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scnsim {

double chord_length(double radius, double theta) {
    if (radius <= 0)
        throw std::domain_error("chord_length: radius must be positive");
    if (!(std::fabs(theta) < std::numbers::pi / 2))
        throw std::domain_error("chord_length: |theta| must be < pi/2");
    return 2.0 * radius * std::cos(theta);
}

double interaction_time(double radius, double theta, double speed) {
    if (speed <= 0)
        throw std::domain_error("interaction_time: speed must be positive");
    return chord_length(radius, theta) / speed;
}

double chord_pdf(double d, double radius) {
    if (radius <= 0)
        throw std::domain_error("chord_pdf: radius must be positive");
    if (d < 0 || d >= 2.0 * radius)
        throw std::domain_error("chord_pdf: d must lie in [0, 2R)");
    const double u = d / (2.0 * radius);
    return 1.0 / (std::numbers::pi * radius * std::sqrt(1.0 - u * u));
}

VisitorClass classify_visitor(double interaction_time_s, double prep_time_s) {
    if (interaction_time_s < 0 || prep_time_s < 0)
        throw std::domain_error("classify_visitor: times must be non-negative");
    return interaction_time_s > prep_time_s ? VisitorClass::Candidate
                                            : VisitorClass::TemporaryGuest;
}

double CrossingGeometry::chord() const { return chord_length(radius, theta); }

double CrossingGeometry::dwell_time() const { return interaction_time(radius, theta, speed); }

} // namespace scnsim
