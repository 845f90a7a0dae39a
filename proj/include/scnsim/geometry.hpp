// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_GEOMETRY_HPP
#define SCNSIM_GEOMETRY_HPP

namespace scnsim {

/// A straight crossing of a circular cell: coverage radius, entry angle
/// relative to the line through the cell center, and speed.
struct CrossingGeometry {
    double radius;  // m, > 0
    double theta;   // rad, |theta| < pi/2
    double speed;   // m/s, > 0

    double chord() const;
    double dwell_time() const;
};

enum class VisitorClass { Candidate, TemporaryGuest };

/// Length of the chord a user traverses through a cell of radius R when
/// entering at angle theta: 2 R cos(theta). Throws std::domain_error outside
/// |theta| < pi/2 or for R <= 0.
double chord_length(double radius, double theta);

/// Time spent inside the coverage circle, chord / speed.
double interaction_time(double radius, double theta, double speed);

/// Density of the chord length D at d for entry angles uniform on
/// (-pi/2, pi/2): 1 / (pi R sqrt(1 - d^2 / 4R^2)), defined on [0, 2R).
double chord_pdf(double d, double radius);

/// Candidate iff the crossing time strictly exceeds the handover preparation
/// time; ties are treated as too short to serve.
VisitorClass classify_visitor(double interaction_time_s, double prep_time_s);

} // namespace scnsim

#endif
