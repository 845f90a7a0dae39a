// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "scnsim/geometry.hpp"
#include "support/quadrature.hpp"

using namespace scnsim;
using std::numbers::pi;

TEST_CASE("chord length") {
    CHECK(chord_length(100.0, 0.0) == doctest::Approx(200.0));
    CHECK(chord_length(100.0, pi / 3.0) == doctest::Approx(100.0));
    CHECK(chord_length(100.0, pi / 2.0 - 1e-9) < 1e-6);
    CHECK(chord_length(100.0, -pi / 3.0) == doctest::Approx(100.0));
    CHECK_THROWS_AS(chord_length(100.0, pi / 2.0), std::domain_error);
    CHECK_THROWS_AS(chord_length(100.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(chord_length(0.0, 0.0), std::domain_error);
}

TEST_CASE("chord length decreases with |theta|") {
    double prev = chord_length(50.0, 0.0);
    for (double t = 0.1; t < pi / 2.0; t += 0.1) {
        const double c = chord_length(50.0, t);
        CHECK(c < prev);
        prev = c;
    }
}

TEST_CASE("interaction time") {
    CHECK(interaction_time(100.0, 0.0, 10.0) == doctest::Approx(20.0));
    CHECK(interaction_time(100.0, pi / 3.0, 10.0) == doctest::Approx(10.0));
    CHECK(interaction_time(100.0, 0.0, 1e9) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK_THROWS_AS(interaction_time(100.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(interaction_time(100.0, 0.0, -3.0), std::domain_error);

    // exact 1/v scaling: doubling the speed halves the dwell time
    for (double v : {0.7, 3.0, 13.0})
        CHECK(interaction_time(80.0, 0.4, 2.0 * v) == interaction_time(80.0, 0.4, v) / 2.0);
}

TEST_CASE("crossing geometry helpers") {
    const CrossingGeometry g{120.0, pi / 4.0, 6.0};
    CHECK(g.chord() == doctest::Approx(2.0 * 120.0 * std::cos(pi / 4.0)));
    CHECK(g.dwell_time() == doctest::Approx(g.chord() / 6.0));
}

TEST_CASE("chord pdf values") {
    const double R = 7.0;
    CHECK(chord_pdf(0.0, R) == doctest::Approx(1.0 / (pi * R)));
    CHECK(chord_pdf(R * std::sqrt(2.0), R) == doctest::Approx(std::sqrt(2.0) / (pi * R)));
    CHECK_THROWS_AS(chord_pdf(2.0 * R, R), std::domain_error);
    CHECK_THROWS_AS(chord_pdf(-0.1, R), std::domain_error);
    CHECK_THROWS_AS(chord_pdf(1.0, 0.0), std::domain_error);
}

TEST_CASE("chord pdf integrates to one") {
    for (double R : {2.5, 40.0}) {
        const double upper = 2.0 * R * (1.0 - 1e-14);
        const double integral =
            testing::adaptive_simpson([R](double d) { return chord_pdf(d, R); }, 0.0, upper);
        CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("visitor classification") {
    CHECK(classify_visitor(20.0, 2.0) == VisitorClass::Candidate);
    CHECK(classify_visitor(1.0, 2.0) == VisitorClass::TemporaryGuest);
    // boundary stays a guest: the crossing must strictly outlast preparation
    CHECK(classify_visitor(2.0, 2.0) == VisitorClass::TemporaryGuest);
    CHECK_THROWS_AS(classify_visitor(-1.0, 2.0), std::domain_error);

    // monotone in the crossing time
    bool was_candidate = false;
    for (double t = 0.0; t < 5.0; t += 0.25) {
        const bool candidate = classify_visitor(t, 2.0) == VisitorClass::Candidate;
        if (was_candidate)
            CHECK(candidate);
        was_candidate = candidate;
    }
}
