// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "scnsim/handover.hpp"
#include "scnsim/rng.hpp"

using namespace scnsim;
using std::numbers::pi;

TEST_CASE("macro-to-pico failure probability") {
    const double R = 100.0;
    CHECK(hf_prob_m2p(0.0, R) == 0.0);
    CHECK(hf_prob_m2p(R, R) == doctest::Approx(1.0));
    // closed form at r = R/2: acos(sqrt(3)/2) = pi/6
    CHECK(std::fabs(hf_prob_m2p(0.5 * R, R) - 1.0 / 3.0) < 1e-12);
    // the worked reliability point: a 0.08 ratio sits just above 5%
    CHECK(hf_prob_m2p(0.08 * R, R) == doctest::Approx((2.0 / pi) * std::asin(0.08)));
    CHECK(hf_prob_m2p(0.08 * R, R) == doctest::Approx(0.051).epsilon(0.01));
    CHECK_THROWS_AS(hf_prob_m2p(R + 1.0, R), std::domain_error);
    CHECK_THROWS_AS(hf_prob_m2p(-1.0, R), std::domain_error);
}

TEST_CASE("failure probability grows with the ratio") {
    double prev = -1.0;
    for (double x = 0.0; x <= 1.0; x += 0.01) {
        const double p = hf_prob_m2p(x, 1.0);
        CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("failure probability against sampled crossings") {
    // independent check of the closed form: sample entry angles, fail when
    // the chord reaches past the tangent of the failure circle
    const double R = 1.0, r = 0.3;
    const double threshold = 2.0 * std::sqrt(R * R - r * r);
    Rng rng(99);
    const int samples = 200000;
    int failures = 0;
    for (int k = 0; k < samples; ++k) {
        const double theta = rng.uniform(-pi / 2.0, pi / 2.0);
        if (2.0 * R * std::cos(theta) >= threshold)
            ++failures;
    }
    const double p = hf_prob_m2p(r, R);
    const double sigma = std::sqrt(p * (1.0 - p) / samples);
    CHECK(std::fabs(static_cast<double>(failures) / samples - p) < 4.0 * sigma);
}

TEST_CASE("reliability ratio") {
    CHECK(reliability_ratio(0.0) == doctest::Approx(0.0));
    CHECK(reliability_ratio(1.0) == doctest::Approx(1.0));
    const double r = reliability_ratio(0.05);
    CHECK(r > 0.075);
    CHECK(r < 0.085);
    CHECK_THROWS_AS(reliability_ratio(-0.1), std::domain_error);
    CHECK_THROWS_AS(reliability_ratio(1.1), std::domain_error);

    // inverse of the failure probability in the ratio
    for (double x = 0.0; x <= 1.0 + 1e-12; x += 0.05)
        CHECK(std::fabs(reliability_ratio(hf_prob_m2p(std::min(x, 1.0), 1.0)) - std::min(x, 1.0)) <
              1e-12);
}

namespace {

P2PGeometry base_geometry() {
    P2PGeometry g;
    g.r1 = 100.0;
    g.r1_exit = 120.0;
    g.r2_coverage = 100.0;
    g.r2_failure = 8.0;
    g.center_distance = 150.0;
    g.prep_time = 2.0;
    g.v_min = 5.56;
    g.v_max = 11.11;
    return g;
}

} // namespace

TEST_CASE("pico-to-pico feasibility") {
    P2PGeometry g = base_geometry();
    CHECK(p2p_feasible(g)); // 108 <= 150 <= 220

    g.center_distance = g.r1 + g.r2_failure; // lower bound inclusive
    CHECK(p2p_feasible(g));
    g.center_distance = g.r1_exit + g.r2_coverage; // upper bound inclusive
    CHECK(p2p_feasible(g));
    g.center_distance = g.r1_exit + g.r2_coverage + 1.0;
    CHECK_FALSE(p2p_feasible(g));
    g.center_distance = g.r1 + g.r2_failure - 1.0;
    CHECK_FALSE(p2p_feasible(g));

    g.r1_exit = g.r1; // violated bound
    CHECK_THROWS_AS(p2p_feasible(g), std::domain_error);
}

TEST_CASE("pico-to-pico failure probability") {
    P2PGeometry g = base_geometry();

    SUBCASE("sure success") {
        g.r1_exit = g.r1 + g.prep_time * (g.v_max + 1.0); // trigger speed above v_max
        g.r2_failure = 0.0;
        CHECK(hf_prob_p2p(g) == doctest::Approx(0.0));
    }
    SUBCASE("handover never triggers in time") {
        g.r1_exit = g.r1 + g.prep_time * (g.v_min / 2.0); // trigger speed below v_min
        CHECK(hf_prob_p2p(g) == doctest::Approx(1.0));
    }
    SUBCASE("mid-range value") {
        g.r1_exit = g.r1 + g.prep_time * 8.33; // trigger speed 8.33 m/s
        const double speed_factor = (8.33 - g.v_min) / (g.v_max - g.v_min);
        const double miss_factor = 1.0 - hf_prob_m2p(8.0, 100.0);
        CHECK(hf_prob_p2p(g) == doctest::Approx(1.0 - speed_factor * miss_factor));
        CHECK(hf_prob_p2p(g) == doctest::Approx(0.5255).epsilon(0.01));
    }
    SUBCASE("degenerate speed band") {
        g.v_min = g.v_max = 8.0;
        g.r1_exit = g.r1 + g.prep_time * 9.0;
        const double p_fast_enough = hf_prob_p2p(g);
        CHECK(p_fast_enough == doctest::Approx(hf_prob_m2p(8.0, 100.0)));
        g.r1_exit = g.r1 + g.prep_time * 7.0;
        CHECK(hf_prob_p2p(g) == doctest::Approx(1.0));
    }
}

TEST_CASE("pico-to-pico probability monotonicity") {
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        P2PGeometry g;
        g.r1 = rng.uniform(50.0, 200.0);
        g.r1_exit = g.r1 * rng.uniform(1.01, 1.5);
        g.r2_coverage = rng.uniform(50.0, 200.0);
        g.r2_failure = g.r2_coverage * rng.uniform(0.0, 0.9);
        g.center_distance = rng.uniform(0.0, 500.0);
        g.prep_time = rng.uniform(0.5, 5.0);
        g.v_min = rng.uniform(1.0, 10.0);
        g.v_max = g.v_min + rng.uniform(0.1, 10.0);

        const double p = hf_prob_p2p(g);
        P2PGeometry wider = g;
        wider.r1_exit += 10.0; // more room to finish: no worse
        CHECK(hf_prob_p2p(wider) <= p + 1e-12);
        P2PGeometry riskier = g;
        riskier.r2_failure = std::min(g.r2_coverage * 0.99, g.r2_failure + 5.0);
        CHECK(hf_prob_p2p(riskier) >= p - 1e-12);
    }
}
