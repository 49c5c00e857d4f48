#include <doctest.h>

#include <cmath>

#include "schwarz/errors.hpp"
#include "schwarz/profile.hpp"
#include "helpers.hpp"

using namespace schwarz;
using doctest::Approx;

TEST_CASE("radius profile golden values") {
    RadiusProfile rb(golden::ball());
    CHECK(rb(0.0) == Approx(1.0).epsilon(1e-14));
    CHECK(rb.omega() == Approx(M_PI).epsilon(1e-14));

    // n = 2: the radius is half the slice length (omega_1 = 2).
    Profile flat(BVFunction::constant_on(2.0, -1.0, 1.0), 2);
    CHECK(RadiusProfile(flat)(0.0) == Approx(1.0).epsilon(1e-14));

    RadiusProfile rs(golden::step());
    CHECK(rs(0.5) == Approx(2.0).epsilon(1e-14));
    CHECK(rs(1.5) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("radius round trip") {
    testutil::Gen gen(11);
    for (int i = 0; i < 8; ++i) {
        int n = 2 + gen.pick(3); // dimensions 2..4
        Profile p = gen.continuous_profile(n, n <= 3);
        RadiusProfile R(p);
        for (double t = 0.01; t < 1.0; t += 0.037) {
            double z = p.z_min() + (p.z_max() - p.z_min()) * t;
            double ell = p.eval(z);
            double back = p.omega() * std::pow(R(z), n - 1);
            CHECK(std::fabs(back - ell) <= 1e-12 * (1.0 + std::fabs(ell)));
        }
    }
}

TEST_CASE("radius derivative via the chain rule") {
    RadiusProfile R(golden::ball());
    // r(z) = sqrt(1 - z^2), r'(z) = -z / sqrt(1 - z^2).
    for (double z : {-0.7, -0.2, 0.0, 0.4, 0.8}) {
        double expect = -z / std::sqrt(1.0 - z * z);
        CHECK(R.derivative(z) == Approx(expect).epsilon(1e-12));
    }
    RadiusProfile Rc(golden::cantor());
    CHECK(Rc.derivative(0.5) == 0.0); // Cantor pieces have zero a.e. slope
}

TEST_CASE("radius limits at jumps") {
    RadiusProfile R(golden::step());
    auto [lo, hi] = R.limits(1.0);
    CHECK(lo == Approx(1.0).epsilon(1e-14));
    CHECK(hi == Approx(2.0).epsilon(1e-14));
}

TEST_CASE("cantor radius polynomial extraction") {
    RadiusProfile R(golden::cantor());
    auto s = R.cantor_radius_poly(0);
    REQUIRE(s.has_value());
    REQUIRE(s->size() == 2);
    CHECK((*s)[0] == Approx(1.0).epsilon(1e-12));
    CHECK((*s)[1] == Approx(1.0).epsilon(1e-12));

    // A Cantor piece that is not a perfect square in measure has no
    // polynomial radius for n = 3.
    Profile bad(BVFunction({0.0, 1.0}, {CantorPiece{{1.0, 1.0, 1.0}, false}}), 3);
    CHECK_FALSE(RadiusProfile(bad).cantor_radius_poly(0).has_value());
}

TEST_CASE("positivity intervals") {
    auto two = positivity_intervals(golden::two_component());
    REQUIRE(two.size() == 2);
    CHECK(two[0].lo == Approx(0.0));
    CHECK(two[0].hi == Approx(1.0));
    CHECK(two[1].lo == Approx(2.0));
    CHECK(two[1].hi == Approx(3.0));

    auto ball = positivity_intervals(golden::ball());
    REQUIRE(ball.size() == 1);
    CHECK(ball[0].lo == Approx(-1.0));
    CHECK(ball[0].hi == Approx(1.0));

    // pi z^2 (2 - z)^2 on [0,2]: zeros only at the support endpoints.
    Profile pinched(
        BVFunction::polynomial_on({0.0, 0.0, 4.0 * M_PI, -4.0 * M_PI, M_PI}, 0.0, 2.0), 3);
    auto single = positivity_intervals(pinched);
    REQUIRE(single.size() == 1);
    CHECK(single[0].lo == Approx(0.0));
    CHECK(single[0].hi == Approx(2.0));

    // Interior touching zero of a continuous profile disconnects the
    // positivity set (the lower approximate limit vanishes there).
    Profile touch(BVFunction::polynomial_on({M_PI, 0.0, -2.0 * M_PI, 0.0, M_PI}, -2.0, 2.0), 3);
    auto split = positivity_intervals(touch);
    REQUIRE(split.size() == 3);
    CHECK(split[0].hi == Approx(-1.0).epsilon(1e-9));
    CHECK(split[1].lo == Approx(-1.0).epsilon(1e-9));
    CHECK(split[1].hi == Approx(1.0).epsilon(1e-9));
    CHECK(split[2].lo == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sobolev membership") {
    CHECK(is_sobolev(golden::ball(), Interval::open(-1.0, 1.0)));
    CHECK_FALSE(is_sobolev(golden::step(), Interval::open(0.0, 2.0)));
    CHECK_FALSE(is_sobolev(golden::cantor(), Interval::open(0.0, 1.0)));
    // Boundary jumps sit outside the open interior.
    CHECK(is_sobolev(golden::cylinder(), Interval::open(0.0, 2.0)));
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(Profile(BVFunction::constant_on(-1.0, 0.0, 1.0), 3), precondition_error);
    CHECK_THROWS_AS(Profile(BVFunction::constant_on(1.0, 0.0, 1.0), 1), precondition_error);
    // Dips below zero inside a piece are caught too.
    CHECK_THROWS_AS(
        Profile(BVFunction::polynomial_on({-0.5, 0.0, 1.0}, -1.0, 1.0), 3), precondition_error);
}

TEST_CASE("cantor radius profile builder") {
    Profile p = cantor_radius_profile(1.0, 1.0, 0.0, 1.0, 3);
    CHECK(p.eval(0.0) == Approx(M_PI).epsilon(1e-13));
    CHECK(p.function().left_limit(1.0) == Approx(4.0 * M_PI).epsilon(1e-13));
    CHECK(p.function() == golden::cantor().function());
}

TEST_CASE("positivity through a Cantor plateau zero") {
    // q(u) = pi (2u - 1)^2 vanishes at u = 1/2, whose preimage is the middle
    // plateau [1/3, 2/3]: the positivity set splits around it.
    Profile p(BVFunction({0.0, 1.0}, {CantorPiece{{M_PI, -4.0 * M_PI, 4.0 * M_PI}, false}}), 3);
    auto comps = positivity_intervals(p);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].lo == Approx(0.0));
    CHECK(comps[0].hi == Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(comps[1].lo == Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(comps[1].hi == Approx(1.0));
}

TEST_CASE("radius root extraction in higher dimensions") {
    Profile p5 = cantor_radius_profile(1.0, 0.5, 0.0, 1.0, 5);
    auto s = RadiusProfile(p5).cantor_radius_poly(0);
    REQUIRE(s.has_value());
    REQUIRE(s->size() == 2);
    CHECK((*s)[0] == Approx(1.0).epsilon(1e-12));
    CHECK((*s)[1] == Approx(0.5).epsilon(1e-12));
}
