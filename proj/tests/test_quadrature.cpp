#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "quartic/quadrature.hpp"

using namespace quartic;

TEST_CASE("adaptive rule on elementary integrals", "[quadrature]") {
    long double pi = std::numbers::pi_v<long double>;
    IntegralResult r = integrate_adaptive([](long double x) { return std::sin(x); }, 0.0L, pi / 2, 1e-12L);
    CHECK(std::fabs(r.value - 1.0L) < 1e-11L);
    IntegralResult s = integrate_adaptive([](long double x) { return x * x; }, 0.0L, 1.0L, 1e-12L);
    CHECK(std::fabs(s.value - 1.0L / 3.0L) < 1e-11L);
    CHECK(r.panels >= 1);
}

TEST_CASE("tolerance floor is enforced", "[quadrature]") {
    CHECK_THROWS_AS(integrate_adaptive([](long double) { return 1.0L; }, 0.0L, 1.0L, 1e-14L), std::domain_error);
    CHECK_THROWS_AS(n04_numeric(1.0L, 0, 1e-15L), std::domain_error);
}

TEST_CASE("quartic integral matches its closed form", "[quadrature]") {
    // a = 1, m = 0 collapses to pi/4
    long double pi = std::numbers::pi_v<long double>;
    CHECK(std::fabs(n04_closed(Rat(1), 0) - pi / 4) < 1e-15L);
    QuadCheck base = n04_check(Rat(1), 0);
    CHECK(base.ok);
    CHECK(std::fabs(base.numeric - pi / 4) < 1e-10L);

    for (long m : {0L, 3L, 6L}) {
        QuadCheck c = n04_check(make_rat(5, 2), m);
        INFO("m = " << m << " rel_err = " << static_cast<double>(c.rel_err));
        CHECK(c.ok);
        QuadCheck d = n04_check(make_rat(-1, 2), m);
        CHECK(d.ok);
    }
}

TEST_CASE("half-angle route matches the same closed form", "[quadrature]") {
    for (long m : {0L, 2L, 5L}) {
        QuadCheck c = q1_check(Rat(0), m);
        CHECK(c.ok);
        QuadCheck d = q1_check(make_rat(5, 2), m);
        CHECK(d.ok);
    }
    // both routes integrate to the same number
    CHECK(std::fabs(n04_closed(Rat(2), 4) - q1_closed(Rat(2), 4)) < 1e-18L);
}

TEST_CASE("domain ends at a = -1", "[quadrature]") {
    CHECK_THROWS_AS(n04_numeric(-1.0L, 0), std::domain_error);
    CHECK_THROWS_AS(q1_numeric(-1.5L, 1), std::domain_error);
    CHECK_THROWS_AS(n04_numeric(1.0L, -1), std::domain_error);
}
