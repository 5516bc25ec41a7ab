#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellsos/errors.hpp"
#include "ellsos/theta.hpp"

#include <cmath>
#include <complex>

using namespace ellsos;

namespace {
const theta_context ctx;
double dist(scalar a, scalar b) { return std::abs(a - b); }
} // namespace

TEST_CASE("vanishes at the origin") {
    CHECK(std::abs(theta1({0.0, 0.0}, ctx)) == 0.0);
}

TEST_CASE("odd in the argument") {
    const scalar x{0.37, 0.21};
    CHECK(dist(theta1(-x, ctx), -theta1(x, ctx)) < 1e-15);
}

TEST_CASE("antiperiodic along the imaginary period") {
    const scalar x{0.3, -0.12};
    const scalar half_period{0.0, std::acos(-1.0)};
    const scalar lhs = theta1(x + half_period, ctx);
    const scalar rhs = -theta1(x, ctx);
    CHECK(dist(lhs, rhs) / std::abs(rhs) < 1e-13);
}

TEST_CASE("pinned value at the default nome") {
    const scalar v = theta1({0.3, 0.1}, ctx);
    CHECK(dist(v, {-5.85091891104416034e-02, 1.76475072103938868e-01}) < 1e-15);
}

TEST_CASE("small nome degenerates to sinh") {
    theta_context small;
    small.p = 1e-6;
    const double norm = std::pow(small.p, -0.25);
    for (const double xr : {-1.0, -0.4, 0.15, 0.8}) {
        const scalar x{xr, 0.0};
        const scalar v = scalar{0.0, -1.0} * norm * theta1(x, small);
        CHECK(dist(v, std::sinh(x)) < 1e-10);
    }
}

TEST_CASE("ratio helper multiplies numerators and divides denominators") {
    const scalar a{0.2, 0.3};
    const scalar b{-0.4, 0.1};
    const scalar c{0.6, -0.2};
    const scalar direct = theta1(a, ctx) * theta1(b, ctx) / theta1(c, ctx);
    CHECK(dist(theta_ratio({a, b}, {c}, ctx), direct) < 1e-15 * std::abs(direct));
}

TEST_CASE("ratio flags a denominator zero") {
    CHECK_THROWS_AS(theta_ratio({{0.2, 0.3}}, {{0.0, 0.0}}, ctx), near_pole_error);
}

TEST_CASE("carries the offending argument in the pole report") {
    try {
        theta_ratio({{0.2, 0.3}}, {{0.0, 0.0}}, ctx);
        FAIL("expected a near-pole report");
    } catch (const near_pole_error& e) {
        CHECK(std::abs(e.argument()) == 0.0);
    }
}

TEST_CASE("divergent nome is reported instead of looping") {
    theta_context bad;
    bad.p = 1.5;
    CHECK_THROWS_AS(theta1({0.3, 0.1}, bad), domain_error);
}
