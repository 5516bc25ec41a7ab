#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellsos/errors.hpp"
#include "ellsos/model.hpp"

#include <cmath>
#include <complex>

using namespace ellsos;

namespace {

model_params fixture() {
    model_params p;
    p.L = 1;
    p.gamma = {0.41, 0.13};
    p.tau = {0.23, -0.11};
    p.mu = {{0.05, 0.02}};
    return p;
}

double dist(scalar a, scalar b) { return std::abs(a - b); }

} // namespace

TEST_CASE("substitution replaces one slot") {
    const std::vector<scalar> x{{1.0, 0.0}, {2.0, 0.0}};
    const auto y = substituted(x, 2, {9.0, 0.0});
    CHECK(y[0] == x[0]);
    CHECK(y[1] == scalar{9.0, 0.0});
    CHECK_THROWS_AS(substituted(x, 3, {0.0, 0.0}), domain_error);
    CHECK_THROWS_AS(substituted2(x, 1, {0.0, 0.0}, 1, {0.0, 0.0}), domain_error);
}

TEST_CASE("vertex weights reduce to theta products") {
    const model_params p = fixture();
    const theta_context& th = p.theta;
    const scalar x{0.27, -0.08};
    const scalar t{0.51, 0.06};
    const bond_weights w = dynamical_weights(x, t, p);
    CHECK(dist(w.a_plus, theta1(x + p.gamma, th)) == 0.0);
    CHECK(dist(w.a_minus, w.a_plus) == 0.0);
    const scalar tt = theta1(t, th);
    CHECK(dist(w.b_plus, theta1(t - p.gamma, th) * theta1(x, th) / tt) < 1e-16);
    CHECK(dist(w.b_minus, theta1(t + p.gamma, th) * theta1(x, th) / tt) < 1e-16);
    CHECK(dist(w.c_plus, theta1(t - x, th) * theta1(p.gamma, th) / tt) < 1e-16);
    CHECK(dist(w.c_minus, theta1(t + x, th) * theta1(p.gamma, th) / tt) < 1e-16);
}

TEST_CASE("pinned c weight") {
    const model_params p = fixture();
    const scalar x{0.31, -0.06};
    const bond_weights w = dynamical_weights(x - p.mu[0], p.tau + p.gamma, p);
    CHECK(dist(w.c_plus, {-7.95213352704652876e-02, 1.36180467976846575e-01}) < 1e-15);
}

TEST_CASE("vertex matrix has the ice structure") {
    const model_params p = fixture();
    const dense_matrix r = r_matrix({0.27, -0.08}, {0.51, 0.06}, p);
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool allowed = (i == j) || (i == 1 && j == 2) || (i == 2 && j == 1);
            if (!allowed) CHECK(std::abs(r(i, j)) == 0.0);
            if (std::abs(r(i, j)) != 0.0) ++nonzero;
        }
    CHECK(nonzero == 6);
}

TEST_CASE("vertex matrix refuses a dynamical pole") {
    const model_params p = fixture();
    CHECK_THROWS_AS(r_matrix({0.27, -0.08}, {0.0, 0.0}, p), near_pole_error);
    CHECK_THROWS_AS(dynamical_weights({0.27, -0.08}, {0.0, 0.0}, p), near_pole_error);
}

TEST_CASE("dynamical Yang-Baxter holds at a fixed draw") {
    const model_params p = fixture();
    const double r =
        dyb_residual({0.31, -0.06}, {-0.27, 0.18}, {0.12, 0.09}, p.tau, p);
    CHECK(r < 1e-13);
}

TEST_CASE("trigonometric weights and their Yang-Baxter identity") {
    const scalar g{0.41, 0.13};
    const scalar x{0.3, -0.2};
    const sixv_weight_values w = sixv_weights(x, g);
    CHECK(dist(w.a, std::sinh(x + g)) < 1e-15);
    CHECK(dist(w.b, std::sinh(x)) < 1e-15);
    CHECK(dist(w.c, std::sinh(g)) < 1e-15);
    CHECK(sixv_ybe_residual({0.31, -0.06}, {-0.27, 0.18}, {0.12, 0.09}, g) < 1e-14);
}

TEST_CASE("parameter validity") {
    model_params p = fixture();
    CHECK(p.valid());
    p.mu.clear();
    CHECK_FALSE(p.valid());
    p = fixture();
    p.theta.p = 1.2;
    CHECK_FALSE(p.valid());
}
