#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellsos/errors.hpp"
#include "ellsos/model.hpp"
#include "ellsos/monodromy.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace ellsos;

namespace {

model_params fixture(int L) {
    model_params p;
    p.L = L;
    p.gamma = {0.41, 0.13};
    p.tau = {0.23, -0.11};
    const std::vector<scalar> pool{
        {0.05, 0.02}, {-0.13, 0.07}, {0.21, -0.16}, {-0.08, -0.04}};
    p.mu.assign(pool.begin(), pool.begin() + L);
    return p;
}

const std::vector<scalar> xpool{
    {0.31, -0.06}, {-0.27, 0.18}, {0.12, 0.09}, {-0.19, -0.23}};

std::vector<scalar> xs(int L) { return {xpool.begin(), xpool.begin() + L}; }

double dist(scalar a, scalar b) { return std::abs(a - b); }

} // namespace

TEST_CASE("single-site blocks reproduce the vertex weights") {
    const model_params p = fixture(1);
    const scalar x = xpool[0];
    const monodromy_blocks t = monodromy(x, p.tau, p);
    const bond_weights w = dynamical_weights(x - p.mu[0], p.tau, p);
    CHECK(dist(t.A(0, 0), w.a_plus) == 0.0);
    CHECK(dist(t.A(1, 1), w.b_plus) == 0.0);
    CHECK(std::abs(t.A(0, 1)) == 0.0);
    CHECK(std::abs(t.A(1, 0)) == 0.0);
    CHECK(dist(t.B(1, 0), w.c_plus) == 0.0);
    CHECK(std::abs(t.B(0, 0)) + std::abs(t.B(0, 1)) + std::abs(t.B(1, 1)) == 0.0);
    CHECK(dist(t.C(0, 1), w.c_minus) == 0.0);
    CHECK(std::abs(t.C(0, 0)) + std::abs(t.C(1, 0)) + std::abs(t.C(1, 1)) == 0.0);
    CHECK(dist(t.D(0, 0), w.b_minus) == 0.0);
    CHECK(dist(t.D(1, 1), w.a_minus) == 0.0);
    CHECK(t.at_x == x);
    CHECK(t.at_tau == p.tau);
}

TEST_CASE("single-site partition function in closed form") {
    const model_params p = fixture(1);
    const scalar x = xpool[0];
    const scalar z = partition_function({x}, p.tau, p);
    const bond_weights w = dynamical_weights(x - p.mu[0], p.tau + p.gamma, p);
    CHECK(dist(z, w.c_plus) == 0.0);
    CHECK(dist(z, {-7.95213352704652876e-02, 1.36180467976846575e-01}) < 1e-15);
}

TEST_CASE("pinned two-site partition function") {
    const model_params p = fixture(2);
    const scalar z = partition_function(xs(2), p.tau, p);
    CHECK(dist(z, {-2.31816989029249784e-03, 4.26235011962628786e-03}) < 1e-15);
}

TEST_CASE("partition function is symmetric in the spectral points") {
    for (const int L : {2, 3}) {
        const model_params p = fixture(L);
        std::vector<scalar> x = xs(L);
        const scalar z = partition_function(x, p.tau, p);
        std::swap(x[0], x[static_cast<std::size_t>(L - 1)]);
        const scalar zs = partition_function(x, p.tau, p);
        CHECK(dist(z, zs) / std::abs(z) < 1e-13);
    }
}

TEST_CASE("creation-string amplitude vanishes off the balanced length") {
    const model_params p = fixture(2);
    CHECK(std::abs(bstring_amplitude({xpool[0]}, p.tau, p)) == 0.0);
    CHECK(std::abs(bstring_amplitude(xs(3), p.tau, p)) == 0.0);
}

TEST_CASE("partition function rejects a mismatched point count") {
    const model_params p = fixture(2);
    CHECK_THROWS_AS(partition_function({xpool[0]}, p.tau, p), domain_error);
}

TEST_CASE("raising block annihilates the extremal states exactly") {
    const model_params p = fixture(2);
    const monodromy_blocks t = monodromy(xpool[0], p.tau, p);
    const std::size_t d = 4;
    for (std::size_t i = 0; i < d; ++i) {
        CHECK(std::abs(t.C(i, 0)) == 0.0);
        CHECK(std::abs(t.C(d - 1, i)) == 0.0);
    }
}

TEST_CASE("diagonal blocks act on extremal states by factorized eigenvalues") {
    const model_params p = fixture(2);
    const scalar x = xpool[0];
    const monodromy_blocks t = monodromy(x, p.tau, p);
    const hw_eigenvalue_set hw = hw_eigenvalues(x, p.tau, p);
    const std::size_t d = 4;
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        worst = std::max(worst, dist(t.A(i, 0), i == 0 ? hw.lambda_A : scalar{}));
        worst = std::max(worst, dist(t.D(i, 0), i == 0 ? hw.lambda_D : scalar{}));
        worst = std::max(worst, dist(t.A(d - 1, i), i == d - 1 ? hw.lambda_A_dual : scalar{}));
        worst = std::max(worst, dist(t.D(d - 1, i), i == d - 1 ? hw.lambda_D_dual : scalar{}));
        for (std::size_t j = 0; j < d; ++j)
            scale = std::max({scale, std::abs(t.A(i, j)), std::abs(t.D(i, j))});
    }
    CHECK(worst / scale < 1e-13);
}

TEST_CASE("operator identities hold on seeded samples") {
    const model_params p = fixture(2);
    const auto reports = verify_algebra(p, 3, 1e-10, 99);
    CHECK(reports.size() == 11);
    for (const residual_report& r : reports) {
        CAPTURE(r.tag);
        CHECK(r.pass);
        CHECK(r.residual < 1e-11);
    }
}

TEST_CASE("operator identity driver refuses oversized chains") {
    const model_params p = fixture(4);
    model_params big = p;
    big.L = 5;
    big.mu.push_back({0.3, 0.1});
    CHECK_THROWS_AS(verify_algebra(big, 1, 1e-10, 1), domain_error);
}

TEST_CASE("trigonometric partition function matches its elliptic shape at one site") {
    // one-site closed form: c(gamma) weight of the single vertex
    const scalar g{0.41, 0.13};
    const std::vector<scalar> mu{{0.05, 0.02}};
    const scalar z = sixv_partition_function({xpool[0]}, g, mu);
    CHECK(dist(z, std::sinh(g)) < 1e-15);
}
