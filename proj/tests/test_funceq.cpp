#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellsos/errors.hpp"
#include "ellsos/funceq.hpp"
#include "ellsos/monodromy.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

using namespace ellsos;

namespace {

model_params params_fixture(int L) {
    model_params p;
    p.L = L;
    p.gamma = {0.41, 0.13};
    p.tau = {0.23, -0.11};
    const std::vector<scalar> pool{{0.05, 0.02}, {-0.13, 0.07}, {0.21, -0.16}};
    p.mu.assign(pool.begin(), pool.begin() + L);
    return p;
}

spectral_config cfg_fixture(int L) {
    spectral_config c;
    const std::vector<scalar> pool{{0.31, -0.06}, {-0.27, 0.18}, {0.12, 0.09}};
    c.x.assign(pool.begin(), pool.begin() + L);
    c.x0 = {0.11, 0.21};
    c.x0bar = {-0.19, -0.14};
    return c;
}

z_functional oracle(const model_params& p) {
    return [&p](const std::vector<scalar>& xs, scalar tau) {
        return partition_function(xs, tau, p);
    };
}

} // namespace

TEST_CASE("pair enumeration is the expected bijection") {
    CHECK(pair_index(1, 2, 4) == 1);
    CHECK(pair_index(1, 3, 4) == 2);
    CHECK(pair_index(1, 4, 4) == 3);
    CHECK(pair_index(2, 3, 4) == 4);
    CHECK(pair_index(2, 4, 4) == 5);
    CHECK(pair_index(3, 4, 4) == 6);
    CHECK(index_pairs(3) ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(relation_family_size(1) == 2);
    CHECK(relation_family_size(2) == 5);
    CHECK(relation_family_size(3) == 9);
    CHECK(relation_family_size(4) == 14);
    CHECK_THROWS_AS(pair_index(2, 2, 4), domain_error);
    CHECK_THROWS_AS(pair_index(3, 1, 4), domain_error);
    CHECK_THROWS_AS(pair_index(1, 5, 4), domain_error);
}

TEST_CASE("unswapped labels reduce to the base bundles") {
    const model_params p = params_fixture(2);
    const spectral_config c = cfg_fixture(2);
    const coefficient_bundle base = coeff_A(c, p);
    const coefficient_bundle perm = coeff_A_perm(0, c, p);
    CHECK(std::abs(base.M0 - perm.M0) == 0.0);
    REQUIRE(base.N.size() == perm.N.size());
    for (std::size_t i = 0; i < base.N.size(); ++i)
        CHECK(std::abs(base.N[i] - perm.N[i]) == 0.0);
}

TEST_CASE("combined bundle still annihilates the oracle with the auxiliaries swapped") {
    const model_params p = params_fixture(2);
    spectral_config c = cfg_fixture(2);
    const z_functional z = oracle(p);
    CHECK(residual_AD(c, p, z) < 1e-11);
    std::swap(c.x0, c.x0bar);
    CHECK(residual_AD(c, p, z) < 1e-11);
}

TEST_CASE("combined bundle rejects coincident auxiliary points") {
    const model_params p = params_fixture(2);
    spectral_config c = cfg_fixture(2);
    c.x0bar = c.x0;
    CHECK_THROWS_AS(coeff_AD(c, p), domain_error);
}

TEST_CASE("swap labels outside the family are rejected") {
    const model_params p = params_fixture(2);
    const spectral_config c = cfg_fixture(2);
    const z_functional z = oracle(p);
    CHECK_THROWS_AS(residual_AD_perm(2, 1, c, p, z), domain_error);
    CHECK_THROWS_AS(residual_AD_perm(3, 0, c, p, z), domain_error);
}

TEST_CASE("relation residuals vanish against the oracle") {
    for (const int L : {1, 2, 3}) {
        const model_params p = params_fixture(L);
        const spectral_config c = cfg_fixture(L);
        const z_functional z = oracle(p);
        for (int l = 0; l <= L; ++l) {
            CAPTURE(L);
            CAPTURE(l);
            CHECK(residual_A(l, c, p, z) < 1e-11);
        }
        CHECK(residual_D(c, p, z) < 1e-11);
        CHECK(residual_AD(c, p, z) < 1e-11);
        for (int a = 1; a <= L; ++a) {
            CHECK(residual_AD_perm(a, 0, c, p, z) < 1e-11);
            CHECK(residual_AD_perm(0, a, c, p, z) < 1e-11);
        }
        for (const auto& [r, s] : index_pairs(L)) {
            CAPTURE(L);
            CAPTURE(r);
            CAPTURE(s);
            CHECK(residual_AD_perm(r, s, c, p, z) < 1e-11);
        }
    }
}

TEST_CASE("relation residuals are invariant under relabeling the spectral points") {
    const model_params p = params_fixture(3);
    spectral_config c = cfg_fixture(3);
    const z_functional z = oracle(p);
    std::swap(c.x[0], c.x[2]);
    CHECK(residual_A(0, c, p, z) < 1e-11);
    CHECK(residual_AD(c, p, z) < 1e-11);
}

TEST_CASE("eliminated shift weights reproduce the shifted oracle") {
    for (const int L : {1, 2}) {
        const model_params p = params_fixture(L);
        const spectral_config c = cfg_fixture(L);
        const std::vector<scalar> w = tau_shift_weights(c, p);
        REQUIRE(static_cast<int>(w.size()) == L + 1);
        scalar pred = w[0] * partition_function(c.x, p.tau, p);
        for (int l = 1; l <= L; ++l)
            pred += w[static_cast<std::size_t>(l)] *
                    partition_function(substituted(c.x, l, c.x0), p.tau, p);
        const scalar actual = partition_function(c.x, p.tau + p.gamma, p);
        CHECK(std::abs(pred - actual) / std::abs(actual) < 1e-12);
    }
}

TEST_CASE("trigonometric relation systems annihilate the oracle row by row") {
    const scalar g{0.41, 0.13};
    const std::vector<scalar> x{{0.31, -0.06}, {-0.27, 0.18}};
    const std::vector<scalar> mu{{0.05, 0.02}, {-0.13, 0.07}};
    const scalar x0{0.11, 0.21};
    const auto z = [&](const std::vector<scalar>& xs) {
        return sixv_partition_function(xs, g, mu);
    };
    for (const bool rho : {false, true})
        for (int row = 0; row <= 2; ++row) {
            CAPTURE(rho);
            CAPTURE(row);
            CHECK(sixv_relation_residual(rho, row, x0, x, g, mu, z) < 1e-12);
        }
}

TEST_CASE("trigonometric relation matrices are square and singular") {
    const scalar g{0.41, 0.13};
    const std::vector<scalar> x{{0.31, -0.06}, {-0.27, 0.18}};
    const std::vector<scalar> mu{{0.05, 0.02}, {-0.13, 0.07}};
    const scalar x0{0.11, 0.21};
    for (const bool rho : {false, true}) {
        dense_matrix m = rho ? sixv_rho_matrix(x0, x, g, mu) : sixv_sigma_matrix(x0, x, g, mu);
        REQUIRE(m.rows() == 3);
        REQUIRE(m.cols() == 3);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            double row_max = 0.0;
            for (std::size_t c = 0; c < m.cols(); ++c)
                row_max = std::max(row_max, std::abs(m(r, c)));
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) /= row_max;
        }
        CHECK(std::abs(lu_determinant(m, 0.0).det) < 1e-12);
    }
}
