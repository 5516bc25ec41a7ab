#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellsos/detrep.hpp"
#include "ellsos/monodromy.hpp"

#include <cmath>
#include <complex>
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

std::vector<value_label> all_labels(int L) {
    std::vector<value_label> out;
    for (int i = 1; i <= L; ++i) out.push_back(value_label::upper(i));
    for (const auto& [r, s] : index_pairs(L)) out.push_back(value_label::pair(r, s));
    for (int i = 1; i <= L; ++i) out.push_back(value_label::lower(i));
    return out;
}

std::vector<scalar> label_points(const value_label& label, const spectral_config& c) {
    switch (label.kind) {
    case value_label::kind_t::none:
        return c.x;
    case value_label::kind_t::upper:
        return substituted(c.x, label.i, c.x0);
    case value_label::kind_t::lower:
        return substituted(c.x, label.i, c.x0bar);
    case value_label::kind_t::pair:
    default:
        return substituted2(c.x, label.i, c.x0, label.j, c.x0bar);
    }
}

} // namespace

TEST_CASE("value columns follow the documented layout") {
    CHECK(value_column(value_label::upper(1), 3) == 0);
    CHECK(value_column(value_label::upper(2), 3) == 1);
    CHECK(value_column(value_label::pair(1, 2), 3) == 3);
    CHECK(value_column(value_label::pair(1, 3), 3) == 4);
    CHECK(value_column(value_label::pair(2, 3), 3) == 5);
    CHECK(value_column(value_label::lower(1), 3) == 6);
    CHECK(value_column(value_label::lower(3), 3) == 8);
}

TEST_CASE("both assembly routes agree entrywise") {
    for (const int L : {1, 2, 3}) {
        const model_params p = params_fixture(L);
        const spectral_config c = cfg_fixture(L);
        const omega_assembly closed = assemble_omega(c, p);
        const omega_assembly relations = assemble_omega_from_relations(c, p);
        const int d = relation_family_size(L);
        REQUIRE(static_cast<int>(closed.matrix.rows()) == d);
        REQUIRE(static_cast<int>(closed.m0_column.size()) == d);
        double scale = 0.0;
        for (int r = 0; r < d; ++r)
            for (int col = 0; col < d; ++col)
                scale = std::max(scale, std::abs(closed.matrix(static_cast<std::size_t>(r),
                                                               static_cast<std::size_t>(col))));
        double worst = 0.0;
        for (int r = 0; r < d; ++r) {
            worst = std::max(worst, std::abs(closed.m0_column[static_cast<std::size_t>(r)] -
                                             relations.m0_column[static_cast<std::size_t>(r)]));
            for (int col = 0; col < d; ++col)
                worst = std::max(worst,
                                 std::abs(closed.matrix(static_cast<std::size_t>(r),
                                                        static_cast<std::size_t>(col)) -
                                          relations.matrix(static_cast<std::size_t>(r),
                                                           static_cast<std::size_t>(col))));
        }
        CAPTURE(L);
        CHECK(worst / scale < 1e-13);
    }
}

TEST_CASE("reference column replacement negates the inhomogeneous column") {
    const model_params p = params_fixture(2);
    const spectral_config c = cfg_fixture(2);
    const omega_assembly a = assemble_omega(c, p);
    const value_label label = value_label::upper(2);
    const dense_matrix m = with_reference_column(a, label, 2);
    const int col = value_column(label, 2);
    for (std::size_t r = 0; r < m.rows(); ++r)
        CHECK(m(r, static_cast<std::size_t>(col)) == -a.m0_column[r]);
}

TEST_CASE("determinant representation reproduces the oracle for every family") {
    for (const int L : {1, 2}) {
        const model_params p = params_fixture(L);
        const spectral_config c = cfg_fixture(L);
        const scalar z0 = z_det(value_label::none(), c, p);
        const scalar o0 = partition_function(c.x, p.tau, p);
        CAPTURE(L);
        CHECK(std::abs(z0 - o0) / std::abs(o0) < 1e-10);
        for (const value_label& label : all_labels(L)) {
            const scalar v = z_det(label, c, p);
            const scalar o = partition_function(label_points(label, c), p.tau, p);
            CHECK(std::abs(v - o) / std::abs(o) < 1e-10);
        }
    }
}

TEST_CASE("determinant value does not depend on the auxiliary points") {
    const model_params p = params_fixture(2);
    spectral_config c = cfg_fixture(2);
    const scalar first = z_det(value_label::none(), c, p);
    c.x0 = {0.33, -0.17};
    c.x0bar = {-0.05, 0.29};
    const scalar second = z_det(value_label::none(), c, p);
    CHECK(std::abs(first - second) / std::abs(first) < 1e-11);
}

TEST_CASE("determinant ratios collapse to weight products at the special parameter") {
    for (const int L : {1, 2}) {
        model_params p = params_fixture(L);
        p.tau = -p.gamma;
        const spectral_config c = cfg_fixture(L);
        const omega_assembly a = assemble_omega(c, p);
        const scalar det0 = lu_determinant(a.matrix).det;
        for (const value_label& label : all_labels(L)) {
            const scalar ratio = lu_determinant(with_reference_column(a, label, L)).det / det0;
            const scalar expected = special_tau_ratio(label, c, p);
            CAPTURE(L);
            CAPTURE(label.i);
            CAPTURE(label.j);
            CHECK(std::abs(ratio - expected) / std::abs(expected) < 1e-12);
        }
    }
}

TEST_CASE("solution stays continuous approaching the special parameter") {
    const int L = 2;
    model_params p = params_fixture(L);
    p.tau = -p.gamma + scalar{1e-6, 0.0};
    const spectral_config c = cfg_fixture(L);
    const omega_assembly a = assemble_omega(c, p);
    const scalar det0 = lu_determinant(a.matrix).det;
    for (const value_label& label : all_labels(L)) {
        const scalar ratio = lu_determinant(with_reference_column(a, label, L)).det / det0;
        model_params limit = p;
        limit.tau = -p.gamma;
        const scalar expected = special_tau_ratio(label, c, limit);
        CHECK(std::abs(ratio - expected) / std::abs(expected) < 1e-3);
    }
}

TEST_CASE("trigonometric determinants reproduce the oracle and its substitutions") {
    const scalar g{0.41, 0.13};
    const std::vector<scalar> x{{0.31, -0.06}, {-0.27, 0.18}};
    const std::vector<scalar> mu{{0.05, 0.02}, {-0.13, 0.07}};
    const scalar x0{0.11, 0.21};
    const scalar oracle = sixv_partition_function(x, g, mu);
    for (const bool rho : {false, true}) {
        CAPTURE(rho);
        const scalar v = sixv_z_det(rho, 0, x0, x, g, mu);
        CHECK(std::abs(v - oracle) / std::abs(oracle) < 1e-12);
        for (int i = 1; i <= 2; ++i) {
            const scalar sub = sixv_partition_function(substituted(x, i, x0), g, mu);
            const scalar vi = sixv_z_det(rho, i, x0, x, g, mu);
            CHECK(std::abs(vi - sub) / std::abs(sub) < 1e-12);
        }
    }
}

TEST_CASE("trigonometric corner matrices have the reduced size") {
    const scalar g{0.41, 0.13};
    const std::vector<scalar> x{{0.31, -0.06}, {-0.27, 0.18}};
    const std::vector<scalar> mu{{0.05, 0.02}, {-0.13, 0.07}};
    const dense_matrix m = sixv_corner(false, 0, {0.11, 0.21}, x, g, mu);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
}
