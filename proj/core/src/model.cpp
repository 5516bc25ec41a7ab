#include "ellsos/model.hpp"

#include <cmath>

namespace ellsos {

std::vector<scalar> substituted(const std::vector<scalar>& x, int i, scalar v) {
    if (i < 1 || i > static_cast<int>(x.size()))
        throw domain_error("substituted: index out of range");
    std::vector<scalar> y = x;
    y[static_cast<std::size_t>(i - 1)] = v;
    return y;
}

std::vector<scalar> substituted2(const std::vector<scalar>& x, int i, scalar v, int j, scalar w) {
    if (i == j) throw domain_error("substituted2: indices must differ");
    std::vector<scalar> y = substituted(x, i, v);
    if (j < 1 || j > static_cast<int>(x.size()))
        throw domain_error("substituted2: index out of range");
    y[static_cast<std::size_t>(j - 1)] = w;
    return y;
}

bond_weights dynamical_weights(scalar x, scalar t, const model_params& params) {
    const theta_context& th = params.theta;
    const scalar g = params.gamma;
    const scalar th_t = theta1(t, th);
    if (std::abs(th_t) < 1e-300)
        throw near_pole_error("dynamical_weights: dynamical argument at a theta zero", t);
    bond_weights w;
    w.a_plus = theta1(x + g, th);
    w.a_minus = w.a_plus;
    w.b_plus = theta1(t - g, th) * theta1(x, th) / th_t;
    w.b_minus = theta1(t + g, th) * theta1(x, th) / th_t;
    w.c_plus = theta1(t - x, th) * theta1(g, th) / th_t;
    w.c_minus = theta1(t + x, th) * theta1(g, th) / th_t;
    return w;
}

dense_matrix r_matrix(scalar x, scalar t, const model_params& params, double pole_floor) {
    if (std::abs(theta1(t, params.theta)) < pole_floor)
        throw near_pole_error("r_matrix: dynamical argument at a theta zero", t);
    const bond_weights w = dynamical_weights(x, t, params);
    dense_matrix r(4, 4);
    r(0, 0) = w.a_plus;
    r(1, 1) = w.b_plus;
    r(1, 2) = w.c_plus;
    r(2, 1) = w.c_minus;
    r(2, 2) = w.b_minus;
    r(3, 3) = w.a_minus;
    return r;
}

sixv_weight_values sixv_weights(scalar x, scalar gamma) {
    return {std::sinh(x + gamma), std::sinh(x), std::sinh(gamma)};
}

dense_matrix sixv_r_matrix(scalar x, scalar gamma) {
    const sixv_weight_values w = sixv_weights(x, gamma);
    dense_matrix r(4, 4);
    r(0, 0) = w.a;
    r(1, 1) = w.b;
    r(1, 2) = w.c;
    r(2, 1) = w.c;
    r(2, 2) = w.b;
    r(3, 3) = w.a;
    return r;
}

hw_eigenvalue_set hw_eigenvalues(scalar x, scalar tau, const model_params& params) {
    const theta_context& th = params.theta;
    const scalar g = params.gamma;
    const double L = params.L;
    scalar prod_shift{1.0, 0.0};
    scalar prod_plain{1.0, 0.0};
    for (const scalar& m : params.mu) {
        prod_shift *= theta1(x - m + g, th);
        prod_plain *= theta1(x - m, th);
    }
    hw_eigenvalue_set e;
    e.lambda_A = prod_shift;
    e.lambda_D = theta1(tau + g, th) / theta1(tau + (1.0 - L) * g, th) * prod_plain;
    e.lambda_A_dual = theta1(tau - g, th) / theta1(tau + (L - 1.0) * g, th) * prod_plain;
    e.lambda_D_dual = prod_shift;
    return e;
}

namespace {

// Spin eigenvalue (+1 up / -1 down) of factor k (1-based) in a big-endian
// basis index over n two-dimensional factors.
int spin_of(int state, int k, int n) { return ((state >> (n - k)) & 1) ? -1 : +1; }

// Embeds a pair operator acting on factors (i, j) of a 3-fold tensor space.
// r_at(t) supplies the 4x4 matrix for input basis state t, which lets the
// caller realize state-dependent dynamical arguments on the spectator leg.
template <typename RAt>
dense_matrix embed_pair3(int i, int j, RAt&& r_at) {
    dense_matrix m(8, 8);
    for (int t = 0; t < 8; ++t) {
        const dense_matrix r = r_at(t);
        const int ti = (t >> (3 - i)) & 1;
        const int tj = (t >> (3 - j)) & 1;
        for (int ui = 0; ui < 2; ++ui) {
            for (int uj = 0; uj < 2; ++uj) {
                int u = t;
                u = (u & ~(1 << (3 - i))) | (ui << (3 - i));
                u = (u & ~(1 << (3 - j))) | (uj << (3 - j));
                m(static_cast<std::size_t>(u), static_cast<std::size_t>(t)) =
                    r(static_cast<std::size_t>(ui * 2 + uj), static_cast<std::size_t>(ti * 2 + tj));
            }
        }
    }
    return m;
}

double max_abs(const dense_matrix& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

double relative_entry_residual(const dense_matrix& lhs, const dense_matrix& rhs) {
    const double scale = std::max(max_abs(lhs), max_abs(rhs));
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
    return worst / scale;
}

} // namespace

double dyb_residual(scalar x1, scalar x2, scalar x3, scalar tau, const model_params& params) {
    const scalar g = params.gamma;
    auto fixed = [&](scalar x, scalar t) {
        return [&, x, t](int) { return r_matrix(x, t, params); };
    };
    auto shifted = [&](scalar x, int spectator) {
        return [&, x, spectator](int state) {
            const double h = spin_of(state, spectator, 3);
            return r_matrix(x, tau - g * h, params);
        };
    };
    const dense_matrix lhs = embed_pair3(1, 2, shifted(x1 - x2, 3)) *
                             embed_pair3(1, 3, fixed(x1 - x3, tau)) *
                             embed_pair3(2, 3, shifted(x2 - x3, 1));
    const dense_matrix rhs = embed_pair3(2, 3, fixed(x2 - x3, tau)) *
                             embed_pair3(1, 3, shifted(x1 - x3, 2)) *
                             embed_pair3(1, 2, fixed(x1 - x2, tau));
    return relative_entry_residual(lhs, rhs);
}

double sixv_ybe_residual(scalar x1, scalar x2, scalar x3, scalar gamma) {
    auto plain = [&](scalar x) {
        return [x, gamma](int) { return sixv_r_matrix(x, gamma); };
    };
    const dense_matrix lhs = embed_pair3(1, 2, plain(x1 - x2)) *
                             embed_pair3(1, 3, plain(x1 - x3)) *
                             embed_pair3(2, 3, plain(x2 - x3));
    const dense_matrix rhs = embed_pair3(2, 3, plain(x2 - x3)) *
                             embed_pair3(1, 3, plain(x1 - x3)) *
                             embed_pair3(1, 2, plain(x1 - x2));
    return relative_entry_residual(lhs, rhs);
}

} // namespace ellsos
