#include "ellsos/funceq.hpp"

#include "ellsos/errors.hpp"

#include <cmath>
#include <complex>

namespace ellsos {

namespace {

void require_valid(const spectral_config& cfg, const model_params& params, const char* where) {
    if (!params.valid()) throw domain_error(std::string(where) + ": invalid params");
    if (static_cast<int>(cfg.x.size()) != params.L)
        throw domain_error(std::string(where) + ": spectral set size must equal L");
}

spectral_config swapped_x0(const spectral_config& cfg, int l) {
    spectral_config out = cfg;
    out.x0 = cfg.x[static_cast<std::size_t>(l - 1)];
    out.x[static_cast<std::size_t>(l - 1)] = cfg.x0;
    return out;
}

spectral_config swapped_x0bar(const spectral_config& cfg, int m) {
    spectral_config out = cfg;
    out.x0bar = cfg.x[static_cast<std::size_t>(m - 1)];
    out.x[static_cast<std::size_t>(m - 1)] = cfg.x0bar;
    return out;
}

} // namespace

int pair_index(int r, int s, int L) {
    if (!(1 <= r && r < s && s <= L)) throw domain_error("pair_index: need 1 <= r < s <= L");
    return s + L * (r - 1) - r * (r + 1) / 2;
}

int relation_family_size(int L) { return L * (L + 3) / 2; }

std::vector<std::pair<int, int>> index_pairs(int L) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(L * (L - 1) / 2));
    for (int r = 1; r <= L; ++r)
        for (int s = r + 1; s <= L; ++s) out.emplace_back(r, s);
    return out;
}

coefficient_bundle coeff_A(const spectral_config& cfg, const model_params& params) {
    require_valid(cfg, params, "coeff_A");
    const int L = params.L;
    const scalar g = params.gamma;
    const scalar tau = params.tau;
    const scalar x0 = cfg.x0;
    auto th = [&](scalar v) { return theta1(v, params.theta); };

    coefficient_bundle b;
    b.tag = "A";
    b.N.assign(static_cast<std::size_t>(L) + 1, scalar{0.0, 0.0});

    scalar m0 = th(tau + g) / th(tau + (L + 1.0) * g);
    for (int j = 0; j < L; ++j) m0 *= th(x0 - params.mu[static_cast<std::size_t>(j)]);
    b.M0 = m0;

    scalar n0 = -th(tau + 2.0 * g) / th(tau + (L + 2.0) * g);
    for (int j = 0; j < L; ++j) n0 *= th(x0 - params.mu[static_cast<std::size_t>(j)] + g);
    for (int j = 0; j < L; ++j)
        n0 *= th(cfg.x[static_cast<std::size_t>(j)] - x0 + g) / th(cfg.x[static_cast<std::size_t>(j)] - x0);
    b.N[0] = n0;

    for (int i = 1; i <= L; ++i) {
        const scalar xi = cfg.x[static_cast<std::size_t>(i - 1)];
        scalar ni = th(tau + 2.0 * g + x0 - xi) * th(g) /
                    (th(xi - x0) * th(tau + (L + 2.0) * g));
        for (int j = 0; j < L; ++j) ni *= th(xi - params.mu[static_cast<std::size_t>(j)] + g);
        for (int j = 1; j <= L; ++j)
            if (j != i)
                ni *= th(cfg.x[static_cast<std::size_t>(j - 1)] - xi + g) /
                      th(cfg.x[static_cast<std::size_t>(j - 1)] - xi);
        b.N[static_cast<std::size_t>(i)] = ni;
    }
    return b;
}

coefficient_bundle coeff_A_perm(int l, const spectral_config& cfg, const model_params& params) {
    require_valid(cfg, params, "coeff_A_perm");
    if (l < 0 || l > params.L) throw domain_error("coeff_A_perm: label out of range");
    if (l == 0) return coeff_A(cfg, params);
    coefficient_bundle base = coeff_A(swapped_x0(cfg, l), params);
    coefficient_bundle out;
    out.tag = "A-perm";
    out.M0 = base.M0;
    out.N = base.N;
    std::swap(out.N[0], out.N[static_cast<std::size_t>(l)]);
    return out;
}

coefficient_bundle coeff_D(const spectral_config& cfg, const model_params& params) {
    require_valid(cfg, params, "coeff_D");
    const int L = params.L;
    const scalar g = params.gamma;
    const scalar tau = params.tau;
    const scalar xb = cfg.x0bar;
    auto th = [&](scalar v) { return theta1(v, params.theta); };

    coefficient_bundle b;
    b.tag = "D";
    b.N.assign(static_cast<std::size_t>(L) + 1, scalar{0.0, 0.0});

    scalar m0{1.0, 0.0};
    for (int j = 0; j < L; ++j) m0 *= th(xb - params.mu[static_cast<std::size_t>(j)] + g);
    b.M0 = m0;

    scalar n0{-1.0, 0.0};
    for (int j = 0; j < L; ++j) n0 *= th(xb - params.mu[static_cast<std::size_t>(j)]);
    for (int j = 0; j < L; ++j)
        n0 *= th(xb - cfg.x[static_cast<std::size_t>(j)] + g) / th(xb - cfg.x[static_cast<std::size_t>(j)]);
    b.N[0] = n0;

    for (int i = 1; i <= L; ++i) {
        const scalar xi = cfg.x[static_cast<std::size_t>(i - 1)];
        scalar ni = th(g) * th(tau + (L + 1.0) * g + xb - xi) /
                    (th(xb - xi) * th(tau + (L + 1.0) * g));
        for (int j = 0; j < L; ++j) ni *= th(xi - params.mu[static_cast<std::size_t>(j)]);
        for (int j = 1; j <= L; ++j)
            if (j != i)
                ni *= th(xi - cfg.x[static_cast<std::size_t>(j - 1)] + g) /
                      th(xi - cfg.x[static_cast<std::size_t>(j - 1)]);
        b.N[static_cast<std::size_t>(i)] = ni;
    }
    return b;
}

coefficient_bundle coeff_AD(const spectral_config& cfg, const model_params& params) {
    require_valid(cfg, params, "coeff_AD");
    if (cfg.x0 == cfg.x0bar)
        throw domain_error("coeff_AD: x0 and x0bar must be distinct");
    const int L = params.L;
    const scalar g = params.gamma;
    const scalar T = params.tau + (L + 1.0) * g;
    const scalar x0 = cfg.x0;
    const scalar xb = cfg.x0bar;
    auto th = [&](scalar v) { return theta1(v, params.theta); };

    coefficient_bundle b;
    b.tag = "AD";
    b.N.assign(static_cast<std::size_t>(L) + 1, scalar{0.0, 0.0});
    b.Nbar.assign(static_cast<std::size_t>(L) + 1, scalar{0.0, 0.0});

    scalar m_a{1.0, 0.0};
    scalar m_d{1.0, 0.0};
    for (int j = 0; j < L; ++j) {
        const scalar xj = cfg.x[static_cast<std::size_t>(j)];
        const scalar mj = params.mu[static_cast<std::size_t>(j)];
        m_a *= th(x0 - xj + g) * th(x0 - mj) * th(xb - mj + g) / (th(x0 - xj) * th(x0 - mj + g));
        m_d *= th(xb - xj + g) * th(xb - mj) / th(xb - xj);
    }
    b.M0 = m_a - m_d;

    for (int i = 1; i <= L; ++i) {
        const scalar xi = cfg.x[static_cast<std::size_t>(i - 1)];
        scalar ni = -th(g) * th(x0 - xi + T) / (th(T) * th(x0 - xi));
        scalar nbi = th(g) * th(xb - xi + T) / (th(T) * th(xb - xi));
        for (int j = 0; j < L; ++j) {
            const scalar mj = params.mu[static_cast<std::size_t>(j)];
            ni *= th(xi - mj) * th(xb - mj + g) / th(x0 - mj + g);
            nbi *= th(xi - mj);
        }
        for (int j = 1; j <= L; ++j)
            if (j != i) {
                const scalar xj = cfg.x[static_cast<std::size_t>(j - 1)];
                const scalar ratio = th(xi - xj + g) / th(xi - xj);
                ni *= ratio;
                nbi *= ratio;
            }
        b.N[static_cast<std::size_t>(i)] = ni;
        b.Nbar[static_cast<std::size_t>(i)] = nbi;
    }
    return b;
}

coefficient_bundle coeff_AD_perm(int l, int m, const spectral_config& cfg,
                                 const model_params& params) {
    require_valid(cfg, params, "coeff_AD_perm");
    const int L = params.L;
    const bool swap_up = (l >= 1);
    const bool swap_dn = (m >= 1);
    if (l < 0 || m < 0 || l > L || m > L || (swap_up && swap_dn && l >= m))
        throw domain_error("coeff_AD_perm: invalid label");
    if (!swap_up && !swap_dn) return coeff_AD(cfg, params);

    spectral_config sw = cfg;
    if (swap_up) sw = swapped_x0(sw, l);
    if (swap_dn) sw = swapped_x0bar(sw, m);
    const coefficient_bundle base = coeff_AD(sw, params);
    const scalar M0p = base.M0;
    const auto& Np = base.N;
    const auto& Nbp = base.Nbar;

    coefficient_bundle out;
    out.tag = "AD-perm";
    out.N.assign(static_cast<std::size_t>(L) + 1, scalar{0.0, 0.0});
    out.Nbar.assign(static_cast<std::size_t>(L) + 1, scalar{0.0, 0.0});

    if (swap_up && !swap_dn) {
        out.M0 = Np[static_cast<std::size_t>(l)];
        for (int j = 1; j <= L; ++j)
            out.N[static_cast<std::size_t>(j)] = (j == l) ? M0p : Np[static_cast<std::size_t>(j)];
        out.Nbar[static_cast<std::size_t>(l)] = Nbp[static_cast<std::size_t>(l)];
        for (int r = 1; r <= L; ++r)
            if (r != l) {
                const int lo = std::min(r, l);
                const int hi = std::max(r, l);
                out.O[{lo, hi}] = Nbp[static_cast<std::size_t>(r)];
            }
    } else if (!swap_up && swap_dn) {
        out.M0 = Nbp[static_cast<std::size_t>(m)];
        for (int j = 1; j <= L; ++j)
            out.Nbar[static_cast<std::size_t>(j)] = (j == m) ? M0p : Nbp[static_cast<std::size_t>(j)];
        out.N[static_cast<std::size_t>(m)] = Np[static_cast<std::size_t>(m)];
        for (int r = 1; r <= L; ++r)
            if (r != m) {
                const int lo = std::min(r, m);
                const int hi = std::max(r, m);
                out.O[{lo, hi}] = Np[static_cast<std::size_t>(r)];
            }
    } else {
        out.M0 = scalar{0.0, 0.0};
        out.N[static_cast<std::size_t>(l)] = Nbp[static_cast<std::size_t>(m)];
        out.N[static_cast<std::size_t>(m)] = Np[static_cast<std::size_t>(m)];
        out.Nbar[static_cast<std::size_t>(l)] = Nbp[static_cast<std::size_t>(l)];
        out.Nbar[static_cast<std::size_t>(m)] = Np[static_cast<std::size_t>(l)];
        out.O[{l, m}] = M0p;
        for (int r = 1; r <= L; ++r) {
            if (r == l || r == m) continue;
            out.O[{std::min(r, l), std::max(r, l)}] = Nbp[static_cast<std::size_t>(r)];
            out.O[{std::min(r, m), std::max(r, m)}] = Np[static_cast<std::size_t>(r)];
        }
    }
    return out;
}

namespace {

double accumulate_residual(std::vector<scalar>& terms) {
    scalar sum{0.0, 0.0};
    double scale = 0.0;
    for (const scalar& t : terms) {
        sum += t;
        scale = std::max(scale, std::abs(t));
    }
    if (scale == 0.0) return 0.0;
    return std::abs(sum) / scale;
}

} // namespace

double residual_A(int l, const spectral_config& cfg, const model_params& params,
                  const z_functional& z) {
    const coefficient_bundle b = coeff_A_perm(l, cfg, params);
    const scalar tau = params.tau;
    const scalar tau_up = params.tau + params.gamma;
    std::vector<scalar> terms;
    const std::vector<scalar> ref =
        (l == 0) ? cfg.x : substituted(cfg.x, l, cfg.x0);
    terms.push_back(b.M0 * z(ref, tau));
    terms.push_back(b.N[0] * z(cfg.x, tau_up));
    for (int i = 1; i <= params.L; ++i)
        terms.push_back(b.N[static_cast<std::size_t>(i)] * z(substituted(cfg.x, i, cfg.x0), tau_up));
    return accumulate_residual(terms);
}

double residual_D(const spectral_config& cfg, const model_params& params, const z_functional& z) {
    const coefficient_bundle b = coeff_D(cfg, params);
    std::vector<scalar> terms;
    terms.push_back(b.M0 * z(cfg.x, params.tau + params.gamma));
    terms.push_back(b.N[0] * z(cfg.x, params.tau));
    for (int i = 1; i <= params.L; ++i)
        terms.push_back(b.N[static_cast<std::size_t>(i)] *
                        z(substituted(cfg.x, i, cfg.x0bar), params.tau));
    return accumulate_residual(terms);
}

namespace {

double bundle_residual_same_tau(const coefficient_bundle& b, const spectral_config& cfg,
                                const model_params& params, const z_functional& z) {
    const scalar tau = params.tau;
    std::vector<scalar> terms;
    if (b.M0 != scalar{0.0, 0.0}) terms.push_back(b.M0 * z(cfg.x, tau));
    for (int i = 1; i <= params.L; ++i) {
        const scalar n = b.N[static_cast<std::size_t>(i)];
        if (n != scalar{0.0, 0.0}) terms.push_back(n * z(substituted(cfg.x, i, cfg.x0), tau));
        const scalar nb = b.Nbar.empty() ? scalar{0.0, 0.0} : b.Nbar[static_cast<std::size_t>(i)];
        if (nb != scalar{0.0, 0.0}) terms.push_back(nb * z(substituted(cfg.x, i, cfg.x0bar), tau));
    }
    for (const auto& [pr, coeff] : b.O) {
        if (coeff == scalar{0.0, 0.0}) continue;
        terms.push_back(coeff *
                        z(substituted2(cfg.x, pr.first, cfg.x0, pr.second, cfg.x0bar), tau));
    }
    return accumulate_residual(terms);
}

} // namespace

double residual_AD(const spectral_config& cfg, const model_params& params, const z_functional& z) {
    return bundle_residual_same_tau(coeff_AD(cfg, params), cfg, params, z);
}

double residual_AD_perm(int l, int m, const spectral_config& cfg, const model_params& params,
                        const z_functional& z) {
    return bundle_residual_same_tau(coeff_AD_perm(l, m, cfg, params), cfg, params, z);
}

std::vector<scalar> tau_shift_weights(const spectral_config& cfg, const model_params& params) {
    require_valid(cfg, params, "tau_shift_weights");
    const int L = params.L;
    const std::size_t n = static_cast<std::size_t>(L) + 1;
    dense_matrix big(n, n);
    std::vector<scalar> m0(n);
    for (int l = 0; l <= L; ++l) {
        const coefficient_bundle b = coeff_A_perm(l, cfg, params);
        m0[static_cast<std::size_t>(l)] = b.M0;
        for (int j = 0; j <= L; ++j)
            big(static_cast<std::size_t>(l), static_cast<std::size_t>(j)) =
                b.N[static_cast<std::size_t>(j)];
    }
    const scalar det_big = lu_determinant(big).det;

    std::vector<scalar> w(n);
    for (int l = 0; l <= L; ++l) {
        dense_matrix minor(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
        std::size_t ri = 0;
        for (int r = 0; r <= L; ++r) {
            if (r == l) continue;
            for (int c = 1; c <= L; ++c)
                minor(ri, static_cast<std::size_t>(c - 1)) =
                    big(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            ++ri;
        }
        const scalar det_minor = (L == 0) ? scalar{1.0, 0.0} : lu_determinant(minor).det;
        const double sgn = (l % 2 == 0) ? -1.0 : 1.0;
        w[static_cast<std::size_t>(l)] = sgn * m0[static_cast<std::size_t>(l)] * det_minor / det_big;
    }
    return w;
}

namespace {

scalar trig_a(scalar x, scalar g) { return std::sinh(x + g); }
scalar trig_b(scalar x) { return std::sinh(x); }

dense_matrix sixv_relation_matrix(bool rho, scalar x0, const std::vector<scalar>& x, scalar gamma,
                                  const std::vector<scalar>& mu) {
    const int L = static_cast<int>(mu.size());
    if (static_cast<int>(x.size()) != L)
        throw domain_error("sixv relation matrix: x and mu sizes differ");
    std::vector<scalar> xv;
    xv.reserve(static_cast<std::size_t>(L) + 1);
    xv.push_back(x0);
    xv.insert(xv.end(), x.begin(), x.end());
    const scalar c = std::sinh(gamma);
    const std::size_t n = static_cast<std::size_t>(L) + 1;
    dense_matrix m(n, n);
    for (int al = 0; al <= L; ++al) {
        for (int be = 0; be <= L; ++be) {
            const scalar xa = xv[static_cast<std::size_t>(al)];
            const scalar xb = xv[static_cast<std::size_t>(be)];
            scalar v;
            if (be == al) {
                scalar lead{1.0, 0.0};
                scalar tail{1.0, 0.0};
                for (int k = 0; k < L; ++k) {
                    const scalar mk = mu[static_cast<std::size_t>(k)];
                    lead *= rho ? trig_a(xa - mk, gamma) : trig_b(xa - mk);
                    tail *= rho ? trig_b(xa - mk) : trig_a(xa - mk, gamma);
                }
                for (int k = 0; k <= L; ++k)
                    if (k != al) {
                        const scalar xk = xv[static_cast<std::size_t>(k)];
                        tail *= rho ? trig_a(xa - xk, gamma) / trig_b(xa - xk)
                                    : trig_a(xk - xa, gamma) / trig_b(xk - xa);
                    }
                v = lead - tail;
            } else if (be == 0) {
                v = rho ? c / trig_b(xa - x0) : c / trig_b(x0 - xa);
                for (int k = 0; k < L; ++k) {
                    const scalar mk = mu[static_cast<std::size_t>(k)];
                    v *= rho ? trig_b(x0 - mk) : trig_a(x0 - mk, gamma);
                }
                for (int k = 1; k <= L; ++k)
                    if (k != al) {
                        const scalar xk = xv[static_cast<std::size_t>(k)];
                        v *= rho ? trig_a(x0 - xk, gamma) / trig_b(x0 - xk)
                                 : trig_a(xk - x0, gamma) / trig_b(xk - x0);
                    }
            } else {
                v = rho ? c / trig_b(xa - xb) : c / trig_b(xb - xa);
                for (int k = 0; k < L; ++k) {
                    const scalar mk = mu[static_cast<std::size_t>(k)];
                    v *= rho ? trig_b(xb - mk) : trig_a(xb - mk, gamma);
                }
                for (int k = 0; k <= L; ++k)
                    if (k != be && k != al) {
                        const scalar xk = xv[static_cast<std::size_t>(k)];
                        v *= rho ? trig_a(xb - xk, gamma) / trig_b(xb - xk)
                                 : trig_a(xk - xb, gamma) / trig_b(xk - xb);
                    }
            }
            m(static_cast<std::size_t>(al), static_cast<std::size_t>(be)) = v;
        }
    }
    return m;
}

} // namespace

dense_matrix sixv_sigma_matrix(scalar x0, const std::vector<scalar>& x, scalar gamma,
                               const std::vector<scalar>& mu) {
    return sixv_relation_matrix(false, x0, x, gamma, mu);
}

dense_matrix sixv_rho_matrix(scalar x0, const std::vector<scalar>& x, scalar gamma,
                             const std::vector<scalar>& mu) {
    return sixv_relation_matrix(true, x0, x, gamma, mu);
}

double sixv_relation_residual(bool rho, int row, scalar x0, const std::vector<scalar>& x,
                              scalar gamma, const std::vector<scalar>& mu,
                              const std::function<scalar(const std::vector<scalar>&)>& z) {
    const int L = static_cast<int>(mu.size());
    if (row < 0 || row > L) throw domain_error("sixv_relation_residual: row out of range");
    const dense_matrix m = sixv_relation_matrix(rho, x0, x, gamma, mu);
    std::vector<scalar> terms;
    for (int be = 0; be <= L; ++be) {
        const std::vector<scalar> arg = (be == 0) ? x : substituted(x, be, x0);
        terms.push_back(m(static_cast<std::size_t>(row), static_cast<std::size_t>(be)) * z(arg));
    }
    return accumulate_residual(terms);
}

} // namespace ellsos
