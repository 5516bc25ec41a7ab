#include "ellsos/detrep.hpp"

#include "ellsos/errors.hpp"

#include <cmath>
#include <complex>

namespace ellsos {

namespace {

std::vector<scalar> erased(const std::vector<scalar>& xs, int a) {
    std::vector<scalar> out;
    out.reserve(xs.size());
    for (int j = 1; j <= static_cast<int>(xs.size()); ++j)
        if (j != a) out.push_back(xs[static_cast<std::size_t>(j - 1)]);
    return out;
}

std::vector<scalar> erased2(const std::vector<scalar>& xs, int a, int b) {
    std::vector<scalar> out;
    out.reserve(xs.size());
    for (int j = 1; j <= static_cast<int>(xs.size()); ++j)
        if (j != a && j != b) out.push_back(xs[static_cast<std::size_t>(j - 1)]);
    return out;
}

std::vector<scalar> erased3(const std::vector<scalar>& xs, int a, int b, int c) {
    std::vector<scalar> out;
    out.reserve(xs.size());
    for (int j = 1; j <= static_cast<int>(xs.size()); ++j)
        if (j != a && j != b && j != c) out.push_back(xs[static_cast<std::size_t>(j - 1)]);
    return out;
}

std::vector<scalar> prepended(scalar head, std::vector<scalar> rest) {
    rest.insert(rest.begin(), head);
    return rest;
}

scalar int_pow(scalar base, int n) {
    scalar out{1.0, 0.0};
    for (int k = 0; k < n; ++k) out *= base;
    return out;
}

} // namespace

int value_column(const value_label& label, int L) {
    const int npair = L * (L - 1) / 2;
    switch (label.kind) {
    case value_label::kind_t::upper:
        if (label.i < 1 || label.i > L) throw domain_error("value_column: index out of range");
        return label.i - 1;
    case value_label::kind_t::pair:
        return L + pair_index(label.i, label.j, L) - 1;
    case value_label::kind_t::lower:
        if (label.i < 1 || label.i > L) throw domain_error("value_column: index out of range");
        return L + npair + label.i - 1;
    case value_label::kind_t::none:
    default:
        throw domain_error("value_column: reference value has no column");
    }
}

omega_assembly assemble_omega(const spectral_config& cfg, const model_params& params) {
    if (!params.valid()) throw domain_error("assemble_omega: invalid params");
    const int L = params.L;
    if (static_cast<int>(cfg.x.size()) != L)
        throw domain_error("assemble_omega: spectral set size must equal L");
    const int npair = L * (L - 1) / 2;
    const int d = relation_family_size(L);
    const scalar g = params.gamma;
    const scalar T = params.tau + (L + 1.0) * g;
    const scalar x0 = cfg.x0;
    const scalar xb = cfg.x0bar;
    auto th = [&](scalar v) { return theta1(v, params.theta); };
    auto x = [&](int i) { return cfg.x[static_cast<std::size_t>(i - 1)]; };
    auto mu = [&](int j) { return params.mu[static_cast<std::size_t>(j)]; };
    auto shift_ratio = [&](scalar base, const std::vector<scalar>& set) {
        scalar out{1.0, 0.0};
        for (const scalar& v : set) out *= th(base - v + g) / th(base - v);
        return out;
    };

    omega_assembly out{dense_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d)),
                       std::vector<scalar>(static_cast<std::size_t>(d), scalar{0.0, 0.0})};
    auto put = [&](int r, int c, scalar v) {
        out.matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
    };
    const auto prs = index_pairs(L);

    // Rows 0..L-1: relations labelled (a, lowered reference).
    for (int a = 1; a <= L; ++a) {
        const int row = a - 1;
        for (int b = 1; b <= L; ++b) {
            scalar v{0.0, 0.0};
            if (a == b) {
                scalar lead = th(x(a) - x0 + g) / th(x(a) - x0) * shift_ratio(x(a), erased(cfg.x, a));
                scalar tail = th(xb - x0 + g) / th(xb - x0) * shift_ratio(xb, erased(cfg.x, a));
                for (int j = 0; j < L; ++j) {
                    lead *= th(x(a) - mu(j)) * th(xb - mu(j) + g) / th(x(a) - mu(j) + g);
                    tail *= th(xb - mu(j));
                }
                v = lead - tail;
            } else {
                v = -th(g) * th(x(a) - x(b) + T) / (th(T) * th(x(a) - x(b)));
                for (int j = 0; j < L; ++j)
                    v *= th(x(b) - mu(j)) * th(xb - mu(j) + g) / th(x(a) - mu(j) + g);
                v *= shift_ratio(x(b), prepended(x0, erased2(cfg.x, a, b)));
            }
            put(row, b - 1, v);
        }
        for (const auto& [r, s] : prs) {
            const int col = L + pair_index(r, s, L) - 1;
            const int other = (a == s) ? r : (a == r) ? s : 0;
            if (other == 0) continue;
            scalar v = th(g) * th(xb - x(other) + T) / (th(T) * th(xb - x(other)));
            for (int j = 0; j < L; ++j) v *= th(x(other) - mu(j));
            v *= shift_ratio(x(other), prepended(x0, erased2(cfg.x, r, s)));
            put(row, col, v);
        }
        {
            // Diagonal lowered-value coefficient.
            scalar v = th(g) * th(xb - x0 + T) / (th(T) * th(xb - x0));
            for (int j = 0; j < L; ++j) v *= th(x0 - mu(j));
            v *= shift_ratio(x0, erased(cfg.x, a));
            put(row, L + npair + a - 1, v);
        }
        {
            scalar m0 = -th(g) * th(x(a) - x0 + T) / (th(T) * th(x(a) - x0));
            for (int j = 0; j < L; ++j) m0 *= th(x0 - mu(j)) * th(xb - mu(j) + g) / th(x(a) - mu(j) + g);
            m0 *= shift_ratio(x0, erased(cfg.x, a));
            out.m0_column[static_cast<std::size_t>(row)] = m0;
        }
    }

    // Rows L..L+npair-1: relations labelled by an unordered pair (l, m).
    for (const auto& [l, m] : prs) {
        const int row = L + pair_index(l, m, L) - 1;
        for (int b = 1; b <= L; ++b) {
            if (b == l) {
                scalar vi = th(g) * th(x(m) - xb + T) / (th(T) * th(x(m) - xb));
                scalar vj = th(g) * th(x(m) - x0 + T) / (th(T) * th(x(m) - x0));
                for (int j = 0; j < L; ++j) {
                    vi *= th(xb - mu(j));
                    vj *= th(x0 - mu(j));
                }
                vi *= shift_ratio(xb, prepended(x0, erased2(cfg.x, l, m)));
                vj *= shift_ratio(x0, prepended(xb, erased2(cfg.x, l, m)));
                put(row, b - 1, vi);
                put(row, L + npair + b - 1, vj);
            } else if (b == m) {
                scalar vi = -th(g) * th(x(l) - xb + T) / (th(T) * th(x(l) - xb));
                scalar vj = -th(g) * th(x(l) - x0 + T) / (th(T) * th(x(l) - x0));
                for (int j = 0; j < L; ++j) {
                    const scalar f = th(x(m) - mu(j) + g) / th(x(l) - mu(j) + g);
                    vi *= th(xb - mu(j)) * f;
                    vj *= th(x0 - mu(j)) * f;
                }
                vi *= shift_ratio(xb, prepended(x0, erased2(cfg.x, l, m)));
                vj *= shift_ratio(x0, prepended(xb, erased2(cfg.x, l, m)));
                put(row, b - 1, vi);
                put(row, L + npair + b - 1, vj);
            }
        }
        for (const auto& [r, s] : prs) {
            const int col = L + pair_index(r, s, L) - 1;
            scalar v{0.0, 0.0};
            if (l == r && m == s) {
                scalar lead = th(x(l) - x0 + g) * th(x(l) - xb + g) / (th(x(l) - x0) * th(x(l) - xb));
                scalar tail = th(x(m) - x0 + g) * th(x(m) - xb + g) / (th(x(m) - x0) * th(x(m) - xb));
                lead *= shift_ratio(x(l), erased2(cfg.x, l, m));
                tail *= shift_ratio(x(m), erased2(cfg.x, l, m));
                for (int j = 0; j < L; ++j) {
                    lead *= th(x(l) - mu(j)) * th(x(m) - mu(j) + g) / th(x(l) - mu(j) + g);
                    tail *= th(x(m) - mu(j));
                }
                v = lead - tail;
            } else if (l == r && m != s) {
                v = th(g) * th(x(m) - x(s) + T) / (th(T) * th(x(m) - x(s)));
                for (int j = 0; j < L; ++j) v *= th(x(s) - mu(j));
                v *= shift_ratio(x(s), prepended(x0, prepended(xb, erased3(cfg.x, l, m, s))));
            } else if (l != s && m == r) {
                v = -th(g) * th(x(l) - x(s) + T) / (th(T) * th(x(l) - x(s)));
                for (int j = 0; j < L; ++j)
                    v *= th(x(s) - mu(j)) * th(x(m) - mu(j) + g) / th(x(l) - mu(j) + g);
                v *= shift_ratio(x(s), prepended(x0, prepended(xb, erased3(cfg.x, l, m, s))));
            } else if (l == s && m != r) {
                v = th(g) * th(x(m) - x(r) + T) / (th(T) * th(x(m) - x(r)));
                for (int j = 0; j < L; ++j) v *= th(x(r) - mu(j));
                v *= shift_ratio(x(r), prepended(x0, prepended(xb, erased3(cfg.x, l, m, r))));
            } else if (l != r && m == s) {
                v = -th(g) * th(x(l) - x(r) + T) / (th(T) * th(x(l) - x(r)));
                for (int j = 0; j < L; ++j)
                    v *= th(x(r) - mu(j)) * th(x(m) - mu(j) + g) / th(x(l) - mu(j) + g);
                v *= shift_ratio(x(r), prepended(x0, prepended(xb, erased3(cfg.x, l, m, r))));
            } else {
                continue;
            }
            put(row, col, v);
        }
    }

    // Rows L+npair..d-1: relations labelled (raised reference, a).
    for (int a = 1; a <= L; ++a) {
        const int row = L + npair + a - 1;
        {
            // Diagonal raised-value coefficient.
            scalar v = -th(g) * th(x0 - xb + T) / (th(T) * th(x0 - xb));
            for (int j = 0; j < L; ++j)
                v *= th(xb - mu(j)) * th(x(a) - mu(j) + g) / th(x0 - mu(j) + g);
            v *= shift_ratio(xb, erased(cfg.x, a));
            put(row, a - 1, v);
        }
        for (const auto& [r, s] : prs) {
            const int col = L + pair_index(r, s, L) - 1;
            const int other = (a == s) ? r : (a == r) ? s : 0;
            if (other == 0) continue;
            scalar v = -th(g) * th(x0 - x(other) + T) / (th(T) * th(x0 - x(other)));
            for (int j = 0; j < L; ++j)
                v *= th(x(other) - mu(j)) * th(x(a) - mu(j) + g) / th(x0 - mu(j) + g);
            v *= shift_ratio(x(other), prepended(xb, erased2(cfg.x, r, s)));
            put(row, col, v);
        }
        for (int b = 1; b <= L; ++b) {
            scalar v{0.0, 0.0};
            if (a == b) {
                scalar lead = th(x0 - xb + g) / th(x0 - xb) * shift_ratio(x0, erased(cfg.x, a));
                scalar tail =
                    th(x(a) - xb + g) / th(x(a) - xb) * shift_ratio(x(a), erased(cfg.x, a));
                for (int j = 0; j < L; ++j) {
                    lead *= th(x0 - mu(j)) * th(x(a) - mu(j) + g) / th(x0 - mu(j) + g);
                    tail *= th(x(a) - mu(j));
                }
                v = lead - tail;
            } else {
                v = th(g) * th(x(a) - x(b) + T) / (th(T) * th(x(a) - x(b)));
                for (int j = 0; j < L; ++j) v *= th(x(b) - mu(j));
                v *= shift_ratio(x(b), prepended(xb, erased2(cfg.x, a, b)));
            }
            put(row, L + npair + b - 1, v);
        }
        {
            scalar m0 = th(g) * th(x(a) - xb + T) / (th(T) * th(x(a) - xb));
            for (int j = 0; j < L; ++j) m0 *= th(xb - mu(j));
            m0 *= shift_ratio(xb, erased(cfg.x, a));
            out.m0_column[static_cast<std::size_t>(row)] = m0;
        }
    }
    return out;
}

omega_assembly assemble_omega_from_relations(const spectral_config& cfg,
                                             const model_params& params) {
    const int L = params.L;
    const int npair = L * (L - 1) / 2;
    const int d = relation_family_size(L);
    omega_assembly out{dense_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d)),
                       std::vector<scalar>(static_cast<std::size_t>(d), scalar{0.0, 0.0})};
    std::vector<std::pair<int, int>> labels;
    for (int a = 1; a <= L; ++a) labels.emplace_back(a, 0);
    for (const auto& p : index_pairs(L)) labels.push_back(p);
    for (int a = 1; a <= L; ++a) labels.emplace_back(0, a);
    for (int row = 0; row < d; ++row) {
        const auto [l, m] = labels[static_cast<std::size_t>(row)];
        const coefficient_bundle b = coeff_AD_perm(l, m, cfg, params);
        for (int col = 1; col <= L; ++col) {
            out.matrix(static_cast<std::size_t>(row), static_cast<std::size_t>(col - 1)) =
                b.N[static_cast<std::size_t>(col)];
            out.matrix(static_cast<std::size_t>(row), static_cast<std::size_t>(L + npair + col - 1)) =
                b.Nbar[static_cast<std::size_t>(col)];
        }
        for (const auto& [pr, coeff] : b.O)
            out.matrix(static_cast<std::size_t>(row),
                       static_cast<std::size_t>(L + pair_index(pr.first, pr.second, L) - 1)) = coeff;
        out.m0_column[static_cast<std::size_t>(row)] = b.M0;
    }
    return out;
}

dense_matrix with_reference_column(const omega_assembly& a, const value_label& label, int L) {
    dense_matrix m = a.matrix;
    const int col = value_column(label, L);
    std::vector<scalar> neg(a.m0_column.size());
    for (std::size_t r = 0; r < neg.size(); ++r) neg[r] = -a.m0_column[r];
    m.set_column(static_cast<std::size_t>(col), neg);
    return m;
}

namespace {

std::vector<scalar> label_value_set(const value_label& label, const spectral_config& cfg) {
    switch (label.kind) {
    case value_label::kind_t::none:
        return cfg.x;
    case value_label::kind_t::upper:
        return substituted(cfg.x, label.i, cfg.x0);
    case value_label::kind_t::lower:
        return substituted(cfg.x, label.i, cfg.x0bar);
    case value_label::kind_t::pair:
        return substituted2(cfg.x, label.i, cfg.x0, label.j, cfg.x0bar);
    }
    throw domain_error("label_value_set: bad label");
}

} // namespace

scalar det_prefactor(const value_label& label, const spectral_config& cfg,
                     const model_params& params) {
    const int L = params.L;
    const scalar g = params.gamma;
    const scalar tau = params.tau;
    auto th = [&](scalar v) { return theta1(v, params.theta); };
    const int d_l = relation_family_size(L);
    const int d_lm1 = (L - 1) * (L + 2) / 2;

    scalar sum{0.0, 0.0};
    for (int i = 0; i < L; ++i)
        sum += cfg.x[static_cast<std::size_t>(i)] - params.mu[static_cast<std::size_t>(i)];

    scalar pref = (L % 2 == 0) ? scalar{1.0, 0.0} : scalar{-1.0, 0.0};
    pref *= int_pow(th((L + 1.0) * g) / th(tau + (L + 2.0) * g), d_lm1);
    pref *= int_pow(th(tau + (L + 1.0) * g) / th(static_cast<double>(L) * g), d_l);
    for (const scalar& v : label_value_set(label, cfg))
        for (int j = 0; j < L; ++j) pref *= th(v - params.mu[static_cast<std::size_t>(j)]);
    for (int k = 1; k <= L; ++k)
        pref *= th(static_cast<double>(k) * g) / th(tau + static_cast<double>(k) * g);
    pref *= th(sum + (L + 1.0) * g) / th(sum + tau + (L + 2.0) * g);
    return pref;
}

scalar z_det(const value_label& label, const spectral_config& cfg, const model_params& params) {
    const omega_assembly main = assemble_omega(cfg, params);
    model_params companion_params = params;
    companion_params.tau = -params.gamma;
    const omega_assembly companion = assemble_omega(cfg, companion_params);

    scalar det_main, det_comp;
    if (label.kind == value_label::kind_t::none) {
        det_main = lu_determinant(main.matrix).det;
        det_comp = lu_determinant(companion.matrix).det;
    } else {
        det_main = lu_determinant(with_reference_column(main, label, params.L)).det;
        det_comp = lu_determinant(with_reference_column(companion, label, params.L)).det;
    }
    return det_prefactor(label, cfg, params) * det_main / det_comp;
}

scalar special_tau_ratio(const value_label& label, const spectral_config& cfg,
                         const model_params& params) {
    auto th = [&](scalar v) { return theta1(v, params.theta); };
    scalar out{1.0, 0.0};
    switch (label.kind) {
    case value_label::kind_t::upper:
        for (const scalar& m : params.mu)
            out *= th(cfg.x0 - m) / th(cfg.x[static_cast<std::size_t>(label.i - 1)] - m);
        return out;
    case value_label::kind_t::lower:
        for (const scalar& m : params.mu)
            out *= th(cfg.x0bar - m) / th(cfg.x[static_cast<std::size_t>(label.i - 1)] - m);
        return out;
    case value_label::kind_t::pair:
        for (const scalar& m : params.mu)
            out *= th(cfg.x0 - m) * th(cfg.x0bar - m) /
                   (th(cfg.x[static_cast<std::size_t>(label.i - 1)] - m) *
                    th(cfg.x[static_cast<std::size_t>(label.j - 1)] - m));
        return out;
    case value_label::kind_t::none:
    default:
        throw domain_error("special_tau_ratio: label must name a substituted value");
    }
}

dense_matrix sixv_corner(bool rho_family, int replaced, scalar x0, const std::vector<scalar>& x,
                         scalar gamma, const std::vector<scalar>& mu) {
    const int L = static_cast<int>(mu.size());
    if (replaced < 0 || replaced > L) throw domain_error("sixv_corner: replaced out of range");
    const dense_matrix full = rho_family ? sixv_rho_matrix(x0, x, gamma, mu)
                                         : sixv_sigma_matrix(x0, x, gamma, mu);
    dense_matrix corner(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
    for (int a = 1; a <= L; ++a)
        for (int b = 1; b <= L; ++b)
            corner(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) =
                full(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    if (replaced >= 1)
        for (int a = 1; a <= L; ++a)
            corner(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(replaced - 1)) =
                -full(static_cast<std::size_t>(a), 0);
    return corner;
}

scalar sixv_z_det(bool rho_family, int replaced, scalar x0, const std::vector<scalar>& x,
                  scalar gamma, const std::vector<scalar>& mu) {
    const int L = static_cast<int>(mu.size());
    const dense_matrix m = sixv_corner(rho_family, replaced, x0, x, gamma, mu);
    scalar pref{1.0, 0.0};
    for (int k = 0; k < L; ++k) {
        if (rho_family)
            pref *= std::sinh(x0 - x[static_cast<std::size_t>(k)]) /
                    std::sinh(x0 - mu[static_cast<std::size_t>(k)]);
        else
            pref *= std::sinh(x[static_cast<std::size_t>(k)] - x0) /
                    std::sinh(x0 - mu[static_cast<std::size_t>(k)] + gamma);
    }
    const scalar det = (L == 0) ? scalar{1.0, 0.0} : lu_determinant(m).det;
    return det * pref;
}

} // namespace ellsos
