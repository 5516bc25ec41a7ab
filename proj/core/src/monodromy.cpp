#include "ellsos/monodromy.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace ellsos {

namespace {

int chain_dim(int L) { return 1 << L; }

// Spin eigenvalue (+1 up / -1 down) of site k (1-based) in chain state s.
int site_spin(int s, int k, int L) { return ((s >> (L - k)) & 1) ? -1 : +1; }

// Total weight of chain state s (eigenvalue of the Cartan element).
int chain_weight(int s, int L) { return L - 2 * __builtin_popcount(static_cast<unsigned>(s)); }

// Applies the site-i local R factor to a full (aux x chain) vector of
// dimension 2^(L+1).  The dynamical argument is t minus gamma times the
// total spin of sites i+1..L of the state the factor acts on.
void apply_site_factor(std::vector<scalar>& v, int i, scalar xarg, scalar t,
                       const model_params& params) {
    const int L = params.L;
    const int d = chain_dim(L);
    const int bit = 1 << (L - i);
    const scalar g = params.gamma;
    for (int s0 = 0; s0 < d; ++s0) {
        if (s0 & bit) continue;
        int h_tail = 0;
        for (int k = i + 1; k <= L; ++k) h_tail += site_spin(s0, k, L);
        const bond_weights w =
            dynamical_weights(xarg, t - g * static_cast<double>(h_tail), params);
        const int s1 = s0 | bit;
        const scalar v00 = v[static_cast<std::size_t>(s0)];
        const scalar v01 = v[static_cast<std::size_t>(s1)];
        const scalar v10 = v[static_cast<std::size_t>(d + s0)];
        const scalar v11 = v[static_cast<std::size_t>(d + s1)];
        v[static_cast<std::size_t>(s0)] = w.a_plus * v00;
        v[static_cast<std::size_t>(s1)] = w.b_plus * v01 + w.c_plus * v10;
        v[static_cast<std::size_t>(d + s0)] = w.c_minus * v01 + w.b_minus * v10;
        v[static_cast<std::size_t>(d + s1)] = w.a_minus * v11;
    }
}

// Same transform applied to every column of a full-space matrix, computing
// each weight sector once.
void apply_site_factor_rows(dense_matrix& m, int i, scalar xarg, scalar t,
                            const model_params& params) {
    const int L = params.L;
    const int d = chain_dim(L);
    const int bit = 1 << (L - i);
    const scalar g = params.gamma;
    const std::size_t n = m.cols();
    for (int s0 = 0; s0 < d; ++s0) {
        if (s0 & bit) continue;
        int h_tail = 0;
        for (int k = i + 1; k <= L; ++k) h_tail += site_spin(s0, k, L);
        const bond_weights w =
            dynamical_weights(xarg, t - g * static_cast<double>(h_tail), params);
        const int s1 = s0 | bit;
        for (std::size_t c = 0; c < n; ++c) {
            const scalar v00 = m(static_cast<std::size_t>(s0), c);
            const scalar v01 = m(static_cast<std::size_t>(s1), c);
            const scalar v10 = m(static_cast<std::size_t>(d + s0), c);
            const scalar v11 = m(static_cast<std::size_t>(d + s1), c);
            m(static_cast<std::size_t>(s0), c) = w.a_plus * v00;
            m(static_cast<std::size_t>(s1), c) = w.b_plus * v01 + w.c_plus * v10;
            m(static_cast<std::size_t>(d + s0), c) = w.c_minus * v01 + w.b_minus * v10;
            m(static_cast<std::size_t>(d + s1), c) = w.a_minus * v11;
        }
    }
}

void apply_site_factor_sixv(std::vector<scalar>& v, int i, scalar xarg, scalar gamma, int L) {
    const int d = chain_dim(L);
    const int bit = 1 << (L - i);
    const sixv_weight_values w = sixv_weights(xarg, gamma);
    for (int s0 = 0; s0 < d; ++s0) {
        if (s0 & bit) continue;
        const int s1 = s0 | bit;
        const scalar v00 = v[static_cast<std::size_t>(s0)];
        const scalar v01 = v[static_cast<std::size_t>(s1)];
        const scalar v10 = v[static_cast<std::size_t>(d + s0)];
        const scalar v11 = v[static_cast<std::size_t>(d + s1)];
        v[static_cast<std::size_t>(s0)] = w.a * v00;
        v[static_cast<std::size_t>(s1)] = w.b * v01 + w.c * v10;
        v[static_cast<std::size_t>(d + s0)] = w.c * v01 + w.b * v10;
        v[static_cast<std::size_t>(d + s1)] = w.a * v11;
    }
}

double max_abs(const dense_matrix& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

} // namespace

state_vector all_up(int L) {
    state_vector v(static_cast<std::size_t>(chain_dim(L)), scalar{0.0, 0.0});
    v[0] = scalar{1.0, 0.0};
    return v;
}

state_vector all_down(int L) {
    state_vector v(static_cast<std::size_t>(chain_dim(L)), scalar{0.0, 0.0});
    v.back() = scalar{1.0, 0.0};
    return v;
}

monodromy_blocks monodromy(scalar x, scalar tau, const model_params& params) {
    if (!params.valid()) throw domain_error("monodromy: invalid params");
    const int L = params.L;
    const int d = chain_dim(L);
    const int full = 2 * d;
    monodromy_blocks out{dense_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d)),
                         dense_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d)),
                         dense_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d)),
                         dense_matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d)),
                         x, tau};
    dense_matrix t = dense_matrix::identity(static_cast<std::size_t>(full));
    for (int i = L; i >= 1; --i)
        apply_site_factor_rows(t, i, x - params.mu[static_cast<std::size_t>(i - 1)], tau, params);
    for (int so = 0; so < d; ++so)
        for (int si = 0; si < d; ++si) {
            const auto ro = static_cast<std::size_t>(so);
            const auto ci = static_cast<std::size_t>(si);
            out.A(ro, ci) = t(ro, ci);
            out.B(ro, ci) = t(ro, static_cast<std::size_t>(d + si));
            out.C(ro, ci) = t(static_cast<std::size_t>(d + so), ci);
            out.D(ro, ci) = t(static_cast<std::size_t>(d + so), static_cast<std::size_t>(d + si));
        }
    return out;
}

scalar bstring_amplitude(const std::vector<scalar>& y, scalar tau, const model_params& params) {
    if (!params.valid()) throw domain_error("bstring_amplitude: invalid params");
    const int L = params.L;
    const int d = chain_dim(L);
    const int n = static_cast<int>(y.size());
    state_vector v = all_up(L);
    std::vector<scalar> full(static_cast<std::size_t>(2 * d));
    for (int j = n; j >= 1; --j) {
        std::fill(full.begin(), full.end(), scalar{0.0, 0.0});
        for (int s = 0; s < d; ++s) full[static_cast<std::size_t>(d + s)] = v[static_cast<std::size_t>(s)];
        const scalar tj = tau + static_cast<double>(j) * params.gamma;
        for (int i = L; i >= 1; --i)
            apply_site_factor(full, i, y[static_cast<std::size_t>(j - 1)] - params.mu[static_cast<std::size_t>(i - 1)],
                              tj, params);
        for (int s = 0; s < d; ++s) v[static_cast<std::size_t>(s)] = full[static_cast<std::size_t>(s)];
    }
    return v[static_cast<std::size_t>(d - 1)];
}

scalar partition_function(const std::vector<scalar>& x, scalar tau, const model_params& params) {
    if (static_cast<int>(x.size()) != params.L)
        throw domain_error("partition_function: x size must equal L");
    return bstring_amplitude(x, tau, params);
}

scalar partition_function(const std::vector<scalar>& x, const model_params& params) {
    return partition_function(x, params.tau, params);
}

scalar partition_function(const spectral_config& cfg, const model_params& params) {
    return partition_function(cfg.x, params.tau, params);
}

scalar sixv_partition_function(const std::vector<scalar>& x, scalar gamma,
                               const std::vector<scalar>& mu) {
    const int L = static_cast<int>(mu.size());
    if (static_cast<int>(x.size()) != L)
        throw domain_error("sixv_partition_function: x and mu sizes differ");
    const int d = chain_dim(L);
    state_vector v = all_up(L);
    std::vector<scalar> full(static_cast<std::size_t>(2 * d));
    for (int j = L; j >= 1; --j) {
        std::fill(full.begin(), full.end(), scalar{0.0, 0.0});
        for (int s = 0; s < d; ++s) full[static_cast<std::size_t>(d + s)] = v[static_cast<std::size_t>(s)];
        for (int i = L; i >= 1; --i)
            apply_site_factor_sixv(full, i, x[static_cast<std::size_t>(j - 1)] - mu[static_cast<std::size_t>(i - 1)],
                                   gamma, L);
        for (int s = 0; s < d; ++s) v[static_cast<std::size_t>(s)] = full[static_cast<std::size_t>(s)];
    }
    return v[static_cast<std::size_t>(d - 1)];
}

namespace {

double relative_entry_residual(const dense_matrix& lhs, const dense_matrix& rhs) {
    const double scale = std::max(max_abs(lhs), max_abs(rhs));
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
    return worst / scale;
}

// Diagonal operator [z + gamma (h_coef H + shift)] with H the total-weight
// operator acting on the chain space.
dense_matrix weight_bracket(scalar z, double h_coef, double shift, const model_params& params,
                            bool inverted = false) {
    const int L = params.L;
    const int d = chain_dim(L);
    dense_matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int s = 0; s < d; ++s) {
        const scalar t = theta1(
            z + params.gamma * (h_coef * static_cast<double>(chain_weight(s, L)) + shift),
            params.theta);
        m(static_cast<std::size_t>(s), static_cast<std::size_t>(s)) = inverted ? scalar{1.0, 0.0} / t : t;
    }
    return m;
}

struct algebra_sampler {
    std::mt19937_64 gen;
    const model_params& params;

    explicit algebra_sampler(const model_params& p, std::uint64_t seed) : gen(seed), params(p) {}

    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    scalar point() { return {2.0 * uniform() - 1.0, uniform() - 0.5}; }

    // Draws x1, x2 plus an auxiliary point and a full spectral set, rejecting
    // configurations whose exchange-relation denominators sit near theta
    // zeros (pairwise differences and the tau lattice reachable by the
    // weight-shifted bracket factors).
    void draw(scalar& x1, scalar& x2, scalar& x0, std::vector<scalar>& xs) {
        const int L = params.L;
        for (int attempt = 0; attempt < 200; ++attempt) {
            x1 = point();
            x2 = point();
            x0 = point();
            xs.resize(static_cast<std::size_t>(L));
            for (auto& v : xs) v = point();
            std::vector<scalar> denoms{x1 - x2};
            for (int i = 0; i < L; ++i) {
                denoms.push_back(x0 - xs[static_cast<std::size_t>(i)]);
                for (int j = 0; j < L; ++j)
                    if (i != j) denoms.push_back(xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)]);
            }
            for (int k = -L; k <= 2 * L + 1; ++k)
                denoms.push_back(params.tau + static_cast<double>(k) * params.gamma);
            double scale = 0.0;
            std::vector<double> mags;
            mags.reserve(denoms.size());
            for (const scalar& a : denoms) {
                const double m = std::abs(theta1(a, params.theta));
                mags.push_back(m);
                scale = std::max(scale, m);
            }
            bool ok = true;
            for (const double m : mags)
                if (m < 1e-6 * scale) { ok = false; break; }
            if (ok) return;
        }
        throw numerics_error("verify_algebra: could not draw a generic sample");
    }
};

dense_matrix ystring(const std::vector<scalar>& xs, scalar tau, const model_params& params) {
    const int d = chain_dim(params.L);
    dense_matrix m = dense_matrix::identity(static_cast<std::size_t>(d));
    for (std::size_t j = 1; j <= xs.size(); ++j)
        m = m * monodromy(xs[j - 1], tau + static_cast<double>(j) * params.gamma, params).B;
    return m;
}

} // namespace

std::vector<residual_report> verify_algebra(const model_params& params, int sample_count,
                                            double tolerance, std::uint64_t seed) {
    if (!params.valid()) throw domain_error("verify_algebra: invalid params");
    if (params.L > 4) throw domain_error("verify_algebra: dense operator identities limited to L <= 4");
    const theta_context& th = params.theta;
    const scalar g = params.gamma;
    const scalar tau = params.tau;
    const int L = params.L;

    const std::vector<std::string> tags = {
        "exchange-AA", "exchange-BB", "exchange-AB", "exchange-BA",
        "cartan-D", "cartan-B", "exchange-DD", "exchange-DB-cartan", "exchange-BD-cartan",
        "lift-A-string", "lift-D-string"};
    std::vector<residual_report> reports(tags.size());
    std::ostringstream snap;
    snap << "L=" << L << " p=" << th.p << " gamma=" << g << " tau=" << tau
         << " samples=" << sample_count;
    for (std::size_t t = 0; t < tags.size(); ++t) {
        reports[t].tag = tags[t];
        reports[t].params_snapshot = snap.str();
    }
    auto record = [&](std::size_t idx, double residual, double scale) {
        if (residual > reports[idx].residual) {
            reports[idx].residual = residual;
            reports[idx].largest_term = scale;
        }
    };

    algebra_sampler sampler(params, seed);
    scalar x1, x2, x0;
    std::vector<scalar> xs;
    for (int s = 0; s < sample_count; ++s) {
        sampler.draw(x1, x2, x0, xs);

        const monodromy_blocks t1 = monodromy(x1, tau, params);
        const monodromy_blocks t2 = monodromy(x2, tau, params);
        const monodromy_blocks t1_up = monodromy(x1, tau + g, params);
        const monodromy_blocks t2_up = monodromy(x2, tau + g, params);
        const monodromy_blocks t1_dn = monodromy(x1, tau - g, params);
        const monodromy_blocks t2_dn = monodromy(x2, tau - g, params);

        const scalar th_tau = theta1(tau, th);
        const scalar th_up = theta1(tau + g, th);
        const scalar th_dn = theta1(tau - g, th);
        const scalar th_g = theta1(g, th);
        const scalar d12 = theta1(x1 - x2, th);

        {
            const dense_matrix lhs = t1.A * t2_dn.A;
            const dense_matrix rhs = t2.A * t1_dn.A;
            record(0, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const dense_matrix lhs = t1.B * t2_up.B;
            const dense_matrix rhs = t2.B * t1_up.B;
            record(1, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const dense_matrix lhs = t1.A * t2_dn.B;
            dense_matrix rhs = t2.B * t1_up.A;
            dense_matrix rhs2 = t1.B * t2_up.A;
            const scalar c1 = theta1(x2 - x1 + g, th) * th_tau / (theta1(x2 - x1, th) * th_up);
            const scalar c2 = theta1(tau + x1 - x2, th) * th_g / (d12 * th_up);
            for (std::size_t i = 0; i < rhs.rows(); ++i)
                for (std::size_t j = 0; j < rhs.cols(); ++j)
                    rhs(i, j) = c1 * rhs(i, j) + c2 * rhs2(i, j);
            record(2, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const dense_matrix lhs = t1.B * t2_up.A;
            dense_matrix rhs = t2.A * t1_dn.B;
            dense_matrix rhs2 = t1.A * t2_dn.B;
            const scalar c1 = theta1(x2 - x1 + g, th) * th_tau / (theta1(x2 - x1, th) * th_dn);
            const scalar c2 = theta1(tau + x2 - x1, th) * th_g / (theta1(x2 - x1, th) * th_dn);
            for (std::size_t i = 0; i < rhs.rows(); ++i)
                for (std::size_t j = 0; j < rhs.cols(); ++j)
                    rhs(i, j) = c1 * rhs(i, j) - c2 * rhs2(i, j);
            record(3, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }

        // Cartan family.  f(H) is a generic diagonal bracket at an unrelated
        // reference point, so the commutation is probed off any special line.
        const dense_matrix fH = weight_bracket(x0, 1.0, 0.0, params);
        const dense_matrix fH2 = weight_bracket(x0, 1.0, 2.0, params);
        {
            const dense_matrix lhs = t1.D * fH;
            const dense_matrix rhs = fH * t1.D;
            record(4, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const dense_matrix lhs = t1.B * fH;
            const dense_matrix rhs = fH2 * t1.B;
            record(5, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const dense_matrix lhs = t1.D * t2_up.D;
            const dense_matrix rhs = t2.D * t1_up.D;
            record(6, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const dense_matrix lhs = weight_bracket(tau, -1.0, 1.0, params) * (t1.D * t2_up.B);
            dense_matrix rhs = weight_bracket(tau, -1.0, 0.0, params) * (t2.B * t1_up.D);
            dense_matrix rhs2 = weight_bracket(tau + x1 - x2, -1.0, 0.0, params) * (t1.B * t2_up.D);
            const scalar c1 = theta1(x1 - x2 + g, th) / d12;
            const scalar c2 = th_g / d12;
            for (std::size_t i = 0; i < rhs.rows(); ++i)
                for (std::size_t j = 0; j < rhs.cols(); ++j)
                    rhs(i, j) = c1 * rhs(i, j) - c2 * rhs2(i, j);
            record(7, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const dense_matrix lhs = weight_bracket(tau, -1.0, -1.0, params) * (t1.B * t2_up.D);
            dense_matrix rhs = weight_bracket(tau, -1.0, 0.0, params) * (t2.D * t1_up.B);
            dense_matrix rhs2 = weight_bracket(tau + x2 - x1, -1.0, 0.0, params) * (t1.D * t2_up.B);
            const scalar c1 = theta1(x1 - x2 + g, th) / d12;
            const scalar c2 = th_g / d12;
            for (std::size_t i = 0; i < rhs.rows(); ++i)
                for (std::size_t j = 0; j < rhs.cols(); ++j)
                    rhs(i, j) = c1 * rhs(i, j) - c2 * rhs2(i, j);
            record(8, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }

        {
            const double Ld = static_cast<double>(L);
            const dense_matrix lhs = monodromy(x0, tau + 2.0 * g, params).A * ystring(xs, tau, params);
            const scalar thL2 = theta1(tau + (Ld + 2.0) * g, th);
            scalar c0 = theta1(tau + 2.0 * g, th) / thL2;
            for (int j = 0; j < L; ++j)
                c0 *= theta1(xs[static_cast<std::size_t>(j)] - x0 + g, th) /
                      theta1(xs[static_cast<std::size_t>(j)] - x0, th);
            dense_matrix rhs = ystring(xs, tau + g, params) * monodromy(x0, tau + (Ld + 2.0) * g, params).A;
            for (std::size_t i = 0; i < rhs.rows(); ++i)
                for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) = c0 * rhs(i, j);
            for (int i = 1; i <= L; ++i) {
                const scalar xi = xs[static_cast<std::size_t>(i - 1)];
                scalar ci = theta1(tau + 2.0 * g + x0 - xi, th) * th_g /
                            (theta1(x0 - xi, th) * thL2);
                for (int j = 1; j <= L; ++j)
                    if (j != i)
                        ci *= theta1(xs[static_cast<std::size_t>(j - 1)] - xi + g, th) /
                              theta1(xs[static_cast<std::size_t>(j - 1)] - xi, th);
                const dense_matrix term = ystring(substituted(xs, i, x0), tau + g, params) *
                                          monodromy(xi, tau + (Ld + 2.0) * g, params).A;
                for (std::size_t a = 0; a < rhs.rows(); ++a)
                    for (std::size_t b = 0; b < rhs.cols(); ++b) rhs(a, b) += ci * term(a, b);
            }
            record(9, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
        {
            const double Ld = static_cast<double>(L);
            const dense_matrix lhs = monodromy(x0, tau + g, params).D * ystring(xs, tau + g, params);
            scalar c0 = theta1(tau + 2.0 * g, th);
            for (int j = 0; j < L; ++j)
                c0 *= theta1(x0 - xs[static_cast<std::size_t>(j)] + g, th) /
                      theta1(x0 - xs[static_cast<std::size_t>(j)], th);
            dense_matrix rhs = ystring(xs, tau, params) *
                               monodromy(x0, tau + (Ld + 1.0) * g, params).D *
                               weight_bracket(tau, 1.0, 2.0, params, true);
            for (std::size_t i = 0; i < rhs.rows(); ++i)
                for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) = c0 * rhs(i, j);
            for (int i = 1; i <= L; ++i) {
                const scalar xi = xs[static_cast<std::size_t>(i - 1)];
                scalar ci = th_g * theta1(tau + 2.0 * g, th) / theta1(x0 - xi, th);
                for (int j = 1; j <= L; ++j)
                    if (j != i)
                        ci *= theta1(xi - xs[static_cast<std::size_t>(j - 1)] + g, th) /
                              theta1(xi - xs[static_cast<std::size_t>(j - 1)], th);
                dense_matrix shift(rhs.rows(), rhs.cols());
                for (int sidx = 0; sidx < chain_dim(L); ++sidx) {
                    const double h = chain_weight(sidx, L);
                    shift(static_cast<std::size_t>(sidx), static_cast<std::size_t>(sidx)) =
                        theta1(tau + g * (h + 1.0) + x0 - xi, th) /
                        (theta1(tau + g * (h + 1.0), th) * theta1(tau + g * (h + 2.0), th));
                }
                const dense_matrix term = ystring(substituted(xs, i, x0), tau, params) *
                                          monodromy(xi, tau + (Ld + 1.0) * g, params).D * shift;
                for (std::size_t a = 0; a < rhs.rows(); ++a)
                    for (std::size_t b = 0; b < rhs.cols(); ++b) rhs(a, b) -= ci * term(a, b);
            }
            record(10, relative_entry_residual(lhs, rhs), max_abs(lhs));
        }
    }

    for (auto& r : reports) r.pass = r.residual < tolerance;
    return reports;
}

} // namespace ellsos
