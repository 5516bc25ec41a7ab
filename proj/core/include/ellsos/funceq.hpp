#pragma once

#include "ellsos/model.hpp"
#include "ellsos/numerics.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ellsos {

// Partition-function evaluator: arguments are the spectral set and tau.
using z_functional = std::function<scalar(const std::vector<scalar>&, scalar)>;

// Coefficients of one linear relation among partition-function values taken
// at substituted spectral sets.  Indexing is 1-based over sites; the exact
// value each slot multiplies depends on the relation family and is spelled
// out at the residual functions below.  O holds coefficients of values where
// an unordered pair {x_r, x_s} of spectral points is replaced by {x0, x0bar}.
struct coefficient_bundle {
    std::string tag;
    scalar M0{0.0, 0.0};
    std::vector<scalar> N;
    std::vector<scalar> Nbar;
    std::map<std::pair<int, int>, scalar> O;
};

// Column position of the unordered pair (r, s), 1 <= r < s <= L, in the
// lexicographic enumeration (1,2), (1,3), ..., (L-1,L).  Returns 1-based
// values 1 .. L(L-1)/2.
int pair_index(int r, int s, int L);

// Number of relations in the permuted family: L(L+3)/2.
int relation_family_size(int L);

// All unordered pairs (r, s) with r < s, in pair_index order.
std::vector<std::pair<int, int>> index_pairs(int L);

// Raising-type relation:
//   M0 Z_tau(X) + N[0] Z_{tau+g}(X) + sum_{i=1..L} N[i] Z_{tau+g}(X_i) = 0
// where X_i replaces x_i by x0.
coefficient_bundle coeff_A(const spectral_config& cfg, const model_params& params);

// Same relation conjugated by the swap x0 <-> x_l (l = 0 gives coeff_A).
// The reference value becomes Z_tau(X_l):
//   M0 Z_tau(X_l) + N[0] Z_{tau+g}(X) + sum_{i=1..L} N[i] Z_{tau+g}(X_i) = 0.
coefficient_bundle coeff_A_perm(int l, const spectral_config& cfg, const model_params& params);

// Lowering-type relation:
//   M0 Z_{tau+g}(X) + N[0] Z_tau(X) + sum_{i=1..L} N[i] Z_tau(Xbar_i) = 0
// where Xbar_i replaces x_i by x0bar.
coefficient_bundle coeff_D(const spectral_config& cfg, const model_params& params);

// Combined single-tau relation:
//   M0 Z(X) + sum_i N[i] Z(X_i) + sum_i Nbar[i] Z(Xbar_i) = 0,
// every value at the same tau.
coefficient_bundle coeff_AD(const spectral_config& cfg, const model_params& params);

// Combined relation conjugated by spectral-point swaps, labelled (l, m):
// l >= 1, m == 0 swaps x0 <-> x_l; l == 0, m >= 1 swaps x0bar <-> x_m;
// 1 <= l < m applies both (disjoint slots).  (0, 0) returns coeff_AD.
// The resulting relation runs over the fixed value family
//   Z(X), Z(X_b), Z(Xbar_b), Z(X with {x_r, x_s} -> {x0, x0bar}),
// with coefficients M0, N[b], Nbar[b], O[(r, s)].
coefficient_bundle coeff_AD_perm(int l, int m, const spectral_config& cfg,
                                 const model_params& params);

// Relation residuals: |sum of terms| / max |term|, evaluated with the
// supplied partition-function oracle.
double residual_A(int l, const spectral_config& cfg, const model_params& params,
                  const z_functional& z);
double residual_D(const spectral_config& cfg, const model_params& params, const z_functional& z);
double residual_AD(const spectral_config& cfg, const model_params& params, const z_functional& z);
double residual_AD_perm(int l, int m, const spectral_config& cfg, const model_params& params,
                        const z_functional& z);

// Weights w solving the tau-shift recursion by elimination on the permuted
// raising relations:
//   Z_{tau+g}(X) = w[0] Z_tau(X) + sum_{l=1..L} w[l] Z_tau(X_l).
std::vector<scalar> tau_shift_weights(const spectral_config& cfg, const model_params& params);

// Trigonometric-limit relation coefficients.  Row alpha, column beta of the
// (L+1)x(L+1) homogeneous systems
//   sum_{beta=0..L} sigma[alpha][beta] Z(X_beta) = 0   (raising family)
//   sum_{beta=0..L} rho[alpha][beta]   Z(X_beta) = 0   (lowering family)
// with X_0 = X and X_beta replacing x_beta by x0.  Both matrices are
// singular on the nose; their L x L corners drive the determinant formulas.
dense_matrix sixv_sigma_matrix(scalar x0, const std::vector<scalar>& x, scalar gamma,
                               const std::vector<scalar>& mu);
dense_matrix sixv_rho_matrix(scalar x0, const std::vector<scalar>& x, scalar gamma,
                             const std::vector<scalar>& mu);

// Residual of row `row` of the sigma (rho = false) or rho system against a
// tau-free evaluator.
double sixv_relation_residual(bool rho, int row, scalar x0, const std::vector<scalar>& x,
                              scalar gamma, const std::vector<scalar>& mu,
                              const std::function<scalar(const std::vector<scalar>&)>& z);

} // namespace ellsos
