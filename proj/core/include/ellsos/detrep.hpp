#pragma once

#include "ellsos/funceq.hpp"
#include "ellsos/model.hpp"
#include "ellsos/numerics.hpp"

#include <vector>

namespace ellsos {

// Names one partition-function value over the fixed spectral data:
// none       Z(X)
// upper(i)   Z(X with x_i -> x0)
// lower(i)   Z(X with x_i -> x0bar)
// pair(i,j)  Z(X with x_i -> x0, x_j -> x0bar), i < j
struct value_label {
    enum class kind_t { none, upper, lower, pair };
    kind_t kind = kind_t::none;
    int i = 0;
    int j = 0;

    static value_label none() { return {}; }
    static value_label upper(int i) { return {kind_t::upper, i, 0}; }
    static value_label lower(int i) { return {kind_t::lower, i, 0}; }
    static value_label pair(int i, int j) { return {kind_t::pair, i, j}; }
};

// The assembled homogeneous system: matrix * values + m0_column * Z(X) = 0,
// rows ordered as the relation labels (a, lowered-ref) for a = 1..L, then
// unordered pairs in pair_index order, then (raised-ref, a).  Columns follow
// value_column below.
struct omega_assembly {
    dense_matrix matrix;
    std::vector<scalar> m0_column;
};

// Column of a substituted value, 0-based: upper(b) -> b-1,
// pair(r,s) -> L + pair_index(r,s) - 1, lower(b) -> L + npair + b - 1.
int value_column(const value_label& label, int L);

// System assembled from per-entry closed-form expressions.
omega_assembly assemble_omega(const spectral_config& cfg, const model_params& params);

// Same system assembled row by row from the permuted-relation coefficient
// bundles.  Kept as an independent route; the two must agree entrywise.
omega_assembly assemble_omega_from_relations(const spectral_config& cfg,
                                             const model_params& params);

// Copy of the system matrix with the labelled value's column replaced by the
// negated reference column.
dense_matrix with_reference_column(const omega_assembly& a, const value_label& label, int L);

// Scalar prefactor of the determinant representation for the labelled value.
scalar det_prefactor(const value_label& label, const spectral_config& cfg,
                     const model_params& params);

// Single-determinant value: prefactor times det of the (possibly
// column-replaced) system over the same construction at tau = -gamma.
scalar z_det(const value_label& label, const spectral_config& cfg, const model_params& params);

// Closed-form value of det(replaced)/det(plain) when tau = -gamma.
scalar special_tau_ratio(const value_label& label, const spectral_config& cfg,
                         const model_params& params);

// Trigonometric-limit determinant data: the L x L corner of the sigma (or
// rho) relation matrix; replaced >= 1 swaps that column for the negated
// beta = 0 column.
dense_matrix sixv_corner(bool rho_family, int replaced, scalar x0, const std::vector<scalar>& x,
                         scalar gamma, const std::vector<scalar>& mu);

// Determinant value of the trigonometric partition function: replaced = 0
// gives Z(X), replaced = i >= 1 gives Z(X with x_i -> x0).  The two families
// carry different prefactors but equal values.
scalar sixv_z_det(bool rho_family, int replaced, scalar x0, const std::vector<scalar>& x,
                  scalar gamma, const std::vector<scalar>& mu);

} // namespace ellsos
