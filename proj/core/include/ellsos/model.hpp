#ifndef ELLSOS_MODEL_HPP
#define ELLSOS_MODEL_HPP

#include <cstdint>
#include <vector>

#include "ellsos/numerics.hpp"
#include "ellsos/theta.hpp"

namespace ellsos {

/// Static model data: chain length, anisotropy, dynamical parameter,
/// inhomogeneities, and the theta evaluation policy.
struct model_params {
    int L = 1;
    scalar gamma{0.5, 0.1};
    scalar tau{0.3, -0.2};
    std::vector<scalar> mu;  ///< size L
    theta_context theta;

    bool valid() const { return L >= 1 && static_cast<int>(mu.size()) == L && theta.valid(); }
};

/// Spectral points x_1..x_L plus the two auxiliary points used by the
/// two-point functional equations.  The substitution families X_i^0, X_i^0bar
/// and X_{i,j}^{0,0bar} are derived from this by the helpers below.
struct spectral_config {
    std::vector<scalar> x;
    scalar x0{0.0, 0.0};
    scalar x0bar{0.0, 0.0};
};

/// X with x_i (1-based) replaced by v.
std::vector<scalar> substituted(const std::vector<scalar>& x, int i, scalar v);

/// X with x_i replaced by v and x_j replaced by w (i != j, 1-based).
std::vector<scalar> substituted2(const std::vector<scalar>& x, int i, scalar v, int j, scalar w);

/// Statistical weights a, b, c of the dynamical model at spectral point x and
/// dynamical parameter value t:
///   a_pm = [x+gamma],  b_pm = [t -/+ gamma][x]/[t],  c_pm = [t -/+ x][gamma]/[t].
struct bond_weights {
    scalar a_plus, a_minus, b_plus, b_minus, c_plus, c_minus;
};
bond_weights dynamical_weights(scalar x, scalar t, const model_params& params);

/// 4x4 dynamical R-matrix in the tensor basis (11,12,21,22), first factor
/// auxiliary:
///   [ a+  0   0   0  ]
///   [ 0   b+  c+  0  ]
///   [ 0   c-  b-  0  ]
///   [ 0   0   0   a- ]
/// Throws near_pole_error when [t] is below the pole floor (b, c entries
/// divide by it).
dense_matrix r_matrix(scalar x, scalar t, const model_params& params,
                      double pole_floor = 1e-300);

/// Trigonometric weights of the non-dynamical limit:
///   a = sinh(x+gamma), b = sinh(x), c = sinh(gamma).
struct sixv_weight_values {
    scalar a, b, c;
};
sixv_weight_values sixv_weights(scalar x, scalar gamma);

/// 4x4 symmetric six-vertex R-matrix built from sixv_weights.
dense_matrix sixv_r_matrix(scalar x, scalar gamma);

/// Eigenvalues of the diagonal monodromy generators on the reference vectors:
///   lambda_A    = prod [x - mu_j + gamma]
///   lambda_D    = ([tau+gamma]/[tau+(1-L)gamma]) prod [x - mu_j]
///   lambda_A_du = ([tau-gamma]/[tau+(L-1)gamma]) prod [x - mu_j]
///   lambda_D_du = prod [x - mu_j + gamma]
/// (the _du pair acts on the dual reference covector).
struct hw_eigenvalue_set {
    scalar lambda_A, lambda_D, lambda_A_dual, lambda_D_dual;
};
hw_eigenvalue_set hw_eigenvalues(scalar x, scalar tau, const model_params& params);

/// Entrywise-relative residual of the dynamical Yang-Baxter identity on the
/// 8-dimensional three-fold tensor space, with the shift operators realized
/// per weight sector of the spectator leg.
double dyb_residual(scalar x1, scalar x2, scalar x3, scalar tau, const model_params& params);

/// Entrywise-relative residual of the ordinary Yang-Baxter identity for the
/// six-vertex R-matrix.
double sixv_ybe_residual(scalar x1, scalar x2, scalar x3, scalar gamma);

} // namespace ellsos

#endif
