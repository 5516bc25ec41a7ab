#ifndef ELLSOS_THETA_HPP
#define ELLSOS_THETA_HPP

#include <vector>

#include "ellsos/numerics.hpp"

namespace ellsos {

/// Owns the elliptic nome and the series truncation policy for every theta
/// evaluation in the library.
struct theta_context {
    double p = 0.2;      ///< elliptic nome, 0 < p < 1
    double eps = 1e-16;  ///< relative truncation tolerance
    int n_max = 64;      ///< hard cap on the series index

    bool valid() const { return p > 0.0 && p < 1.0 && eps > 0.0 && n_max >= 1; }
};

/// Odd theta function evaluated as
///
///   theta1(x) = i * sum_{n>=0} (-1)^n p^{(n+1/2)^2} sinh((2n+1) x) .
///
/// Terms can grow before they decay when |Re x| is large, so the stop rule
/// compares each term against the running maximum term magnitude, not the
/// partial sum.  The normalization is pinned by the small-nome limit
/// -i p^{-1/4} theta1(x) -> sinh(x) with constant exactly 1.
scalar theta1(scalar x, const theta_context& ctx);

/// prod theta1(num_k) / prod theta1(den_k).  Throws near_pole_error (carrying
/// the offending argument) when a denominator theta magnitude falls below
/// pole_floor.
scalar theta_ratio(const std::vector<scalar>& num, const std::vector<scalar>& den,
                   const theta_context& ctx, double pole_floor = 1e-300);

} // namespace ellsos

#endif
