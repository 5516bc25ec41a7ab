#include "ellsos/theta.hpp"

#include <cmath>
#include <string>

namespace ellsos {

scalar theta1(scalar x, const theta_context& ctx) {
    if (!ctx.valid()) throw domain_error("theta1: invalid context");
    scalar sum{0.0, 0.0};
    double running_max = 0.0;
    for (int n = 0; n <= ctx.n_max; ++n) {
        const double k = n + 0.5;
        const double coef = std::pow(ctx.p, k * k);
        scalar term = coef * std::sinh((2.0 * n + 1.0) * x);
        if (n & 1) term = -term;
        sum += term;
        const double mag = std::abs(term);
        if (mag > running_max) running_max = mag;
        if (n >= 1 && mag <= ctx.eps * running_max)
            return scalar{0.0, 1.0} * sum;
    }
    throw truncation_error("theta1: series did not converge within n_max (argument out of range for this nome/tolerance)");
}

scalar theta_ratio(const std::vector<scalar>& num, const std::vector<scalar>& den,
                   const theta_context& ctx, double pole_floor) {
    scalar value{1.0, 0.0};
    for (const scalar& d : den) {
        const scalar t = theta1(d, ctx);
        if (std::abs(t) < pole_floor)
            throw near_pole_error("theta_ratio: denominator at a theta zero", d);
        value /= t;
    }
    for (const scalar& n : num) value *= theta1(n, ctx);
    return value;
}

} // namespace ellsos
