#ifndef ELLSOS_NUMERICS_HPP
#define ELLSOS_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "ellsos/errors.hpp"

namespace ellsos {

using scalar = std::complex<double>;

/// Dense row-major complex matrix.  Sized for the small dense problems this
/// library deals with (block matrices up to d_L x d_L and operators up to
/// 2^(L+1) x 2^(L+1) at desk scale).
class dense_matrix {
public:
    dense_matrix() = default;
    dense_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, scalar{0.0, 0.0}) {}

    static dense_matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    scalar* data() { return a_.data(); }
    const scalar* data() const { return a_.data(); }

    dense_matrix transposed() const;

    /// Replaces column j by the given values (used by the Cramer variants).
    void set_column(std::size_t j, const std::vector<scalar>& col);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<scalar> a_;
};

dense_matrix operator*(const dense_matrix& a, const dense_matrix& b);

/// Determinant plus a cheap conditioning indicator derived from the LU
/// diagonal (max |u_ii| / min |u_ii|).  The indicator feeds the tolerance
/// budget of downstream checks; it is not a rigorous condition number.
struct det_result {
    scalar det;
    double condition_indicator;
};

/// LU determinant with partial pivoting.  Throws singular_matrix_error when a
/// pivot magnitude falls below pivot_floor (absolute; theta entries can span
/// many orders, hence the near-denormal default).
det_result lu_determinant(const dense_matrix& m, double pivot_floor = 1e-300);

/// Solves a x = b for square a (b may have several right-hand-side columns).
dense_matrix solve(const dense_matrix& a, const dense_matrix& b,
                   double pivot_floor = 1e-300);

} // namespace ellsos

#endif
