#include "ellsos/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace ellsos {

namespace {

using eigen_cmat =
    Eigen::Matrix<scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using cmap = Eigen::Map<const eigen_cmat>;
using map = Eigen::Map<eigen_cmat>;

} // namespace

dense_matrix dense_matrix::identity(std::size_t n) {
    dense_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar{1.0, 0.0};
    return m;
}

dense_matrix dense_matrix::transposed() const {
    dense_matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void dense_matrix::set_column(std::size_t j, const std::vector<scalar>& col) {
    if (j >= cols_ || col.size() != rows_)
        throw domain_error("set_column: index or size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = col[i];
}

dense_matrix operator*(const dense_matrix& a, const dense_matrix& b) {
    if (a.cols() != b.rows()) throw domain_error("matrix product: shape mismatch");
    dense_matrix c(a.rows(), b.cols());
    cmap ea(a.data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    cmap eb(b.data(), static_cast<Eigen::Index>(b.rows()), static_cast<Eigen::Index>(b.cols()));
    map ec(c.data(), static_cast<Eigen::Index>(c.rows()), static_cast<Eigen::Index>(c.cols()));
    ec.noalias() = ea * eb;
    return c;
}

det_result lu_determinant(const dense_matrix& m, double pivot_floor) {
    if (m.rows() != m.cols()) throw domain_error("lu_determinant: non-square input");
    const auto n = static_cast<Eigen::Index>(m.rows());
    if (n == 0) return {scalar{1.0, 0.0}, 1.0};
    cmap em(m.data(), n, n);
    Eigen::PartialPivLU<eigen_cmat> lu(em);
    const auto diag = lu.matrixLU().diagonal();
    double umax = 0.0;
    double umin = std::numeric_limits<double>::infinity();
    scalar det{1.0, 0.0};
    for (Eigen::Index i = 0; i < n; ++i) {
        const double mag = std::abs(diag(i));
        umax = std::max(umax, mag);
        umin = std::min(umin, mag);
        det *= diag(i);
    }
    if (umin < pivot_floor)
        throw singular_matrix_error("lu_determinant: pivot below floor");
    det *= static_cast<double>(lu.permutationP().determinant());
    return {det, umax / umin};
}

dense_matrix solve(const dense_matrix& a, const dense_matrix& b, double pivot_floor) {
    if (a.rows() != a.cols()) throw domain_error("solve: non-square system");
    if (a.cols() != b.rows()) throw domain_error("solve: shape mismatch");
    const auto n = static_cast<Eigen::Index>(a.rows());
    cmap ea(a.data(), n, n);
    cmap eb(b.data(), n, static_cast<Eigen::Index>(b.cols()));
    Eigen::PartialPivLU<eigen_cmat> lu(ea);
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(diag(i)) < pivot_floor)
            throw singular_matrix_error("solve: pivot below floor");
    dense_matrix x(b.rows(), b.cols());
    map ex(x.data(), n, static_cast<Eigen::Index>(b.cols()));
    ex = lu.solve(eb);
    return x;
}

} // namespace ellsos
