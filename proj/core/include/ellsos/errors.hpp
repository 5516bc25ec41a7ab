#ifndef ELLSOS_ERRORS_HPP
#define ELLSOS_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ellsos {

/// Base class for all recoverable numerical failures in this library.
class numerics_error : public std::runtime_error {
public:
    explicit numerics_error(const std::string& what) : std::runtime_error(what) {}
};

/// A denominator theta value fell below the singularity floor.  Carries the
/// offending argument so callers can report or redraw.
class near_pole_error : public numerics_error {
public:
    near_pole_error(const std::string& what, std::complex<double> argument)
        : numerics_error(what), argument_(argument) {}
    std::complex<double> argument() const { return argument_; }

private:
    std::complex<double> argument_;
};

/// Series truncation did not converge within the configured maximum index.
class truncation_error : public numerics_error {
public:
    explicit truncation_error(const std::string& what) : numerics_error(what) {}
};

/// An LU pivot fell below the configured floor.
class singular_matrix_error : public numerics_error {
public:
    explicit singular_matrix_error(const std::string& what) : numerics_error(what) {}
};

/// Structurally invalid input (out-of-range index, mismatched sizes, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace ellsos

#endif
