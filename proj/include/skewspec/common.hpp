#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace skewspec {

using Complex = std::complex<double>;

// Quadrature failed to reach the requested tolerance within the subdivision
// budget (or an inner integral did not converge). Carries diagnostics.
struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Eigensolver failed to converge; message includes condition diagnostics.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Input shape/validation failures (odd Pfaffian dimension, non-skew input,
// unknown config keys, ...).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace skewspec
