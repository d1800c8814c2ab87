#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace polebound {

/// The universal scalar: double-precision complex.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Canonical value-level evaluation failure.
inline Complex non_finite() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
}

/// Shortest round-trip decimal for x; infinities print as "inf"/"-inf".
std::string format_double(double x);

/// "a+bi" form, e.g. "0", "2", "-1.1", "i", "2+3i", "1.5-0.5i".
std::string format_complex(Complex z);

/// Inverse of format_complex; accepts any "a", "bi", "a+bi", "a-bi" spelling.
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);

}  // namespace polebound
