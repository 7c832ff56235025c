#pragma once

// log Gamma and digamma for complex arguments in the right half plane, by the
// Stirling series after an upward recurrence shift.  The Bernoulli-number
// remainder after B_16/z^15 is below 1e-16 once |z| >= 12, which the shift
// guarantees.  Both functions return the standard branch (continuous for
// Re z > 0), so Im(log Gamma) is usable directly as a phase.

#include <complex>
#include <stdexcept>

#include "numerics.hpp"

namespace zetabound {

namespace detail {
// B_{2j} for j = 1..8
inline constexpr double bern2[9] = {0.0,
                                    1.0 / 6.0,
                                    -1.0 / 30.0,
                                    1.0 / 42.0,
                                    -1.0 / 30.0,
                                    5.0 / 66.0,
                                    -691.0 / 2730.0,
                                    7.0 / 6.0,
                                    -3617.0 / 510.0};
inline constexpr double half_log_two_pi = 0.91893853320467274178;
} // namespace detail

inline cplx lgamma_complex(cplx z) {
    if (z.real() <= 0.0 && z.imag() == 0.0)
        throw std::domain_error("lgamma_complex: nonpositive real argument");
    cplx shift = 0.0;
    while (std::abs(z) < 12.0 || z.real() < 2.0) {
        shift += std::log(z);
        z += 1.0;
    }
    cplx zi = 1.0 / z, zi2 = zi * zi;
    cplx series = 0.0;
    cplx p = zi;
    for (int j = 1; j <= 8; ++j) {
        series += detail::bern2[j] / (2.0 * j * (2.0 * j - 1.0)) * p;
        p *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + detail::half_log_two_pi + series - shift;
}

inline cplx digamma_complex(cplx z) {
    if (z.real() <= 0.0 && z.imag() == 0.0)
        throw std::domain_error("digamma_complex: nonpositive real argument");
    cplx acc = 0.0;
    while (std::abs(z) < 12.0 || z.real() < 2.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx zi = 1.0 / z, zi2 = zi * zi;
    cplx series = 0.0;
    cplx p = zi2;
    for (int j = 1; j <= 8; ++j) {
        series += detail::bern2[j] / (2.0 * j) * p;
        p *= zi2;
    }
    return std::log(z) - 0.5 * zi - series + acc;
}

} // namespace zetabound
