#pragma once

// Riemann-Siegel evaluation of Z(t) = exp(i theta(t)) zeta(1/2 + it):
//
//   Z(t) = 2 sum_{n <= a} cos(theta(t) - t log n)/sqrt(n)
//        + (-1)^(N-1) a^(-1/2) [ C_0(p) + C_1(p)/a + ... + C_8(p)/a^8 ],
//
// with a = sqrt(t/2pi), N = floor(a), p = a - N.  C_0 has the closed form
// below; C_1..C_8 are evaluated from the frozen Chebyshev tables.  Against
// the Euler-Maclaurin reference the assembled Z is good to ~1.4e-10 at t = 50
// and to the double rounding floor (~4e-10 at t = 1e5, phase conditioning)
// above; see the cross-validation tests.

#include <cmath>
#include <stdexcept>

#include "numerics.hpp"
#include "rs_coeffs.hpp"
#include "theta.hpp"

namespace zetabound {

inline constexpr double riemann_siegel_min_t = 50.0;

namespace detail {

// C_0(p) = cos(2pi (p^2 - p - 1/16)) / cos(2pi p).  Entire: the zeros of the
// denominator at p = 1/4 + k/2 are cancelled.  Near those points both factors
// vanish linearly and the direct ratio loses precision, so a local sine-ratio
// form is used instead.
inline double rs_c0(double p) {
    double k = std::round((p - 0.25) / 0.5);
    double p0 = 0.25 + 0.5 * k;
    double d = p - p0;
    if (std::abs(d) > 0.04)
        return std::cos(two_pi * (p * p - p - 0.0625)) / std::cos(two_pi * p);
    double g0 = p0 * p0 - p0 - 0.0625;
    double sn = std::sin(two_pi * g0); // +-1 at a cancelled zero
    double sd = std::sin(two_pi * p0); // +-1
    if (std::abs(d) < 1e-9) return (sn / sd) * ((2.0 * p0 - 1.0) + d);
    double phi = two_pi * ((2.0 * p0 - 1.0) * d + d * d);
    return (sn / sd) * std::sin(phi) / std::sin(two_pi * d);
}

inline double rs_remainder(double p, double a) {
    double xi = 2.0 * p - 1.0;
    double corr = rs_c0(p);
    double inv_a = 1.0 / a, uj = 1.0;
    for (int j = 0; j < rs_coeff_orders; ++j) {
        uj *= inv_a;
        corr += cheb_eval(rs_coeff_table[j], rs_coeff_degree, xi) * uj;
    }
    return corr;
}

} // namespace detail

inline double riemann_siegel_z(double t) {
    if (!(t >= riemann_siegel_min_t))
        throw std::domain_error("riemann_siegel_z: requires t >= 50");
    double a = std::sqrt(t / two_pi);
    int N = static_cast<int>(a);
    double p = a - N;
    double th = riemann_siegel_theta(t);
    double main = 0.0;
    for (int n = 1; n <= N; ++n)
        main += std::cos(th - t * std::log(static_cast<double>(n))) / std::sqrt(static_cast<double>(n));
    double sign = (N % 2 == 0) ? -1.0 : 1.0; // (-1)^(N-1)
    return 2.0 * main + sign * detail::rs_remainder(p, a) / std::sqrt(a);
}

} // namespace zetabound
