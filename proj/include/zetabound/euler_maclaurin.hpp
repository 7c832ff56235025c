#pragma once

// Euler-Maclaurin evaluation of zeta(s) together with its first two
// s-derivatives.  This is the slow reference path: it is valid for any s != 1
// with Re(s) > -2 and needs ~1.9 |s| / 2pi main-sum terms, so cost grows
// linearly in |Im s|.  At sigma >= 2 the result is at machine precision,
// which the explicit-formula checks rely on.
//
//   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//           + sum_{j>=1} B_{2j}/(2j)! * P_j(s) * N^(1-s-2j),
//   P_j(s) = s (s+1) ... (s+2j-2).
//
// Derivatives reuse the same terms: d/ds P_j = P_j * H_j with
// H_j = sum_i 1/(s+i), so every term and both derivatives come out of one
// pass.  The coefficient B_{2j}/(2j)! equals (-1)^{j+1} 2 zeta(2j)/(2pi)^{2j},
// which is generated at startup rather than transcribed.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "numerics.hpp"

namespace zetabound {

struct zeta_derivatives {
    cplx zeta;
    cplx d1;
    cplx d2;
};

namespace detail {

inline const std::vector<double>& em_coeff() {
    static const std::vector<double> c = [] {
        std::vector<double> v(31, 0.0);
        for (int j = 1; j <= 30; ++j) {
            // zeta(p) for p = 2j: direct sum through m = M plus the tail
            // M^(1-p)/(p-1) - M^-p/2 + p M^(-p-1)/12 - p(p+1)(p+2) M^(-p-3)/720,
            // leaving a relative error below 1e-14 at p = 2 and less above.
            const double p = 2.0 * j, M = 60.0;
            double z = 0.0;
            for (int m = 60; m >= 1; --m) z += std::pow(static_cast<double>(m), -p);
            z += std::pow(M, 1.0 - p) / (p - 1.0) - 0.5 * std::pow(M, -p);
            z += p * std::pow(M, -p - 1.0) / 12.0;
            z -= p * (p + 1.0) * (p + 2.0) * std::pow(M, -p - 3.0) / 720.0;
            v[j] = ((j % 2 == 1) ? 2.0 : -2.0) * z / std::pow(two_pi, p);
        }
        return v;
    }();
    return c;
}

} // namespace detail

// terms == 0 selects the automatic truncation; an explicit value is used by
// the dual-truncation consistency tests.
inline zeta_derivatives zeta_em_derivatives(cplx s, int terms = 0) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
        throw std::domain_error("zeta_em: pole at s = 1");
    if (s.real() <= -1.0)
        throw std::domain_error("zeta_em: implemented for Re(s) > -1");
    int N = terms > 0 ? terms
                      : static_cast<int>(std::max(24.0, 1.9 * std::abs(s) / two_pi + 9.0));
    cplx z = 0.0, z1 = 0.0, z2 = 0.0;
    for (int n = 1; n < N; ++n) {
        double ln = std::log(static_cast<double>(n));
        cplx w = std::exp(-s * ln);
        z += w;
        z1 -= ln * w;
        z2 += ln * ln * w;
    }
    double lN = std::log(static_cast<double>(N));
    cplx sm1 = s - 1.0;
    cplx a = std::exp((1.0 - s) * lN);
    z += a / sm1;
    z1 += -lN * a / sm1 - a / (sm1 * sm1);
    z2 += lN * lN * a / sm1 + 2.0 * lN * a / (sm1 * sm1) + 2.0 * a / (sm1 * sm1 * sm1);
    cplx b = std::exp(-s * lN);
    z += 0.5 * b;
    z1 -= 0.5 * lN * b;
    z2 += 0.5 * lN * lN * b;

    const auto& coeff = detail::em_coeff();
    cplx P = s;              // P_1
    cplx H = 1.0 / s;        // H_1
    cplx Hp = -1.0 / (s * s);
    for (int j = 1; j <= 30; ++j) {
        cplx T = coeff[j] * P * std::exp((1.0 - s - 2.0 * j) * lN);
        z += T;
        cplx g = H - lN;
        z1 += T * g;
        z2 += T * (g * g + Hp);
        if (std::abs(T) < 1e-22 * std::max(1.0, std::abs(z))) break;
        cplx f1 = s + (2.0 * j - 1.0), f2 = s + (2.0 * j);
        P *= f1 * f2;
        H += 1.0 / f1 + 1.0 / f2;
        Hp -= 1.0 / (f1 * f1) + 1.0 / (f2 * f2);
    }
    return {z, z1, z2};
}

inline cplx zeta_em(cplx s, int terms = 0) { return zeta_em_derivatives(s, terms).zeta; }

// zeta'/zeta and (zeta'/zeta)' from one Euler-Maclaurin pass.
struct log_deriv_pair {
    cplx logderiv;   // zeta'/zeta
    cplx logderiv_d; // (zeta'/zeta)'
};

inline log_deriv_pair zeta_log_derivative(cplx s) {
    auto d = zeta_em_derivatives(s);
    if (std::abs(d.zeta) < 1e-300)
        throw std::domain_error("zeta_log_derivative: evaluated at a zero");
    cplx r = d.d1 / d.zeta;
    return {r, d.d2 / d.zeta - r * r};
}

} // namespace zetabound
