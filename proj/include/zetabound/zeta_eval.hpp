#pragma once

// Critical-line evaluation facade.  Two routes produce the same record type:
// the Riemann-Siegel fast path (t >= 50) and the Euler-Maclaurin reference
// path (any t > 0, cost linear in t).  zeta is reconstructed from Z and theta
// so that |zeta| == |Z| holds by construction in both routes.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "euler_maclaurin.hpp"
#include "riemann_siegel.hpp"
#include "theta.hpp"

namespace zetabound {

struct CriticalPoint {
    double t = 0.0;
    double theta = 0.0;
    double z = 0.0;    // Z(t), real by the functional equation
    cplx zeta;         // zeta(1/2 + it) = exp(-i theta) Z
};

inline CriticalPoint zeta_euler_maclaurin(double t) {
    if (!(t > 0.0)) throw std::domain_error("zeta_euler_maclaurin: t must be positive");
    double th = riemann_siegel_theta(t);
    cplx zeta = zeta_em(cplx(0.5, t));
    double z = (std::exp(cplx(0.0, th)) * zeta).real();
    return {t, th, z, std::exp(cplx(0.0, -th)) * z};
}

inline CriticalPoint zeta_riemann_siegel(double t) {
    double th = riemann_siegel_theta(t); // also validates t > 0
    double z = riemann_siegel_z(t);      // validates t >= 50
    return {t, th, z, std::exp(cplx(0.0, -th)) * z};
}

inline CriticalPoint critical_point(double t) {
    return t >= riemann_siegel_min_t ? zeta_riemann_siegel(t) : zeta_euler_maclaurin(t);
}

// Realness defect of exp(i theta) zeta(1/2+it) with zeta from the reference
// path.  Diagnostic for functional-equation self-consistency.
inline double z_imag_defect(double t) {
    if (!(t > 0.0)) throw std::domain_error("z_imag_defect: t must be positive");
    double th = riemann_siegel_theta(t);
    cplx zeta = zeta_em(cplx(0.5, t));
    return (std::exp(cplx(0.0, th)) * zeta).imag();
}

inline constexpr double log_abs_floor_default = -50.0;

struct LogAbsZeta {
    double value = 0.0;
    bool clipped = false;
};

// log |zeta(1/2+it)| with a configurable floor.  |Z| below exp(floor), or an
// exact zero of the evaluated Z, reports the floor with the clipped flag set.
inline LogAbsZeta log_abs_zeta(double t, double floor = log_abs_floor_default) {
    CriticalPoint cp = critical_point(t);
    double az = std::abs(cp.z);
    if (az == 0.0) return {floor, true};
    double v = std::log(az);
    if (v < floor) return {floor, true};
    return {v, false};
}

} // namespace zetabound
