#pragma once

// Locates ordinates of critical-line zeros by scanning Z(t) for sign
// changes.  The step is an eighth of the local mean gap 2pi/log(t/2pi);
// steps without a sign change but with a dip in |Z| at the midpoint are
// subdivided, which resolves close pairs (the gap-0.038 pair near t=7005
// hides two zeros in one step).  Afterwards the count is audited against
// theta(gamma_n)/pi + 1 - n, whose block mean stays near zero exactly
// when no pair was missed; a missed pair shifts it by 2.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeta_eval.hpp"

namespace zetabound {

namespace detail {

inline double bisect_zero(double a, double b, double za) {
    // za = Z(a); assumes a sign change in [a, b]
    for (int i = 0; i < 60 && b - a > 1e-12; ++i) {
        double m = 0.5 * (a + b);
        double zm = critical_point(m).z;
        if (zm == 0.0) return m;
        if ((za < 0) != (zm < 0)) b = m;
        else { a = m; za = zm; }
    }
    return 0.5 * (a + b);
}

// Collect zeros inside [a, b] given same-signed endpoints by scanning at
// a much finer step.  Returns true if any were found.
inline bool rescan_step(double a, double b, double za, std::vector<double>& out) {
    const int parts = 64;
    double h = (b - a) / parts;
    bool found = false;
    double t0 = a, z0 = za;
    for (int i = 1; i <= parts; ++i) {
        double t1 = a + i * h;
        double z1 = critical_point(t1).z;
        if ((z0 < 0) != (z1 < 0)) {
            out.push_back(bisect_zero(t0, t1, z0));
            found = true;
        }
        t0 = t1;
        z0 = z1;
    }
    return found;
}

} // namespace detail

// Ascending ordinates of the zeros of Z in [t_min, t_max]; stops early
// after max_count zeros when max_count > 0.
inline std::vector<double> find_zeros(double t_min, double t_max,
                                      std::size_t max_count = 0) {
    if (!(t_min >= 5.0 && t_max > t_min))
        throw std::invalid_argument("find_zeros: need 5 <= t_min < t_max");
    std::vector<double> zeros;
    double t0 = t_min;
    double z0 = critical_point(t0).z;
    double tp = t0, zp = z0;           // previous scan point, for dip tests
    bool have_prev = false;
    while (t0 < t_max && (max_count == 0 || zeros.size() < max_count)) {
        double gap = two_pi / std::log(std::max(t0, 10.0) / two_pi);
        double h = gap / 8.0;
        double t1 = std::min(t0 + h, t_max);
        double z1 = critical_point(t1).z;
        if ((z0 < 0) != (z1 < 0)) {
            zeros.push_back(detail::bisect_zero(t0, t1, z0));
        } else if (have_prev && (zp < 0) == (z0 < 0) &&
                   std::fabs(z0) < std::fabs(zp) && std::fabs(z0) < std::fabs(z1)) {
            // |Z| dips at t0 without an endpoint sign change: either a
            // close pair straddles [tp, t1] or a genuine positive local
            // minimum; only a fine rescan can tell them apart.
            std::vector<double> pair;
            if (detail::rescan_step(tp, t1, zp, pair))
                zeros.insert(zeros.end(), pair.begin(), pair.end());
        }
        tp = t0; zp = z0; have_prev = true;
        t0 = t1; z0 = z1;
    }
    // a zero landing exactly on a scan point can be picked up twice by
    // overlapping rescans; genuine gaps are far wider than the tolerance
    std::vector<double> unique;
    unique.reserve(zeros.size());
    for (double g : zeros)
        if (unique.empty() || g > unique.back() + 1e-9) unique.push_back(g);
    if (max_count > 0 && unique.size() > max_count) unique.resize(max_count);
    return unique;
}

// Count audit.  theta(gamma_n)/pi + 1 - n equals -S at the zero, whose
// one-sided value right of the jump averages -1/2; after centering, the
// block mean stays within ~0.2 on a complete list, while a missed pair
// shifts every later term by +2 (a spurious entry by -1).
inline void check_zero_count(const std::vector<double>& zeros,
                             std::size_t block = 256, double tol = 0.75) {
    if (zeros.empty()) throw std::invalid_argument("check_zero_count: empty list");
    for (std::size_t base = 0; base < zeros.size(); base += block) {
        std::size_t end = std::min(base + block, zeros.size());
        double mean = 0.0;
        for (std::size_t i = base; i < end; ++i)
            mean += riemann_siegel_theta(zeros[i]) / pi + 1.5 - static_cast<double>(i + 1);
        mean /= static_cast<double>(end - base);
        if (std::fabs(mean) > tol)
            throw std::runtime_error(
                "check_zero_count: count drift " + std::to_string(mean) +
                " in block starting at zero " + std::to_string(base + 1));
    }
}

} // namespace zetabound
