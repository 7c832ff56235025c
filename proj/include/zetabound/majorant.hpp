#pragma once

// The explicit majorant for log|zeta(1/2+it)|: a weighted prime-power sum
// at sigma0 = 1/2 + lambda/log x plus the (1+lambda)/2 * log T/log x
// penalty and an explicit slack standing in for the absolute-constant
// remainder.  Valid for 2 <= x <= T^2 and lambda >= lambda0, the root of
// e^-L = L + L^2/2.
//
// The prime-power sum is returned split into prime, prime-square, and
// higher-power parts; the total is assembled as (prime + square) + higher
// so the decomposition identity holds bit for bit.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "primes.hpp"
#include "zeta_eval.hpp"

namespace zetabound {

struct MajorantParams {
    double T;
    double x;
    double lambda;
    double slack = 5.0; // in units of 1/log x
};

struct Lambda0 {
    double value;
    double residual;
};

inline Lambda0 solve_lambda0() {
    auto f = [](double u) { return std::exp(-u) - u - 0.5 * u * u; };
    double lo = 0.1, hi = 1.0;
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    double v = 0.5 * (lo + hi);
    return {v, f(v)};
}

inline double lambda0() {
    static const double v = solve_lambda0().value;
    return v;
}

namespace detail {

inline void validate_majorant(const MajorantParams& p, const PrimeTable& table) {
    if (!(p.x >= 2.0 && p.x <= p.T * p.T))
        throw std::invalid_argument("majorant: need 2 <= x <= T^2");
    if (!(p.lambda >= lambda0() - 1e-12))
        throw std::invalid_argument("majorant: lambda below lambda0");
    if (!(p.slack >= 0.0))
        throw std::invalid_argument("majorant: slack must be nonnegative");
    if (static_cast<double>(table.limit) < std::floor(p.x))
        throw std::invalid_argument("majorant: prime table smaller than x");
}

} // namespace detail

struct PowerSumParts {
    double prime;  // n = p
    double square; // n = p^2
    double higher; // n = p^k, k >= 3

    double total() const { return (prime + square) + higher; }
};

// Re sum_{n<=x} Lambda(n)/(n^{sigma0+it} log n) * log(x/n)/log x over prime
// powers, accumulated in ascending n; Lambda(n)/log n is exactly 1/k.
inline PowerSumParts prime_power_sum_parts(double t, const MajorantParams& p,
                                           const PrimeTable& table) {
    detail::validate_majorant(p, table);
    double lx = std::log(p.x);
    double sigma0 = 0.5 + p.lambda / lx;
    PowerSumParts parts{0.0, 0.0, 0.0};
    for (const auto& e : table.mangoldt_support(static_cast<std::uint64_t>(p.x))) {
        double ln = std::log(static_cast<double>(e.n));
        int k = static_cast<int>(std::llround(ln / e.lambda));
        double term = std::exp(-sigma0 * ln) * std::cos(t * ln) / k * (lx - ln) / lx;
        if (k == 1) parts.prime += term;
        else if (k == 2) parts.square += term;
        else parts.higher += term;
    }
    return parts;
}

inline double prime_power_sum(double t, const MajorantParams& p, const PrimeTable& table) {
    return prime_power_sum_parts(t, p, table).total();
}

inline double prime_square_term(double t, const MajorantParams& p, const PrimeTable& table) {
    return prime_power_sum_parts(t, p, table).square;
}

inline double majorant_penalty(const MajorantParams& p) {
    return 0.5 * (1.0 + p.lambda) * std::log(p.T) / std::log(p.x);
}

inline double majorant_bound(double t, const MajorantParams& p, const PrimeTable& table) {
    return prime_power_sum(t, p, table) + majorant_penalty(p) + p.slack / std::log(p.x);
}

// The large-value split: A selected by the scale of V against log log T,
// x = T^{A/V}, z = x^{1/log log T}, and the prime sum over p <= x cut at z.
// s1/s2 are the moduli of the two pieces; combined is the modulus of their
// complex sum, kept for the triangle-inequality consistency check.
struct SplitBound {
    double A;
    double x;
    double z;
    double s1;
    double s2;
    double combined;
};

inline SplitBound s1_s2_split(double t, double V, double T, const PrimeTable& table) {
    if (!(V >= 3.0)) throw std::invalid_argument("s1_s2_split: need V >= 3");
    if (!(T >= 16.0)) throw std::invalid_argument("s1_s2_split: need T >= 16");
    double llT = std::log(std::log(T));
    double l3T = std::log(llT);
    double A;
    if (V <= llT) A = 0.5 * l3T;
    else if (V <= 0.5 * llT * l3T) A = llT / (2.0 * V) * l3T;
    else A = 1.0;
    double x = std::pow(T, A / V);
    double z = std::pow(x, 1.0 / llT);
    if (static_cast<double>(table.limit) < std::floor(x))
        throw std::invalid_argument("s1_s2_split: prime table smaller than x");
    double lx = std::log(x);
    double sigma0 = 0.5 + lambda0() / lx;
    cplx low = 0.0, high = 0.0;
    for (std::uint32_t q : table.primes) {
        if (q > x) break;
        double lp = std::log(static_cast<double>(q));
        cplx term = std::exp(-sigma0 * lp) * std::polar(1.0, -t * lp) * ((lx - lp) / lx);
        (q <= z ? low : high) += term;
    }
    return {A, x, z, std::abs(low), std::abs(high), std::abs(low + high)};
}

struct CorollaryRatio {
    double value;
    bool clipped;
};

// log|zeta(1/2+it)| * log log t / log t; informational at reachable t.
inline CorollaryRatio corollary_c_ratio(double t) {
    if (!(t >= 100.0)) throw std::invalid_argument("corollary_c_ratio: need t >= 100");
    LogAbsZeta la = log_abs_zeta(t);
    return {la.value * std::log(std::log(t)) / std::log(t), la.clipped};
}

} // namespace zetabound
