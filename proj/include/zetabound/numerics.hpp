#pragma once

// Small shared numerical kernels: compensated summation, Clenshaw evaluation,
// Gauss-Legendre panels for tail integrals, normal distribution helpers, and a
// deterministic RNG.  Everything here is plain double precision.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zetabound {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;

using cplx = std::complex<double>;

// Compensated (Kahan) accumulator.  Used where a long sum feeds a tight
// tolerance; plain ascending-order summation is used elsewhere.
struct kahan_sum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

// Clenshaw recurrence for a Chebyshev series sum_k c_k T_k(x), x in [-1,1].
inline double cheb_eval(const double* c, int n, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = n - 1; k >= 1; --k) {
        double b0 = 2.0 * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + c[0];
}

// Gauss-Legendre nodes/weights on [-1,1], generated once by Newton iteration
// on the Legendre polynomial.  Avoids transcribed constant tables.
template <int N>
struct gauss_legendre {
    std::array<double, N> node{};
    std::array<double, N> weight{};
    gauss_legendre() {
        for (int i = 0; i < N; ++i) {
            double x = std::cos(pi * (i + 0.75) / (N + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= N; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = N * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= N; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = N * (x * p1 - p0) / (x * x - 1.0);
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline const gauss_legendre<20>& gl20() {
    static const gauss_legendre<20> g;
    return g;
}

template <class F>
double integrate_panel(F&& f, double a, double b) {
    const auto& g = gl20();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 20; ++i) s += g.weight[i] * f(mid + half * g.node[i]);
    return s * half;
}

// Integral of f over [a, infinity) for integrands decaying at least like
// log(u)/u^2: geometric panels [a, 2a], [2a, 4a], ... until a panel is
// negligible against the accumulated value.
template <class F>
double integrate_tail(F&& f, double a, double rel_tol = 1e-14, int max_panels = 80) {
    if (!(a > 0.0)) throw std::domain_error("integrate_tail: lower limit must be positive");
    double total = 0.0, lo = a;
    for (int k = 0; k < max_panels; ++k) {
        double hi = 2.0 * lo;
        double p = integrate_panel(f, lo, hi);
        total += p;
        if (std::abs(p) < rel_tol * (std::abs(total) + 1e-300) && k > 2) return total;
        lo = hi;
    }
    return total;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
inline double normal_upper_tail(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// splitmix64: tiny, portable, deterministic across platforms.  Used for every
// seeded draw in tests and the CLI so streams never depend on libstdc++
// distribution internals.
struct rng64 {
    std::uint64_t state;
    explicit rng64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    // uniform on the closed unit disk, by rejection
    cplx unit_disk() {
        for (;;) {
            double x = 2.0 * uniform01() - 1.0;
            double y = 2.0 * uniform01() - 1.0;
            if (x * x + y * y <= 1.0) return {x, y};
        }
    }
};

} // namespace zetabound
