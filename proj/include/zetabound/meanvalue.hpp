#pragma once

// Mean values of short prime-supported Dirichlet polynomials: the exact
// multinomial expansion of the k-th power, its diagonal sum against the
// k! (sum |a(p)|^2/p)^k bound, and direct quadrature of |A(t)|^2k for
// comparison with T times the diagonal.
//
// Expansion coefficients are built as (exact integer multiplicity) times
// (monomial product in ascending-prime order), so an independent
// convolution that follows the same convention reproduces them bit for
// bit.  That exactness is the point: the combinatorial inequality is
// checked with no quadrature noise in it.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numerics.hpp"
#include "primes.hpp"
#include "statistics.hpp"

namespace zetabound {

struct PrimeCoeffs {
    double x;
    std::map<std::uint64_t, cplx> coeffs; // one entry per prime p <= x
};

inline PrimeCoeffs make_prime_coeffs(double x, const PrimeTable& table) {
    if (!(x >= 2.0)) throw std::invalid_argument("make_prime_coeffs: need x >= 2");
    if (static_cast<double>(table.limit) < x)
        throw std::invalid_argument("make_prime_coeffs: prime table too short");
    PrimeCoeffs c{x, {}};
    for (std::uint32_t p : table.primes) {
        if (static_cast<double>(p) > x) break;
        c.coeffs.emplace(p, cplx{0.0, 0.0});
    }
    return c;
}

inline void fill_random_unit_disk(PrimeCoeffs& c, rng64& rng) {
    for (auto& kv : c.coeffs) kv.second = rng.unit_disk();
}

struct PowerExpansion {
    int k;
    std::map<std::uint64_t, cplx> terms; // n -> coefficient of n^(-1/2-it)
};

namespace detail {

// C(n, r) in 64 bits; the interleaved divisions are exact
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
    if (r > n - r) r = n - r;
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        c = c * (n - r + i) / i;
        if (c > (unsigned __int128)1 << 106)
            throw std::overflow_error("power_expand: multinomial too large");
    }
    return static_cast<std::uint64_t>(c);
}

} // namespace detail

// k-th power of sum a(p) p^(-1/2-it) as a Dirichlet polynomial over
// n <= x^k.  Each coefficient is multinomial(k; alpha) * prod a(p)^alpha
// with the multinomial in exact integer arithmetic and the product taken
// over primes in ascending order, one factor at a time.
inline PowerExpansion power_expand(const PrimeCoeffs& c, int k) {
    if (k < 1) throw std::invalid_argument("power_expand: need k >= 1");
    std::size_t r = c.coeffs.size();
    if (r == 0) throw std::invalid_argument("power_expand: empty coefficient set");

    // budget: the expansion has C(r+k-1, k) composed terms
    double budget = 1.0;
    for (int i = 1; i <= k; ++i)
        budget *= static_cast<double>(r + static_cast<std::size_t>(k) - i) / i;
    if (budget > 1e7) throw std::length_error("power_expand: over 1e7 composed terms");
    if (std::pow(c.x, k) > 1.8e18)
        throw std::overflow_error("power_expand: x^k exceeds 64-bit indices");

    std::vector<std::pair<std::uint64_t, cplx>> base(c.coeffs.begin(), c.coeffs.end());
    PowerExpansion e{k, {}};

    // descend over primes, assigning each an exponent; mult accumulates
    // k!/prod(alpha_i!) as prod of binomials over the exponents used so far
    struct Frame {
        std::size_t idx;
        int used;
        std::uint64_t n;
        cplx prod;
        std::uint64_t mult;
    };
    std::vector<Frame> stack{{0, 0, 1, {1.0, 0.0}, 1}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.used == k) {
            e.terms[f.n] = static_cast<double>(f.mult) * f.prod;
            continue;
        }
        if (f.idx == r) continue;
        int remaining = k - f.used;
        // alpha = 0 case first so larger exponents are pushed deeper
        stack.push_back({f.idx + 1, f.used, f.n, f.prod, f.mult});
        std::uint64_t n = f.n;
        cplx prod = f.prod;
        for (int alpha = 1; alpha <= remaining; ++alpha) {
            n *= base[f.idx].first;
            prod = prod * base[f.idx].second;
            unsigned __int128 mult =
                (unsigned __int128)f.mult *
                detail::binomial_u64(static_cast<std::uint64_t>(f.used + alpha),
                                     static_cast<std::uint64_t>(alpha));
            if (mult > (1ull << 53))
                throw std::overflow_error("power_expand: multinomial too large");
            stack.push_back({f.idx + 1, f.used + alpha, n, prod,
                             static_cast<std::uint64_t>(mult)});
        }
    }
    return e;
}

inline double diagonal_sum(const PowerExpansion& e) {
    double s = 0.0;
    for (const auto& kv : e.terms)
        s += std::norm(kv.second) / static_cast<double>(kv.first);
    return s;
}

// k! (sum |a(p)|^2/p)^k, the diagonal majorant; log space past the range
// where the direct product is safe
inline double diagonal_bound(const PrimeCoeffs& c, int k) {
    if (k < 1) throw std::invalid_argument("diagonal_bound: need k >= 1");
    double s = 0.0;
    for (const auto& kv : c.coeffs)
        s += std::norm(kv.second) / static_cast<double>(kv.first);
    if (s == 0.0) return 0.0;
    if (k <= 18) {
        double v = 1.0;
        for (int i = 2; i <= k; ++i) v *= i;
        for (int i = 0; i < k; ++i) v *= s;
        return v;
    }
    return std::exp(std::lgamma(k + 1.0) + k * std::log(s));
}

inline cplx polynomial_value(const PrimeCoeffs& c, double t) {
    cplx s{0.0, 0.0};
    for (const auto& kv : c.coeffs) {
        double lp = std::log(static_cast<double>(kv.first));
        s += kv.second * std::polar(std::exp(-0.5 * lp), -t * lp);
    }
    return s;
}

inline cplx expansion_value(const PowerExpansion& e, double t) {
    cplx s{0.0, 0.0};
    for (const auto& kv : e.terms) {
        double ln = std::log(static_cast<double>(kv.first));
        s += kv.second * std::polar(std::exp(-0.5 * ln), -t * ln);
    }
    return s;
}

struct PolynomialMoment {
    double value;
    double quadrature_error;
    bool hypothesis_ok; // x^k <= T / log T with T the interval start
};

// Simpson quadrature of |A(t)|^2k over [interval] on the grid's sample
// points.  The grid must resolve the fastest oscillation, wavelength
// 2 pi / (k log x).
inline PolynomialMoment polynomial_moment(const PrimeCoeffs& c, int k,
                                          std::pair<double, double> interval,
                                          const TGrid& grid, int threads = 1,
                                          bool force = false) {
    if (k < 1) throw std::invalid_argument("polynomial_moment: need k >= 1");
    validate_grid(grid);
    double wavelength = two_pi / (k * std::log(c.x));
    if (!(grid.spacing <= 0.25 * wavelength))
        throw std::invalid_argument(
            "polynomial_moment: grid spacing too coarse for the oscillation");
    double T = interval.first;
    bool ok = std::pow(c.x, k) <= T / std::log(T);
    if (!ok && !force)
        throw std::invalid_argument("polynomial_moment: x^k > T/log T (pass force to override)");

    std::size_t n = grid.count(), lo = 0, hi = n;
    while (lo < hi && grid.point(lo) < interval.first - 1e-12) ++lo;
    while (hi > lo && grid.point(hi - 1) > interval.second + 1e-12) --hi;
    std::size_t m = hi - lo;
    if (m < 3) throw std::invalid_argument("polynomial_moment: fewer than 3 samples in range");

    std::vector<double> f(m);
    const std::size_t chunk = 1024;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t base = next.fetch_add(chunk);
            if (base >= m) return;
            std::size_t end = std::min(base + chunk, m);
            for (std::size_t i = base; i < end; ++i)
                f[i] = std::pow(std::norm(polynomial_value(c, grid.point(lo + i))),
                                k); // |A|^2k = (|A|^2)^k, integer power
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    auto at = [&](std::size_t i) { return f[i]; };
    double full = detail::simpson(at, m, grid.spacing);
    double half = detail::simpson(at, m, grid.spacing, 2);
    return {full, std::fabs(full - half), ok};
}

} // namespace zetabound
