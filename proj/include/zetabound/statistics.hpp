#pragma once

// Value-distribution statistics of log|zeta| on the critical line: grid
// scans, the exceedance measure and its moment identity, the three-regime
// measure bound with reference curves, and the Gaussian-law comparison.
//
// Scans are chunked and may run on several threads; every sample lands in
// a preassigned slot, so results are bit-identical for any thread count.
// Displayed bounds take every implicit constant as 1; they are curves for
// comparison, not certified inequalities.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "majorant.hpp"
#include "numerics.hpp"
#include "zeta_eval.hpp"

namespace zetabound {

struct TGrid {
    double t_start;
    double t_end;
    double spacing;

    std::size_t count() const {
        return static_cast<std::size_t>(
                   std::floor((t_end - t_start) / spacing)) + 1;
    }
    double point(std::size_t i) const { return t_start + static_cast<double>(i) * spacing; }
};

inline void validate_grid(const TGrid& g) {
    if (!(g.spacing > 0.0)) throw std::invalid_argument("grid: spacing must be positive");
    if (!(g.t_end >= g.t_start)) throw std::invalid_argument("grid: t_end < t_start");
}

// spacing needed to resolve |zeta|'s oscillation, several samples per
// mean zero gap; enforced for measure estimation, advisory elsewhere
inline bool grid_resolves_measure(const TGrid& g) {
    return g.spacing <= 0.05 * two_pi / std::log(g.t_end);
}

struct Sample {
    double t;
    double value; // log|zeta(1/2+it)|, possibly clipped
    bool clipped;
};

struct ScanResult {
    TGrid grid;
    double floor = log_abs_floor_default;
    std::vector<Sample> samples; // ascending t, one per grid point
    std::size_t clipped_count = 0;
    double max_value = 0.0;      // over unclipped samples
    double min_unclipped = 0.0;
    double mean = 0.0;           // unclipped only
    double variance = 0.0;       // population variance, unclipped only

    double covered_length() const {
        return grid.spacing * static_cast<double>(samples.size());
    }
};

inline ScanResult scan(const TGrid& grid, int threads = 1,
                       double floor = log_abs_floor_default) {
    validate_grid(grid);
    if (!(grid.t_start >= 50.0)) throw std::invalid_argument("scan: need t_start >= 50");
    ScanResult r;
    r.grid = grid;
    r.floor = floor;
    std::size_t n = grid.count();
    r.samples.resize(n);

    const std::size_t chunk = 1024;
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::string err;
    auto worker = [&] {
        for (;;) {
            std::size_t base = next.fetch_add(chunk);
            if (base >= n) return;
            std::size_t end = std::min(base + chunk, n);
            for (std::size_t i = base; i < end; ++i) {
                double t = grid.point(i);
                try {
                    LogAbsZeta la = log_abs_zeta(t, floor);
                    r.samples[i] = {t, la.value, la.clipped};
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (err.empty())
                        err = "scan: at t = " + std::to_string(t) + ": " + e.what();
                    return;
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (!err.empty()) throw std::runtime_error(err);

    double sum = 0.0;
    bool first = true;
    for (const Sample& s : r.samples) {
        if (s.clipped) {
            ++r.clipped_count;
            continue;
        }
        if (first || s.value > r.max_value) r.max_value = s.value;
        if (first || s.value < r.min_unclipped) r.min_unclipped = s.value;
        first = false;
        sum += s.value;
    }
    std::size_t m = n - r.clipped_count;
    if (m > 0) {
        r.mean = sum / static_cast<double>(m);
        double ss = 0.0;
        for (const Sample& s : r.samples)
            if (!s.clipped) ss += (s.value - r.mean) * (s.value - r.mean);
        r.variance = ss / static_cast<double>(m);
    }
    return r;
}

// spacing * #{samples >= V}.  A clipped sample's true value is somewhere
// at or below the floor, so it counts only for thresholds strictly below
// the stored floor value.
inline double empirical_measure(const ScanResult& r, double V) {
    std::size_t hits = 0;
    for (const Sample& s : r.samples)
        if (s.clipped ? (V < s.value) : (s.value >= V)) ++hits;
    return r.grid.spacing * static_cast<double>(hits);
}

// --- measure bounds ---------------------------------------------------

struct TheoremBound {
    double value;
    int regime;         // 1, 2, or 3
    bool out_of_range;  // V fell below regime 1's lower edge
};

// The three-regime bound, implicit constant taken as 1.  Regime edges:
// V <= llT (regime 1, flagged out of range below 10 sqrt(llT)), then
// V <= llT log3T / 2 (regime 2), then regime 3.  Ties take the lower
// regime.
inline TheoremBound theorem_bound(double T, double V) {
    if (!(T >= 1000.0)) throw std::invalid_argument("theorem_bound: need T >= 1000");
    if (!(V >= std::exp(1.0) - 1e-12))
        throw std::invalid_argument("theorem_bound: need V >= e");
    double llT = std::log(std::log(T));
    double l3T = std::log(llT);
    if (V <= llT) {
        double value = T * V / std::sqrt(llT) *
                       std::exp(-V * V / llT * (1.0 - 4.0 / l3T));
        return {value, 1, V < 10.0 * std::sqrt(llT)};
    }
    if (V <= 0.5 * llT * l3T) {
        double inner = 1.0 - 7.0 * V / (4.0 * llT * l3T);
        double value = T * V / std::sqrt(llT) *
                       std::exp(-V * V / llT * inner * inner);
        return {value, 2, false};
    }
    return {T * std::exp(-V * std::log(V) / 33.0), 3, false};
}

// Regime 1 needs 10 sqrt(llT) <= V <= llT, which is vacuous until
// llT >= 100; at computable heights every regime 1 evaluation carries
// the out_of_range flag.
inline bool regime1_empty(double T) {
    double llT = std::log(std::log(T));
    return 10.0 * std::sqrt(llT) > llT;
}

struct ReferenceBounds {
    double eq3;          // T sqrt(llT)/V exp(-V^2/llT); infinite at V = 0
    double jutila;       // T exp(-V^2/llT), displayed O-term set to 0
    double selberg_tail; // T * upper tail of N(0, llT/2) at V
};

inline ReferenceBounds reference_bounds(double T, double V) {
    if (!(T >= 1000.0)) throw std::invalid_argument("reference_bounds: need T >= 1000");
    if (!(V >= 0.0)) throw std::invalid_argument("reference_bounds: need V >= 0");
    double llT = std::log(std::log(T));
    double g = std::exp(-V * V / llT);
    return {T * std::sqrt(llT) / V * g, T * g,
            T * normal_upper_tail(V / std::sqrt(0.5 * llT))};
}

struct RegimeParams {
    double T;
    double V;
    double A;
    double x;  // T^(A/V)
    double z;  // x^(1/llT)
    double V1; // V (1 - 7/(8A))
};

inline RegimeParams regime_params(double T, double V) {
    if (!(V >= 3.0)) throw std::invalid_argument("regime_params: need V >= 3");
    if (!(T >= 16.0)) throw std::invalid_argument("regime_params: need T >= 16");
    double llT = std::log(std::log(T));
    double l3T = std::log(llT);
    double A;
    if (V <= llT) A = 0.5 * l3T;
    else if (V <= 0.5 * llT * l3T) A = llT / (2.0 * V) * l3T;
    else A = 1.0;
    double x = std::pow(T, A / V);
    return {T, V, A, x, std::pow(x, 1.0 / llT), V * (1.0 - 7.0 / (8.0 * A))};
}

// --- moments ----------------------------------------------------------

struct MomentEstimate {
    double k;
    double t_lo;
    double t_hi;
    double value;
    double quadrature_error; // |full grid - half grid| Simpson difference
};

namespace detail {

// Composite Simpson over equally spaced samples f[0..m-1] with step h,
// stride selecting every stride-th sample; an odd panel at the end is
// closed with a trapezoid.
template <class F>
double simpson(const F& f, std::size_t m, double h, std::size_t stride = 1) {
    std::size_t n = (m - 1) / stride; // panels at this stride
    double hh = h * static_cast<double>(stride);
    if (n == 0) return 0.0;
    if (n == 1) return 0.5 * hh * (f(0) + f(stride));
    std::size_t pairs = n / 2;
    double s = 0.0;
    for (std::size_t p = 0; p < pairs; ++p) {
        std::size_t i = 2 * p * stride;
        s += f(i) + 4.0 * f(i + stride) + f(i + 2 * stride);
    }
    s *= hh / 3.0;
    if (n % 2 == 1) {
        std::size_t i = 2 * pairs * stride;
        s += 0.5 * hh * (f(i) + f(i + stride));
    }
    return s;
}

} // namespace detail

// Simpson quadrature of |zeta|^2k = e^(2k log|zeta|) over the sample range
// [t_lo, t_hi] of an existing scan.
inline MomentEstimate moment_direct(double k, const ScanResult& r,
                                    double t_lo, double t_hi) {
    if (!(k > 0.0)) throw std::invalid_argument("moment_direct: need k > 0");
    std::size_t lo = 0, hi = r.samples.size();
    while (lo < hi && r.samples[lo].t < t_lo - 1e-12) ++lo;
    while (hi > lo && r.samples[hi - 1].t > t_hi + 1e-12) --hi;
    std::size_t m = hi - lo;
    if (m < 3) throw std::invalid_argument("moment_direct: fewer than 3 samples in range");
    auto f = [&](std::size_t i) { return std::exp(2.0 * k * r.samples[lo + i].value); };
    double full = detail::simpson(f, m, r.grid.spacing);
    double half = detail::simpson(f, m, r.grid.spacing, 2);
    return {k, r.samples[lo].t, r.samples[hi - 1].t, full, std::fabs(full - half)};
}

inline MomentEstimate moment_direct(double k, const ScanResult& r) {
    return moment_direct(k, r, r.samples.front().t, r.samples.back().t);
}

inline MomentEstimate moment_direct(double k, std::pair<double, double> interval,
                                    const TGrid& grid, int threads = 1) {
    ScanResult r = scan(grid, threads);
    return moment_direct(k, r, interval.first, interval.second);
}

// The moment-measure identity: 2k int e^(2kV) meas(V) dV, trapezoid over
// v_grid plus the exact closed form meas * e^(2k v0) for the constant
// region below the grid.  v_grid should span the sample range; the CLI
// warns when it does not.
inline double moment_via_measure(double k, const ScanResult& r,
                                 const std::vector<double>& v_grid) {
    if (!(k > 0.0)) throw std::invalid_argument("moment_via_measure: need k > 0");
    if (v_grid.size() < 2)
        throw std::invalid_argument("moment_via_measure: v_grid needs >= 2 points");
    for (std::size_t i = 1; i < v_grid.size(); ++i)
        if (!(v_grid[i] > v_grid[i - 1]))
            throw std::invalid_argument("moment_via_measure: v_grid not ascending");
    double total = empirical_measure(r, v_grid.front()) *
                   std::exp(2.0 * k * v_grid.front());
    double prev_g = 2.0 * k * std::exp(2.0 * k * v_grid.front()) *
                    empirical_measure(r, v_grid.front());
    for (std::size_t i = 1; i < v_grid.size(); ++i) {
        double g = 2.0 * k * std::exp(2.0 * k * v_grid[i]) *
                   empirical_measure(r, v_grid[i]);
        total += 0.5 * (prev_g + g) * (v_grid[i] - v_grid[i - 1]);
        prev_g = g;
    }
    return total;
}

inline bool v_grid_covers(const ScanResult& r, const std::vector<double>& v_grid) {
    return v_grid.front() <= r.min_unclipped && v_grid.back() >= r.max_value;
}

// --- distribution comparisons ------------------------------------------

struct CorollaryBReport {
    double k;
    double threshold;      // k log log T
    double measure;
    double covered_length;
    double exponent;       // -log(measure/covered)/log log T, vs k^2
    double k_squared;
    bool measure_zero;
};

// Exceedance exponent at threshold k log log T, normalized by the scanned
// window rather than T itself (a full [T, 2T] scan makes them equal).
// Informational: the o(1) in the target exponent is uncontrolled here.
inline CorollaryBReport corollary_b_report(const ScanResult& r, double k) {
    double T = r.grid.t_start;
    double llT = std::log(std::log(T));
    double threshold = k * llT;
    double measure = empirical_measure(r, threshold);
    CorollaryBReport rep{k, threshold, measure, r.covered_length(),
                         std::numeric_limits<double>::infinity(), k * k, measure == 0.0};
    if (!rep.measure_zero)
        rep.exponent = -std::log(measure / rep.covered_length) / llT;
    return rep;
}

// Kolmogorov-Smirnov distance to the standard normal; clipped samples
// occupy the far left tail (they only add empirical mass below every
// unclipped value).
inline double ks_distance_normal(std::vector<double> values, std::size_t clipped = 0) {
    if (values.empty()) throw std::invalid_argument("ks_distance_normal: no samples");
    std::sort(values.begin(), values.end());
    double n = static_cast<double>(values.size() + clipped);
    double d = static_cast<double>(clipped) / n; // gap atop the clipped block
    for (std::size_t i = 0; i < values.size(); ++i) {
        double phi = normal_cdf(values[i]);
        double before = (static_cast<double>(clipped + i)) / n;
        double after = (static_cast<double>(clipped + i + 1)) / n;
        d = std::max({d, std::fabs(before - phi), std::fabs(after - phi)});
    }
    return d;
}

// KS distance of log|zeta| / sqrt(llT/2) against N(0,1), per the Gaussian
// law; the variance is theoretical, no empirical rescaling.
inline double selberg_compare(const ScanResult& r) {
    std::size_t m = r.samples.size() - r.clipped_count;
    if (m < 10000)
        throw std::invalid_argument("selberg_compare: need >= 10^4 unclipped samples");
    double sigma = std::sqrt(0.5 * std::log(std::log(r.grid.t_start)));
    std::vector<double> v;
    v.reserve(m);
    for (const Sample& s : r.samples)
        if (!s.clipped) v.push_back(s.value / sigma);
    return ks_distance_normal(std::move(v), r.clipped_count);
}

} // namespace zetabound
