// Generates a zero-ordinate table by scanning Z(t), for use as the
// --zeros input elsewhere.  Idempotent: if the output file already loads
// cleanly with the requested count, it is left untouched.
//
//   make_zeros <output-path> [count]
//
// The scan ceiling comes from inverting the zero-counting approximation
// theta(T)/pi + 1 = count with a safety margin, so the requested number
// of zeros always fits.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zetabound/zero_scan.hpp"
#include "zetabound/zeros.hpp"

namespace {

double scan_ceiling(std::size_t count) {
    double target = static_cast<double>(count) + 32.0;
    double lo = 20.0, hi = 1e8;
    for (int i = 0; i < 200 && hi - lo > 1e-3; ++i) {
        double mid = 0.5 * (lo + hi);
        double n = zetabound::riemann_siegel_theta(mid) / zetabound::pi + 1.0;
        (n < target ? lo : hi) = mid;
    }
    return hi;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::fprintf(stderr, "usage: %s <output-path> [count]\n", argv[0]);
        return 2;
    }
    std::string path = argv[1];
    std::size_t count = 100000;
    if (argc == 3) {
        long long v = std::atoll(argv[2]);
        if (v < 1) {
            std::fprintf(stderr, "make_zeros: count must be positive\n");
            return 2;
        }
        count = static_cast<std::size_t>(v);
    }

    try {
        auto existing = zetabound::load_zeros(path);
        if (existing.count() == count) {
            std::fprintf(stderr, "make_zeros: %s already holds %zu ordinates\n",
                         path.c_str(), count);
            return 0;
        }
        std::fprintf(stderr, "make_zeros: %s holds %zu ordinates, want %zu; rebuilding\n",
                     path.c_str(), existing.count(), count);
    } catch (const std::exception&) {
        // absent or unreadable; build it
    }

    double ceiling = scan_ceiling(count);
    std::fprintf(stderr, "make_zeros: scanning [14, %.1f] for %zu zeros\n", ceiling, count);
    auto zeros = zetabound::find_zeros(14.0, ceiling, count);
    if (zeros.size() != count) {
        std::fprintf(stderr, "make_zeros: found %zu of %zu\n", zeros.size(), count);
        return 3;
    }
    zetabound::check_zero_count(zeros);

    std::string tmp = path + ".tmp";
    std::FILE* out = std::fopen(tmp.c_str(), "w");
    if (!out) {
        std::fprintf(stderr, "make_zeros: cannot write %s\n", tmp.c_str());
        return 3;
    }
    std::fprintf(out, "# ordinates of the first %zu critical-line zeros,\n", count);
    std::fprintf(out, "# found by sign-change scan of Z(t); ascending, one per line\n");
    for (double g : zeros) std::fprintf(out, "%.12f\n", g);
    std::fclose(out);
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::fprintf(stderr, "make_zeros: cannot move %s into place\n", tmp.c_str());
        return 3;
    }
    std::fprintf(stderr, "make_zeros: wrote %s (last ordinate %.6f)\n", path.c_str(),
                 zeros.back());
    return 0;
}
