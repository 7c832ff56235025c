// Command-line front end: every check and scan in the library behind one
// binary, each run emitting a CSV data file plus a JSON manifest that
// records the exact configuration.  Data files are bit-identical across
// reruns with the same configuration regardless of --threads; the
// manifest holds the wall time and so is not byte-stable.
//
// Exit codes: 0 success, 2 validation error (no data files written),
// 3 computation error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetabound/explicit_formula.hpp"
#include "zetabound/io.hpp"
#include "zetabound/majorant.hpp"
#include "zetabound/meanvalue.hpp"
#include "zetabound/statistics.hpp"
#include "zetabound/zeros.hpp"

namespace zb = zetabound;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string subcommand;
    double T = 0.0;
    double t_start = 0.0;
    double t_end = 0.0;
    double spacing = 0.0;
    double x = 0.0;
    double lambda = 0.0;
    double slack = 5.0;
    std::vector<double> k;
    std::string v_grid;
    std::string zeros_path;
    std::uint64_t seed = 1;
    std::string out_dir;
    int threads = 1;
};

// "a,b,c" or "lo:step:hi" (inclusive of hi up to rounding)
std::vector<double> parse_value_grid(const std::string& spec) {
    std::vector<double> v;
    if (spec.find(':') != std::string::npos) {
        double lo, step, hi;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &step, &hi) != 3 ||
            !(step > 0.0) || !(hi >= lo))
            throw std::invalid_argument("bad grid spec: " + spec);
        for (int i = 0;; ++i) {
            double x = lo + i * step;
            if (x > hi + 1e-12 * std::max(1.0, std::fabs(hi))) break;
            v.push_back(x);
        }
        return v;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid entry: " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (v.empty()) throw std::invalid_argument("empty grid spec");
    return v;
}

json config_json(const RunConfig& c) {
    json j{{"subcommand", c.subcommand}, {"seed", c.seed},
           {"threads", c.threads},       {"out", c.out_dir}};
    if (c.T != 0.0) j["T"] = c.T;
    if (c.spacing != 0.0) {
        j["t_start"] = c.t_start;
        j["t_end"] = c.t_end;
        j["spacing"] = c.spacing;
    }
    if (c.x != 0.0) j["x"] = c.x;
    if (c.lambda != 0.0) j["lambda"] = c.lambda;
    if (c.subcommand == "majorant-verify") j["slack"] = c.slack;
    if (!c.k.empty()) j["k"] = c.k;
    if (!c.v_grid.empty()) j["v_grid"] = c.v_grid;
    if (!c.zeros_path.empty()) j["zeros"] = c.zeros_path;
    return j;
}

void write_manifest(const RunConfig& c, const std::string& csv_name,
                    const json& summary, double wall_seconds) {
    json m{{"config", config_json(c)},
           {"outputs", json::array({csv_name})},
           {"summary", summary},
           {"versions", {{"library", zb::library_version}, {"manifest", 1}}},
           {"wall_time_seconds", wall_seconds}};
    std::string stem = csv_name.substr(0, csv_name.rfind('.'));
    std::ofstream out(std::filesystem::path(c.out_dir) / (stem + "_manifest.json"),
                      std::ios::binary);
    out << m.dump(2) << '\n';
}

std::string out_path(const RunConfig& c, const std::string& name) {
    return (std::filesystem::path(c.out_dir) / name).string();
}

int cmd_scan(const RunConfig& c) {
    zb::TGrid grid{c.t_start, c.t_end, c.spacing};
    zb::validate_grid(grid);
    auto t0 = std::chrono::steady_clock::now();
    zb::ScanResult r = zb::scan(grid, c.threads);
    std::filesystem::create_directories(c.out_dir);
    zb::CsvWriter csv(out_path(c, "scan.csv"), "t,log_abs_zeta,clipped");
    for (const zb::Sample& s : r.samples) csv.row(s.t, s.value, (int)s.clipped);
    csv.close();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json summary{{"samples", r.samples.size()}, {"clipped", r.clipped_count},
                 {"max", r.max_value},          {"min_unclipped", r.min_unclipped},
                 {"mean", r.mean},              {"variance", r.variance}};
    write_manifest(c, "scan.csv", summary, wall);
    std::printf("scan: %zu samples, max %.6f, mean %.6f, variance %.6f\n",
                r.samples.size(), r.max_value, r.mean, r.variance);
    return 0;
}

int cmd_majorant_verify(const RunConfig& c) {
    zb::TGrid grid{c.t_start, c.t_end, c.spacing};
    zb::validate_grid(grid);
    double T = c.T != 0.0 ? c.T : c.t_end;
    double lambda = c.lambda != 0.0 ? c.lambda : zb::lambda0();
    zb::MajorantParams mp{T, c.x, lambda, c.slack};
    zb::PrimeTable table = zb::sieve(static_cast<std::uint64_t>(c.x) + 1);
    (void)zb::majorant_bound(grid.t_start, mp, table); // surface bad params before the scan
    auto t0 = std::chrono::steady_clock::now();
    zb::ScanResult r = zb::scan(grid, c.threads);

    std::size_t n = r.samples.size();
    std::vector<double> bound(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t base = next.fetch_add(256);
            if (base >= n) return;
            for (std::size_t i = base; i < std::min(base + 256, n); ++i)
                bound[i] = zb::majorant_bound(r.samples[i].t, mp, table);
        }
    };
    if (c.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < c.threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::filesystem::create_directories(c.out_dir);
    zb::CsvWriter csv(out_path(c, "majorant_verify.csv"),
                      "t,log_abs_zeta,majorant,margin");
    double min_margin = 1e300;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double margin = bound[i] - r.samples[i].value;
        if (margin < min_margin) min_margin = margin;
        if (r.samples[i].value > bound[i]) ++violations;
        csv.row(r.samples[i].t, r.samples[i].value, bound[i], margin);
    }
    csv.close();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json summary{{"min_margin", min_margin}, {"violations", violations}, {"samples", n}};
    write_manifest(c, "majorant_verify.csv", summary, wall);
    std::printf("majorant-verify: %zu samples, min margin %.6f, violations %zu\n",
                n, min_margin, violations);
    return 0;
}

int cmd_measure(const RunConfig& c) {
    zb::TGrid grid{c.t_start, c.t_end, c.spacing};
    zb::validate_grid(grid);
    if (!zb::grid_resolves_measure(grid))
        throw std::invalid_argument("measure: grid spacing too coarse to resolve the measure");
    std::vector<double> vs = parse_value_grid(c.v_grid);
    double T = c.T != 0.0 ? c.T : c.t_start;
    for (double V : vs)
        (void)zb::theorem_bound(T, V); // validate the whole grid up front
    auto t0 = std::chrono::steady_clock::now();
    zb::ScanResult r = zb::scan(grid, c.threads);
    std::filesystem::create_directories(c.out_dir);
    zb::CsvWriter csv(out_path(c, "measure.csv"),
                      "V,measure,theorem_bound,regime,eq3,jutila,selberg_tail");
    for (double V : vs) {
        zb::TheoremBound tb = zb::theorem_bound(T, V);
        zb::ReferenceBounds rb = zb::reference_bounds(T, V);
        csv.row(V, zb::empirical_measure(r, V), tb.value, tb.regime, rb.eq3,
                rb.jutila, rb.selberg_tail);
    }
    csv.close();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json summary{{"rows", vs.size()},
                 {"regime1_empty", zb::regime1_empty(T)},
                 {"covered_length", r.covered_length()}};
    write_manifest(c, "measure.csv", summary, wall);
    std::printf("measure: %zu thresholds on %zu samples\n", vs.size(), r.samples.size());
    return 0;
}

int cmd_moments(const RunConfig& c) {
    zb::TGrid grid{c.t_start, c.t_end, c.spacing};
    zb::validate_grid(grid);
    std::vector<double> ks = c.k.empty() ? std::vector<double>{0.5, 1.0, 2.0} : c.k;
    for (double k : ks)
        if (!(k > 0.0)) throw std::invalid_argument("moments: need k > 0");
    auto t0 = std::chrono::steady_clock::now();
    zb::ScanResult r = zb::scan(grid, c.threads);
    std::vector<double> vg;
    for (int i = 0; i <= 400; ++i)
        vg.push_back(r.min_unclipped +
                     (r.max_value - r.min_unclipped) * i / 400.0 +
                     (i == 400 ? 1e-9 : 0.0));
    std::filesystem::create_directories(c.out_dir);
    zb::CsvWriter csv(out_path(c, "moments.csv"), "k,direct,via_measure,rel_diff");
    for (double k : ks) {
        zb::MomentEstimate direct = zb::moment_direct(k, r);
        double via = zb::moment_via_measure(k, r, vg);
        csv.row(k, direct.value, via, std::fabs(via - direct.value) / direct.value);
    }
    csv.close();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json summary{{"rows", ks.size()},
                 {"v_grid_points", vg.size()},
                 {"v_grid_covers", zb::v_grid_covers(r, vg)}};
    write_manifest(c, "moments.csv", summary, wall);
    std::printf("moments: %zu rows\n", ks.size());
    return 0;
}

int cmd_lemma1(const RunConfig& c) {
    double t = c.T != 0.0 ? c.T : 30.0;
    double x = c.x != 0.0 ? c.x : 100.0;
    if (c.zeros_path.empty()) throw std::invalid_argument("lemma1-check: --zeros required");
    zb::ZeroTable zeros = zb::load_zeros(c.zeros_path);
    zb::PrimeTable table = zb::sieve(static_cast<std::uint64_t>(x) + 1);
    zb::cplx s{2.0, t};
    auto t0 = std::chrono::steady_clock::now();
    double residual = zb::lemma1_check(s, x, zeros, table);
    double tail = zb::lemma1_tail_estimate(s, x, zeros);
    std::filesystem::create_directories(c.out_dir);
    zb::CsvWriter csv(out_path(c, "lemma1_check.csv"),
                      "t,x,zeros_used,residual,tail_estimate,ratio");
    csv.row(t, x, zeros.count(), residual, tail, residual / tail);
    csv.close();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json summary{{"residual", residual}, {"tail_estimate", tail},
                 {"zeros_used", zeros.count()}};
    write_manifest(c, "lemma1_check.csv", summary, wall);
    std::printf("lemma1-check: s = 2 + %gi, x = %g, residual %.3e (tail estimate %.3e)\n",
                t, x, residual, tail);
    return 0;
}

int cmd_lemma3(const RunConfig& c) {
    double x = c.x != 0.0 ? c.x : 31.0;
    int k = c.k.empty() ? 2 : static_cast<int>(c.k.front());
    double T = c.T != 0.0 ? c.T : 1e5;
    if (k < 1) throw std::invalid_argument("lemma3-check: need k >= 1");
    zb::PrimeTable table = zb::sieve(static_cast<std::uint64_t>(x) + 1);
    zb::PrimeCoeffs coeffs = zb::make_prime_coeffs(x, table);
    double spacing = 0.2 * zb::two_pi / (k * std::log(x));
    zb::TGrid grid{T, 2.0 * T, spacing};
    zb::rng64 rng(c.seed);
    const int trials = 20;
    auto t0 = std::chrono::steady_clock::now();
    std::filesystem::create_directories(c.out_dir);
    zb::CsvWriter csv(out_path(c, "lemma3_check.csv"),
                      "trial,k,x,diagonal_sum,diagonal_bound,moment,ratio");
    double rmin = 1e300, rmax = 0.0;
    bool hyp = true;
    for (int trial = 0; trial < trials; ++trial) {
        zb::fill_random_unit_disk(coeffs, rng);
        zb::PowerExpansion e = zb::power_expand(coeffs, k);
        double diag = zb::diagonal_sum(e);
        double bound = zb::diagonal_bound(coeffs, k);
        zb::PolynomialMoment pm =
            zb::polynomial_moment(coeffs, k, {T, 2.0 * T}, grid, c.threads);
        hyp = hyp && pm.hypothesis_ok;
        double ratio = diag > 0.0 ? pm.value / (T * diag) : 0.0;
        if (diag > 0.0) {
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
        }
        csv.row(trial, k, x, diag, bound, pm.value, ratio);
    }
    csv.close();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json summary{{"trials", trials}, {"ratio_min", rmin},
                 {"ratio_max", rmax}, {"hypothesis_ok", hyp}};
    write_manifest(c, "lemma3_check.csv", summary, wall);
    std::printf("lemma3-check: %d draws, moment/(T diag) in [%.4f, %.4f]\n",
                trials, rmin, rmax);
    return 0;
}

int cmd_lambda0(const RunConfig& c) {
    auto t0 = std::chrono::steady_clock::now();
    zb::Lambda0 l = zb::solve_lambda0();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::filesystem::create_directories(c.out_dir);
    zb::CsvWriter csv(out_path(c, "lambda0.csv"), "value,residual");
    csv.row(l.value, l.residual);
    csv.close();
    json summary{{"value", l.value}, {"residual", l.residual}};
    write_manifest(c, "lambda0.csv", summary, wall);
    std::printf("lambda0: %.16f (residual %.3e)\n", l.value, l.residual);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig c;
    CLI::App app{"stress tests for a critical-line bound on log|zeta|"};
    app.require_subcommand(1);

    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--t-start", c.t_start, "grid start")->required();
        sub->add_option("--t-end", c.t_end, "grid end")->required();
        sub->add_option("--spacing", c.spacing, "grid spacing")->required();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", c.out_dir, "output directory")->required();
        sub->add_option("--threads", c.threads, "worker threads");
        sub->add_option("--seed", c.seed, "random seed");
    };

    CLI::App* scan = app.add_subcommand("scan", "sample log|zeta(1/2+it)| on a grid");
    add_grid(scan);
    add_common(scan);

    CLI::App* mv = app.add_subcommand("majorant-verify",
                                      "check log|zeta| <= majorant on a grid");
    add_grid(mv);
    add_common(mv);
    mv->add_option("--x", c.x, "prime cutoff")->required();
    mv->add_option("--lambda", c.lambda, "shift parameter (default lambda0)");
    mv->add_option("--slack", c.slack, "additive slack over the penalty term");
    mv->add_option("--T", c.T, "height parameter (default t-end)");

    CLI::App* me = app.add_subcommand("measure", "exceedance measure vs bounds");
    add_grid(me);
    add_common(me);
    me->add_option("--v-grid", c.v_grid, "thresholds, 'a,b,c' or 'lo:step:hi'")->required();
    me->add_option("--T", c.T, "height for the bounds (default t-start)");

    CLI::App* mo = app.add_subcommand("moments", "direct vs measure-integrated moments");
    add_grid(mo);
    add_common(mo);
    mo->add_option("--k", c.k, "moment exponents")->delimiter(',');

    CLI::App* l1 = app.add_subcommand("lemma1-check", "smoothed explicit-formula residual");
    add_common(l1);
    l1->add_option("--T", c.T, "imaginary part of s = 2 + iT");
    l1->add_option("--x", c.x, "smoothing length");
    l1->add_option("--zeros", c.zeros_path, "zero ordinate file")->required();

    CLI::App* l3 = app.add_subcommand("lemma3-check", "Dirichlet polynomial mean values");
    add_common(l3);
    l3->add_option("--x", c.x, "prime cutoff (default 31)");
    l3->add_option("--k", c.k, "power (default 2)")->delimiter(',');
    l3->add_option("--T", c.T, "interval start, integrates over [T, 2T] (default 1e5)");

    CLI::App* l0 = app.add_subcommand("lambda0", "solve the shift equation");
    add_common(l0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    c.subcommand = app.get_subcommands().front()->get_name();
    try {
        if (scan->parsed()) return cmd_scan(c);
        if (mv->parsed()) return cmd_majorant_verify(c);
        if (me->parsed()) return cmd_measure(c);
        if (mo->parsed()) return cmd_moments(c);
        if (l1->parsed()) return cmd_lemma1(c);
        if (l3->parsed()) return cmd_lemma3(c);
        if (l0->parsed()) return cmd_lambda0(c);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "{\"error\":\"validation\",\"message\":\"%s\"}\n", e.what());
        return 2;
    } catch (const std::length_error& e) {
        std::fprintf(stderr, "{\"error\":\"validation\",\"message\":\"%s\"}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "{\"error\":\"computation\",\"message\":\"%s\"}\n", e.what());
        return 3;
    }
    return 2;
}
