#include <catch2/catch_amalgamated.hpp>

#include "zetabound/meanvalue.hpp"

using namespace zetabound;

namespace {

// independent expansion oracle: k-fold convolution over exponent vectors
// with integer sequence counts, monomials assembled in the same canonical
// ascending-prime order the library uses
std::map<std::uint64_t, cplx> conv_expand(const PrimeCoeffs& c, int k) {
    std::vector<std::pair<std::uint64_t, cplx>> base(c.coeffs.begin(), c.coeffs.end());
    std::size_t r = base.size();
    using Expo = std::vector<int>;
    std::map<Expo, std::uint64_t> counts{{Expo(r, 0), 1}};
    for (int step = 0; step < k; ++step) {
        std::map<Expo, std::uint64_t> next;
        for (const auto& kv : counts)
            for (std::size_t i = 0; i < r; ++i) {
                Expo e = kv.first;
                e[i] += 1;
                next[e] += kv.second;
            }
        counts = std::move(next);
    }
    std::map<std::uint64_t, cplx> terms;
    for (const auto& kv : counts) {
        std::uint64_t n = 1;
        cplx prod{1.0, 0.0};
        for (std::size_t i = 0; i < r; ++i)
            for (int a = 0; a < kv.first[i]; ++a) {
                n *= base[i].first;
                prod = prod * base[i].second;
            }
        terms[n] = static_cast<double>(kv.second) * prod;
    }
    return terms;
}

} // namespace

TEST_CASE("coefficient container holds exactly the primes up to x", "[meanvalue]") {
    PrimeTable table = sieve(100);
    PrimeCoeffs c = make_prime_coeffs(31.0, table);
    REQUIRE(c.coeffs.size() == 11);
    CHECK(c.coeffs.begin()->first == 2);
    CHECK(c.coeffs.rbegin()->first == 31);
    CHECK_THROWS_AS(make_prime_coeffs(1.0, table), std::invalid_argument);
    CHECK_THROWS_AS(make_prime_coeffs(500.0, table), std::invalid_argument);
}

TEST_CASE("squared expansion by hand", "[meanvalue]") {
    PrimeTable table = sieve(10);
    PrimeCoeffs c = make_prime_coeffs(3.0, table);
    for (auto& kv : c.coeffs) kv.second = {1.0, 0.0};
    PowerExpansion e = power_expand(c, 2);
    REQUIRE(e.terms.size() == 3);
    CHECK(e.terms[4] == cplx(1.0, 0.0));
    CHECK(e.terms[6] == cplx(2.0, 0.0));
    CHECK(e.terms[9] == cplx(1.0, 0.0));
    CHECK(diagonal_sum(e) == Catch::Approx(37.0 / 36.0).epsilon(1e-15));
    CHECK(diagonal_bound(c, 2) == Catch::Approx(25.0 / 18.0).epsilon(1e-15));
}

TEST_CASE("first power is the coefficient list verbatim", "[meanvalue]") {
    PrimeTable table = sieve(50);
    PrimeCoeffs c = make_prime_coeffs(50.0, table);
    rng64 rng(5);
    fill_random_unit_disk(c, rng);
    PowerExpansion e = power_expand(c, 1);
    REQUIRE(e.terms.size() == c.coeffs.size());
    for (const auto& kv : c.coeffs) {
        REQUIRE(e.terms.at(kv.first).real() == kv.second.real());
        REQUIRE(e.terms.at(kv.first).imag() == kv.second.imag());
    }
    // at k = 1 the bound collapses to the diagonal itself
    CHECK(diagonal_sum(e) == diagonal_bound(c, 1));
}

TEST_CASE("diagonal inequality over random draws", "[meanvalue]") {
    PrimeTable table = sieve(50);
    PrimeCoeffs c = make_prime_coeffs(50.0, table);
    rng64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        fill_random_unit_disk(c, rng);
        for (int k = 1; k <= 4; ++k) {
            double d = diagonal_sum(power_expand(c, k));
            double b = diagonal_bound(c, k);
            REQUIRE(d <= b * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("single-prime support makes the bound exact", "[meanvalue]") {
    // with all mass on one prime the multinomial is k!/k! = 1 and the
    // inequality's k! slack is consumed exactly
    PrimeTable table = sieve(10);
    PrimeCoeffs c = make_prime_coeffs(2.0, table);
    c.coeffs[2] = {0.3, -0.4};
    for (int k = 1; k <= 6; ++k) {
        double d = diagonal_sum(power_expand(c, k));
        double b = diagonal_bound(c, k);
        // d = |a|^2k/2^k, b = k! (|a|^2/2)^k: ratio is exactly k!
        REQUIRE(b / d == Catch::Approx(std::tgamma(k + 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("expansion matches the convolution oracle bit for bit", "[meanvalue]") {
    PrimeTable table = sieve(10);
    PrimeCoeffs c = make_prime_coeffs(10.0, table);
    rng64 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        fill_random_unit_disk(c, rng);
        for (int k = 1; k <= 3; ++k) {
            PowerExpansion e = power_expand(c, k);
            auto oracle = conv_expand(c, k);
            REQUIRE(e.terms.size() == oracle.size());
            auto it2 = oracle.begin();
            for (auto it1 = e.terms.begin(); it1 != e.terms.end(); ++it1, ++it2) {
                REQUIRE(it1->first == it2->first);
                REQUIRE(it1->second.real() == it2->second.real());
                REQUIRE(it1->second.imag() == it2->second.imag());
            }
        }
    }
}

TEST_CASE("coefficient sum telescopes to the k-th power", "[meanvalue]") {
    PrimeTable table = sieve(10);
    PrimeCoeffs c = make_prime_coeffs(10.0, table);
    rng64 rng(8);
    fill_random_unit_disk(c, rng);
    cplx base{0.0, 0.0};
    for (const auto& kv : c.coeffs) base += kv.second;
    PowerExpansion e = power_expand(c, 3);
    cplx total{0.0, 0.0};
    for (const auto& kv : e.terms) total += kv.second;
    cplx want = base * base * base;
    CHECK(std::abs(total - want) <= 1e-13 * std::abs(want));
}

TEST_CASE("expanded polynomial evaluates like the k-th power pointwise", "[meanvalue]") {
    PrimeTable table = sieve(10);
    PrimeCoeffs c = make_prime_coeffs(10.0, table);
    rng64 rng(77);
    fill_random_unit_disk(c, rng);
    PowerExpansion e = power_expand(c, 3);
    // the natural comparison scale is the expansion's coefficient mass
    double mass = 0.0;
    for (const auto& kv : e.terms)
        mass += std::abs(kv.second) / std::sqrt(static_cast<double>(kv.first));
    for (int i = 0; i < 200; ++i) {
        double t = rng.uniform(0.0, 1e4);
        double lhs = std::pow(std::abs(polynomial_value(c, t)), 3);
        double rhs = std::abs(expansion_value(e, t));
        REQUIRE(std::fabs(lhs - rhs) <= 1e-10 * mass);
    }
    for (int i = 0; i < 50; ++i) {
        double t = rng.uniform(0.0, 100.0);
        double lhs = std::pow(std::abs(polynomial_value(c, t)), 3);
        double rhs = std::abs(expansion_value(e, t));
        REQUIRE(lhs == Catch::Approx(rhs).epsilon(2e-9));
    }
}

TEST_CASE("expansion budget and index-width guards", "[meanvalue]") {
    PrimeTable table = sieve(60);
    PrimeCoeffs c = make_prime_coeffs(50.0, table); // 15 primes
    rng64 rng(4);
    fill_random_unit_disk(c, rng);
    CHECK_THROWS_AS(power_expand(c, 13), std::length_error);   // C(27,13) ~ 2e7 terms
    CHECK_THROWS_AS(power_expand(c, 12), std::overflow_error); // 50^12 > 2^63
    CHECK_THROWS_AS(power_expand(c, 0), std::invalid_argument);
}

TEST_CASE("diagonal bound switches to log space for large k", "[meanvalue]") {
    PrimeTable table = sieve(10);
    PrimeCoeffs c = make_prime_coeffs(10.0, table);
    for (auto& kv : c.coeffs) kv.second = {0.5, 0.0};
    double direct = diagonal_bound(c, 18);
    double logspace = std::exp(std::lgamma(19.0) + 18.0 * std::log(0.25 * (1.0 / 2 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7)));
    CHECK(direct == Catch::Approx(logspace).epsilon(1e-12));
    CHECK(std::isfinite(diagonal_bound(c, 120)));
    PrimeCoeffs zero = make_prime_coeffs(10.0, table);
    CHECK(diagonal_bound(zero, 3) == 0.0);
    CHECK(diagonal_sum(power_expand(zero, 3)) == 0.0);
}

TEST_CASE("moment of a single-prime polynomial is exact", "[meanvalue]") {
    PrimeTable table = sieve(10);
    PrimeCoeffs c = make_prime_coeffs(2.0, table);
    c.coeffs[2] = {1.0, 0.0};
    TGrid g{100.0, 200.0, 0.5};
    PolynomialMoment pm = polynomial_moment(c, 1, {100.0, 200.0}, g);
    CHECK(pm.value == Catch::Approx(50.0).epsilon(1e-14)); // |2^{-1/2-it}|^2 = 1/2
    CHECK(pm.hypothesis_ok);
}

TEST_CASE("moment hypothesis and spacing validation", "[meanvalue]") {
    PrimeTable table = sieve(40);
    PrimeCoeffs c = make_prime_coeffs(31.0, table);
    rng64 rng(6);
    fill_random_unit_disk(c, rng);
    TGrid coarse{1e5, 2e5, 1.0};
    CHECK_THROWS_AS(polynomial_moment(c, 2, {1e5, 2e5}, coarse), std::invalid_argument);
    TGrid fine{100.0, 200.0, 0.05};
    // x^k = 961 > 100/log 100
    CHECK_THROWS_AS(polynomial_moment(c, 2, {100.0, 200.0}, fine), std::invalid_argument);
    PolynomialMoment forced = polynomial_moment(c, 2, {100.0, 200.0}, fine, 1, true);
    CHECK_FALSE(forced.hypothesis_ok);
}

TEST_CASE("moment ratio sits near the diagonal under the hypothesis", "[meanvalue]") {
    PrimeTable table = sieve(40);
    PrimeCoeffs c = make_prime_coeffs(31.0, table);
    double spacing = 0.2 * two_pi / (2.0 * std::log(31.0));
    TGrid g{1e5, 2e5, spacing};
    rng64 rng(20250816);
    for (int trial = 0; trial < 3; ++trial) {
        fill_random_unit_disk(c, rng);
        double diag = diagonal_sum(power_expand(c, 2));
        PolynomialMoment pm = polynomial_moment(c, 2, {1e5, 2e5}, g);
        REQUIRE(pm.hypothesis_ok);
        double ratio = pm.value / (1e5 * diag);
        REQUIRE(ratio > 0.1);
        REQUIRE(ratio < 10.0);
    }
}

TEST_CASE("moment quadrature is thread-count invariant", "[meanvalue]") {
    PrimeTable table = sieve(40);
    PrimeCoeffs c = make_prime_coeffs(13.0, table);
    rng64 rng(14);
    fill_random_unit_disk(c, rng);
    TGrid g{1e4, 2e4, 0.1};
    PolynomialMoment a = polynomial_moment(c, 2, {1e4, 2e4}, g, 1);
    PolynomialMoment b = polynomial_moment(c, 2, {1e4, 2e4}, g, 3);
    CHECK(a.value == b.value);
}
