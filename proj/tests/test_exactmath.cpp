#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sincsum/exactmath.hpp"
#include "sincsum/real.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

using namespace sincsum::exact;
using sincsum::Real;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, so flip that one entry.
std::vector<Rational> akiyama_tanigawa(unsigned n_max) {
    std::vector<Rational> out;
    std::vector<Rational> a(n_max + 1);
    for (unsigned m = 0; m <= n_max; ++m) {
        a[m] = Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (n_max >= 1) out[1] = -out[1];
    return out;
}

}  // namespace

TEST_CASE("bernoulli examples") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli agrees with an independent algorithm") {
    auto oracle = akiyama_tanigawa(80);
    for (unsigned n = 0; n <= 80; ++n) CHECK_MESSAGE(bernoulli(n) == oracle[n], "n=" << n);
}

TEST_CASE("bernoulli satisfies the defining recurrence") {
    for (unsigned n = 1; n <= 120; ++n) {
        Rational s = 0;
        for (unsigned j = 0; j <= n; ++j) s += Rational(binomial(n + 1, j)) * bernoulli(j);
        CHECK_MESSAGE(s == 0, "n=" << n);
    }
    for (unsigned k = 1; k <= 60; ++k) CHECK(bernoulli(2 * k + 1) == 0);
}

TEST_CASE("bernoulli table and concurrent access") {
    std::vector<Rational> seen(8);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < 8; ++t) pool.emplace_back([t, &seen] { seen[t] = bernoulli(150 + t); });
    for (auto& th : pool) th.join();
    auto table = bernoulli_table(157);
    REQUIRE(table.size() == 158);
    for (unsigned t = 0; t < 8; ++t) CHECK(seen[t] == table[150 + t]);
}

TEST_CASE("results are in lowest terms") {
    for (unsigned n = 0; n <= 100; ++n) CHECK(is_canonical(bernoulli(n)));
    for (long s = 2; s <= 60; s += 2) CHECK(is_canonical(zeta_even_pi_coeff(s)));
    Rational q = make_rational(6, -4);
    CHECK(is_canonical(q));
    CHECK(q == Rational(-3, 2));
    CHECK(q.get_den() > 0);
    CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("zeta pi coefficients") {
    CHECK(zeta_even_pi_coeff(2) == Rational(1, 6));
    CHECK(zeta_even_pi_coeff(4) == Rational(1, 90));
    CHECK(zeta_even_pi_coeff(6) == Rational(1, 945));
    CHECK(zeta_even_pi_coeff(-4) == 0);
    CHECK(zeta_even_pi_coeff(-2) == 0);
    for (long s = 2; s <= 40; s += 2) CHECK(zeta_even_pi_coeff(s) > 0);
    CHECK_THROWS_AS(zeta_even_pi_coeff(0), std::domain_error);
    CHECK_THROWS_AS(zeta_even_pi_coeff(3), std::domain_error);
    CHECK_THROWS_AS(zeta_even_pi_coeff(-5), std::domain_error);
}

TEST_CASE("zeta values match brute-force partial sums within the integral tail") {
    constexpr long kTerms = 1'000'000;
    constexpr int kMaxN = 20;
    std::vector<long double> partial(kMaxN + 1, 0.0L);
    for (long l = kTerms; l >= 1; --l) {
        long double inv2 = 1.0L / (static_cast<long double>(l) * l);
        long double p = 1.0L;
        for (int n = 1; n <= kMaxN; ++n) {
            p *= inv2;
            partial[n] += p;
        }
    }
    for (int n = 1; n <= kMaxN; ++n) {
        Rational c = zeta_even_pi_coeff(2 * n);
        Real exact = pow(Real::pi(256), 2 * n) * Real::parse(c.get_num().get_str(), 256) /
                     Real::parse(c.get_den().get_str(), 256);
        long double tail = std::pow(static_cast<long double>(kTerms), 1 - 2 * n) / (2 * n - 1);
        long double rounding = 4 * kTerms * 1.1e-19L * partial[n];
        long double diff = std::fabs(exact.to_long_double() - partial[n]);
        CHECK_MESSAGE(diff <= tail + rounding + 1e-18L, "n=" << n << " diff=" << (double)diff);
        CHECK(exact.to_long_double() >= partial[n] - rounding - 1e-18L);
    }
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(3) == 3);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(8) == 384);
    for (long k = 2; k <= 200; ++k) CHECK(double_factorial(k) == k * double_factorial(k - 2));
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    for (unsigned long n = 1; n <= 60; ++n)
        for (unsigned long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}
