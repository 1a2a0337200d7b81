#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sincsum/exactmath.hpp"
#include "sincsum/specfun.hpp"

#include <cmath>
#include <stdexcept>

using namespace sincsum;
using namespace sincsum::specfun;

namespace {

constexpr mpfr_prec_t kBits = 256;

Real R(double v, mpfr_prec_t bits = kBits) { return Real(v, bits); }

bool close(const Real& a, const Real& b, double rel) {
    Real scale = abs(b);
    if (scale < 1.0) scale = Real(1.0, scale.precision());
    return abs(a - b) <= scale * rel;
}

// j_n(z) = z^n sum_k (-z^2/2)^k / (k! (2n+2k+1)!!), summed at high precision.
Real ascending_j(unsigned n, double zd, mpfr_prec_t bits) {
    Real z(zd, bits);
    Real z2 = -square(z) / 2L;
    Real term = pow(z, n) / Real::parse(exact::double_factorial(2 * n + 1).get_str(), bits);
    Real sum = term;
    for (long k = 1; k < 4000; ++k) {
        term *= z2;
        term /= k * (2L * n + 2 * k + 1);
        sum += term;
        if (!term.is_zero() && abs(term) < ldexp(abs(sum), -static_cast<long>(bits) - 8) && k > zd) break;
    }
    return sum;
}

// J_{1/2}(z) = sum_k (-1)^k (z/2)^{2k+1/2} / (k! Gamma(k+3/2)).
Real ascending_j_half0(double zd, mpfr_prec_t bits) {
    Real z(zd, bits);
    Real half = z / 2L;
    Real pi = Real::pi(bits);
    Real gamma = sqrt(pi) / 2L;  // Gamma(3/2)
    Real term = sqrt(half) / gamma;
    Real sum = term;
    for (long k = 1; k < 2000; ++k) {
        term *= -square(half);
        term /= k;
        term /= Real(static_cast<double>(k) + 0.5, bits);
        sum += term;
        if (!term.is_zero() && abs(term) < ldexp(abs(sum), -static_cast<long>(bits) - 8)) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("sinc examples") {
    Real pi = Real::pi(kBits);
    CHECK(sinc(R(0.0)) == 1.0);
    CHECK(abs(sinc(pi)) < Real::parse("1e-75", kBits));
    CHECK(close(sinc(pi / 2L), Real(2L, kBits) / pi, 1e-75));
    CHECK(sinc(R(1e-30)).precision() == kBits);
    CHECK(close(sinc(R(1e-30)), R(1.0) - square(R(1e-30)) / 6L, 1e-75));
}

TEST_CASE("sinc is even and bounded") {
    for (double z : {1e-40, 1e-20, 1e-5, 0.3, 1.0, 2.7, 10.0, 123.456, 1e6}) {
        Real a = sinc(R(z));
        CHECK(a == sinc(R(-z)));
        CHECK(abs(a) <= 1.0);
    }
}

TEST_CASE("spherical bessel examples") {
    Real pi = Real::pi(kBits);
    CHECK(close(spherical_bessel_j(1, pi), Real(1L, kBits) / pi, 1e-74));
    for (unsigned n = 1; n <= 12; ++n) CHECK(spherical_bessel_j(n, R(0.0)).is_zero());
    CHECK(spherical_bessel_j(0, R(0.0)) == 1.0);
    for (double z : {0.2, 1.0, 3.7, 42.0}) CHECK(close(spherical_bessel_j(0, R(z)), sinc(R(z)), 1e-75));
}

TEST_CASE("spherical bessel matches the ascending series") {
    for (unsigned n : {0u, 1u, 2u, 3u, 5u, 8u, 15u, 30u}) {
        for (double z : {0.1, 0.5, 1.0, 2.5, 7.0, 12.0, 20.0, 35.0}) {
            Real oracle = ascending_j(n, z, 1024);
            Real got = spherical_bessel_j(n, R(z));
            Real err = abs(got.with_precision(1024) - oracle);
            // absolute error relative to the envelope 1/z, or relative for tiny values
            Real scale = abs(oracle);
            Real env(1.0 / z, 1024);
            if (scale < env) scale = env;
            CHECK_MESSAGE(err <= scale * Real(std::ldexp(1.0, -250), 1024), "n=" << n << " z=" << z);
            CHECK(spherical_bessel_j(n, R(-z)) == (n % 2 ? -got : got));
        }
    }
}

TEST_CASE("spherical bessel three-term recurrence") {
    for (mpfr_prec_t bits : {128, 256}) {
        const double tol = 10 * std::ldexp(1.0, -static_cast<int>(bits));
        for (unsigned n = 1; n <= 30; ++n) {
            for (double z : {0.1, 0.37, 1.0, 2.0, 5.5, 9.9, 17.0, 29.0, 31.5, 50.0, 77.7, 100.0}) {
                const mpfr_prec_t wide = 2 * bits;
                Real zm = Real(z, bits);
                Real a = spherical_bessel_j(n - 1, zm).with_precision(wide);
                Real b = spherical_bessel_j(n + 1, zm).with_precision(wide);
                Real c = spherical_bessel_j(n, zm).with_precision(wide);
                Real rhs = c * (2L * n + 1) / zm.with_precision(wide);
                Real scale = abs(a);
                for (const Real* v : {&b, &rhs})
                    if (abs(*v) > scale) scale = abs(*v);
                CHECK_MESSAGE(abs(a + b - rhs) <= scale * Real(tol, wide), "bits=" << bits << " n=" << n << " z=" << z);
            }
        }
    }
}

TEST_CASE("half-integer bessel") {
    Real pi = Real::pi(kBits);
    CHECK(abs(bessel_j_half(0, pi)) < Real::parse("1e-75", kBits));
    CHECK(close(bessel_j_half(1, pi), sqrt(Real(2L, kBits)) / pi, 1e-74));
    for (double z : {0.25, 1.0, std::acos(-1.0) / 2, 4.0, 11.0}) {
        Real oracle = ascending_j_half0(z, 1024);
        CHECK(abs(bessel_j_half(0, R(z)).with_precision(1024) - oracle) < Real::parse("1e-74", 1024));
    }
    CHECK_THROWS_AS(bessel_j_half(1, R(0.0)), std::domain_error);
    CHECK_THROWS_AS(bessel_j_half(1, R(-1.0)), std::domain_error);
}

TEST_CASE("phase excess examples") {
    Real pi = Real::pi(kBits);
    CHECK(close(phase_excess(0, R(1.7)).phi, pi * R(1.7), 1e-75));
    CHECK(close(phase_excess(3, R(4.0)).phi, pi * 2L, 1e-75));
    CHECK(phase_excess(5, R(0.0)).phi.is_zero());
    auto p = phase_excess(1'000'000, R(1.0));
    Real naive = Real::pi(512) * (sqrt(Real(1e12, 512) + 1L) - 1'000'000L);
    CHECK(abs(p.phi.with_precision(512) - naive) <= abs(naive) * Real(std::ldexp(1.0, -200), 512));
    CHECK_THROWS_AS(phase_excess(-1, R(1.0)), std::domain_error);
    CHECK_THROWS_AS(phase_excess(1, R(-1.0)), std::domain_error);
}

TEST_CASE("phase excess matches the naive form at doubled precision") {
    for (double x : {0.001, 0.1, 0.5, 1.0, 2.5, 10.0, 1000.0}) {
        for (long l : {0L, 1L, 2L, 7L, 100L, 12345L, 1'000'000L, 50'000'000L}) {
            Real got = phase_excess(l, R(x)).phi;
            Real xw(x, 2 * kBits);
            Real naive = Real::pi(2 * kBits) * (sqrt(Real(l, 2 * kBits) * l + square(xw)) - l);
            double err = abs(got.with_precision(2 * kBits) - naive).to_double();
            CHECK_MESSAGE(err <= 4 * ulp(got), "l=" << l << " x=" << x);
        }
    }
}

TEST_CASE("phase excess ordering and bound") {
    Real pi = Real::pi(kBits);
    for (double x : {0.1, 1.0, 3.3}) {
        Real prev = phase_excess(0, R(x)).phi;
        for (long l = 1; l <= 300; ++l) {
            Real phi = phase_excess(l, R(x)).phi;
            CHECK(phi.sign() > 0);
            CHECK(phi <= pi * square(R(x)) / (2L * l));
            CHECK(phi < prev);
            prev = phi;
        }
    }
}

TEST_CASE("shift by integer multiples of pi flips the sign by parity") {
    Real pi = Real::pi(kBits);
    for (long l = 0; l <= 40; ++l) {
        for (double phi : {0.0, 1e-9, 0.3, 1.0, 2.9, 5.0}) {
            Real p = R(phi);
            Real shifted = pi * l + p;
            Real s = (l % 2 ? -sin(p) : sin(p));
            Real c = (l % 2 ? -cos(p) : cos(p));
            CHECK(abs(sin(shifted) - s) < Real::parse("1e-72", kBits));
            CHECK(abs(cos(shifted) - c) < Real::parse("1e-72", kBits));
        }
    }
}
