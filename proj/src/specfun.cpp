#include "sincsum/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace sincsum::specfun {

namespace {

constexpr mpfr_prec_t kGuardBits = 64;

// log2 of z^{2m+1} / ((2m+1)!! (2m-1)!!), the size of j_m(z)/y_m(z) once m >> z.
double log2_minimal_ratio(unsigned m, double log2z) {
    const double dm = m;
    const double ln_odd_upper = std::lgamma(2 * dm + 2) - dm * std::log(2.0) - std::lgamma(dm + 1);
    const double ln_odd_lower = std::lgamma(2 * dm + 1) - dm * std::log(2.0) - std::lgamma(dm + 1);
    return (2 * dm + 1) * log2z - (ln_odd_upper + ln_odd_lower) / std::log(2.0);
}

Real j0_closed(const Real& z) { return sin(z) / z; }

Real j1_closed(const Real& z) { return sin(z) / square(z) - cos(z) / z; }

Real j2_closed(const Real& z) {
    const Real z2 = square(z);
    return (3L / (z2 * z) - 1L / z) * sin(z) - 3L * cos(z) / z2;
}

// j_n(z) = z^n/(2n+1)!! sum_k (-z^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1))
Real ascending_series(unsigned n, const Real& z) {
    const Real step = -square(z) / 2L;
    Real term(1L, z.precision());
    Real sum = term;
    for (long k = 1;; ++k) {
        term *= step;
        term /= k * (2L * n + 2L * k + 1);
        sum += term;
        if (abs(term) < ldexp(abs(sum), -static_cast<long>(z.precision()) - 4)) break;
    }
    Real prefactor = pow(z, static_cast<long>(n));
    for (long k = 3; k <= 2L * n + 1; k += 2) prefactor /= k;
    return prefactor * sum;
}

Real small_order(unsigned n, const Real& z) {
    if (abs(z) < 1.0) return ascending_series(n, z);
    switch (n) {
        case 0: return j0_closed(z);
        case 1: return j1_closed(z);
        default: return j2_closed(z);
    }
}

Real upward(unsigned n, const Real& z) {
    Real prev = j0_closed(z);
    Real cur = j1_closed(z);
    for (unsigned m = 1; m < n; ++m) {
        Real next = (2L * m + 1) * cur / z - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Real miller(unsigned n, const Real& z) {
    const double log2z = std::log2(z.to_double());
    const double target = log2_minimal_ratio(n, log2z) - static_cast<double>(z.precision()) - 16;
    unsigned start = n + 8;
    while (log2_minimal_ratio(start, log2z) > target) start += 8;
    start += 8;

    Real above(0L, z.precision());
    Real cur(1L, z.precision());
    Real at_n(z.precision());
    Real at_one(z.precision());
    if (start == n) at_n = cur;
    for (unsigned m = start; m >= 1; --m) {
        Real below = (2L * m + 1) * cur / z - above;
        above = std::move(cur);
        cur = std::move(below);
        if (m - 1 == n) at_n = cur;
        if (m - 1 == 1) at_one = cur;
    }
    // cur now holds the unnormalized j_0; normalize against whichever of j_0, j_1 is larger.
    const Real true_j0 = small_order(0, z);
    const Real true_j1 = small_order(1, z);
    if (abs(true_j0) >= abs(true_j1)) return at_n * true_j0 / cur;
    return at_n * true_j1 / at_one;
}

}  // namespace

Real sinc(const Real& z) {
    const auto p = static_cast<long>(z.precision());
    if (z.is_zero()) return Real(1L, z.precision());
    if (abs(z) < ldexp(Real(1L, z.precision()), -p / 4)) {
        const Real z2 = square(z);
        Real term(1L, z.precision());
        Real sum = term;
        const Real cutoff = ldexp(Real(1L, z.precision()), -p - 8);
        for (long k = 1; abs(term) >= cutoff; ++k) {
            term *= z2;
            term /= -(2 * k) * (2 * k + 1);
            sum += term;
        }
        return sum;
    }
    return sin(z) / z;
}

Real spherical_bessel_j(unsigned n, const Real& z) {
    const mpfr_prec_t p = z.precision();
    if (z.is_zero()) return Real(n == 0 ? 1L : 0L, p);
    if (z.sign() < 0) {
        Real r = spherical_bessel_j(n, -z);
        return n % 2 == 0 ? r : -r;
    }
    if (n == 0) return sinc(z);
    const Real zw = z.with_precision(p + kGuardBits);
    Real r(p + kGuardBits);
    if (n <= 2)
        r = small_order(n, zw);
    else if (zw >= static_cast<double>(n))
        r = upward(n, zw);
    else
        r = miller(n, zw);
    return r.with_precision(p);
}

Real bessel_j_half(unsigned n, const Real& z) {
    if (!(z.sign() > 0)) throw std::domain_error("bessel_j_half: argument must be positive");
    const Real zw = z.with_precision(z.precision() + kGuardBits);
    const Real scale = sqrt(2L * zw / Real::pi(zw.precision()));
    return (scale * spherical_bessel_j(n, zw)).with_precision(z.precision());
}

PhaseExcess phase_excess(long l, const Real& x) {
    if (l < 0) throw std::domain_error("phase_excess: l must be non-negative");
    if (x.sign() < 0) throw std::domain_error("phase_excess: x must be non-negative");
    const mpfr_prec_t p = x.precision();
    if (x.is_zero()) return {l, x, Real(0L, p)};
    const Real lr(l, p);
    const Real mean = sqrt(square(lr) + square(x));
    Real phi = Real::pi(p) * square(x) / (mean + lr);
    return {l, x, std::move(phi)};
}

}  // namespace sincsum::specfun
