#include "sincsum/sums.hpp"

#include "sincsum/exactmath.hpp"
#include "sincsum/specfun.hpp"
#include "truncated_series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace sincsum::sums {

namespace {

using detail::TruncatedSeries;

Real to_real(const exact::Rational& q, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    explicit CompensatedSum(mpfr_prec_t bits) : sum_(bits), carry_(bits), magnitude_(bits) {}

    void add(const Real& v) {
        magnitude_ += abs(v);
        Real t = sum_ + v;
        if (abs(sum_) >= abs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = std::move(t);
    }

    Real value() const { return sum_ + carry_; }
    /// Sum of |added values|, for rounding-error bounds.
    double magnitude() const { return magnitude_.to_double(); }

private:
    Real sum_;
    Real carry_;
    Real magnitude_;
};

double rounding_slack(mpfr_prec_t bits, double magnitude, double per_term_ulps) {
    return per_term_ulps * std::ldexp(1.0, -static_cast<int>(bits)) * magnitude;
}

// ---------------------------------------------------------------------------
// Kernels of the four mean sums.  For l >= 1 each summand is a function of
// t = 1/l that is even and analytic for |t| < 1/x, which gives both the
// asymptotic tail expansion and a Cauchy bound for its remainder.

enum class Kernel { id1, id2, cos_mean, sinc_mean };

const char* kernel_name(Kernel k) {
    switch (k) {
        case Kernel::id1: return "id1_rhs";
        case Kernel::id2: return "id2_rhs";
        case Kernel::cos_mean: return "cos_mean_sum";
        case Kernel::sinc_mean: return "sinc_mean_sum";
    }
    return "?";
}

Real term(Kernel k, long l, const Real& x) {
    switch (k) {
        case Kernel::id1: return terms::id1(l, x);
        case Kernel::id2: return terms::id2(l, x);
        case Kernel::cos_mean: return terms::cos_mean(l, x);
        case Kernel::sinc_mean: return terms::sinc_mean(l, x);
    }
    return Real(x.precision());
}

Real zeroth_term(Kernel k, const Real& x) {
    const Real pix = Real::pi(x.precision()) * x;
    switch (k) {
        case Kernel::id1: return specfun::sinc(pix);
        case Kernel::id2: return square(sin(pix / 2L));
        case Kernel::cos_mean: return cos(pix) / x;
        case Kernel::sinc_mean: return specfun::sinc(pix) / x;
    }
    return Real(x.precision());
}

TruncatedSeries kernel_series(Kernel k, const Real& x, std::size_t order) {
    const mpfr_prec_t bits = x.precision();
    const Real pi = Real::pi(bits);
    const Real x2 = square(x);
    const TruncatedSeries t = TruncatedSeries::variable(order, bits);
    const TruncatedSeries one = TruncatedSeries::constant(order, Real(1L, bits));
    const TruncatedSeries w = t * t * x2;
    const TruncatedSeries root = sqrt_one_plus(w);  // sqrt(l^2+x^2) / l
    const TruncatedSeries phi = t * (pi * x2) * reciprocal(one + root);
    switch (k) {
        case Kernel::id1:
            return sin_of(phi) * t * reciprocal(root) * (Real(2L, bits) / pi);
        case Kernel::id2:
            return one + cos_of(phi) * Real(-1L, bits);
        case Kernel::cos_mean:
            return cos_of(phi) * (t * t) * reciprocal(one + w) * (2L * x);
        case Kernel::sinc_mean: {
            const TruncatedSeries inv = reciprocal(root);
            return sin_of(phi) * (t * t * t) * (inv * inv * inv) * (2L * x / pi);
        }
    }
    return TruncatedSeries(order, bits);
}

// Upper bound of |kernel(t)| on the complex circle |t| = rho, with omega = (x rho)^2 < 1.
double majorant(Kernel k, double x, double rho) {
    const double omega = x * x * rho * rho;
    const double phi = M_PI * x * x * rho / (1.0 + std::sqrt(1.0 - omega));
    double m = 0.0;
    switch (k) {
        case Kernel::id1: m = 2.0 / M_PI * std::sinh(phi) * rho / std::sqrt(1.0 - omega); break;
        case Kernel::id2: m = std::cosh(phi) - 1.0; break;
        case Kernel::cos_mean: m = 2.0 * x * std::cosh(phi) * rho * rho / (1.0 - omega); break;
        case Kernel::sinc_mean:
            m = 2.0 * x / M_PI * std::sinh(phi) * rho * rho * rho / std::pow(1.0 - omega, 1.5);
            break;
    }
    return m * (1.0 + 1e-12);
}

// Bound on sum_{l>L} |kernel(l)| from an elementary majorant and the integral test.
double plain_tail(Kernel k, double x, double L) {
    switch (k) {
        case Kernel::id1: return x * x / L;
        case Kernel::id2: return M_PI * M_PI * x * x * x * x / (8.0 * L);
        case Kernel::cos_mean: return 2.0 * x / L;
        case Kernel::sinc_mean: return x * x * x / (3.0 * L * L * L);
    }
    return std::numeric_limits<double>::infinity();
}

// Bound on sum_{l>L} of the remainder after the first `order` coefficients in t,
// using |c_k| <= M rho^-k and sum_{l>L} l^-k <= L^{1-k}/(k-1).
double accelerated_tail(Kernel k, double x, double L, std::size_t order) {
    double best = std::numeric_limits<double>::infinity();
    if (x == 0.0) return 0.0;
    for (double c : {1.25, 1.5, 2.0, 3.0, 4.0, 8.0}) {
        const double rho = 1.0 / (c * x);
        const double q = 1.0 / (L * rho);
        if (q >= 0.5) continue;
        const double K = static_cast<double>(order);
        const double bound = majorant(k, x, rho) * L * std::pow(q, K + 1) / (K * (1.0 - q));
        best = std::min(best, bound);
    }
    return best;
}

std::int64_t smallest_passing(std::int64_t lo, std::int64_t hi, auto&& bound_at, double target) {
    if (bound_at(static_cast<double>(lo)) <= target) return lo;
    if (!(bound_at(static_cast<double>(hi)) <= target)) return hi;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (bound_at(static_cast<double>(mid)) <= target) hi = mid; else lo = mid;
    }
    return hi;
}

SumResult evaluate(Kernel k, const Real& x_in, const SumConfig& cfg) {
    cfg.validate();
    const mpfr_prec_t bits = cfg.precision_bits;
    const Real x = x_in.with_precision(bits);
    const double xd = x.to_double();

    // tail_order caps the number of corrections; at a given L the order with the
    // smallest rigorous bound is used (0 = plain truncation).
    auto bound_for = [&](double L, int j) {
        return j == 0 ? plain_tail(k, xd, L) : accelerated_tail(k, xd, L, 2 * static_cast<std::size_t>(j) + 1);
    };
    auto best_order = [&](double L) {
        int best = 0;
        for (int j = 1; j <= cfg.tail_order; ++j)
            if (bound_for(L, j) < bound_for(L, best)) best = j;
        return best;
    };
    auto tail_bound = [&](double L) { return bound_for(L, best_order(L)); };
    const std::int64_t min_terms = std::min<std::int64_t>(
        cfg.max_terms, std::max<std::int64_t>(16, static_cast<std::int64_t>(std::ceil(4.0 * xd)) + 1));
    const std::int64_t L = smallest_passing(min_terms, cfg.max_terms, tail_bound, 0.5 * cfg.tolerance);
    const int used_order = xd == 0.0 ? 0 : best_order(static_cast<double>(L));
    const bool accelerate = used_order > 0;
    const std::size_t order = 2 * static_cast<std::size_t>(used_order) + 1;

    CompensatedSum acc(bits);
    acc.add(zeroth_term(k, x));
    for (long l = 1; l <= L; ++l) acc.add(term(k, l, x));

    SumResult result;
    result.terms_used = L;
    result.method = accelerate ? SumMethod::tail_accelerated : SumMethod::direct;
    double bound = bound_for(static_cast<double>(L), used_order);
    double magnitude = acc.magnitude();

    if (accelerate) {
        const TruncatedSeries series = kernel_series(k, x, order);
        for (std::size_t s = 2; s <= order; ++s) {
            if (series[s].is_zero()) continue;
            const TailValue tail = power_tail(static_cast<long>(s), L, bits);
            const Real contribution = series[s] * tail.value;
            acc.add(contribution);
            bound += std::abs(series[s].to_double()) * tail.error_bound;
            magnitude += std::abs(contribution.to_double());
        }
    }
    // Each term carries a few roundings (sqrt, sin, divisions, pi); the
    // expansion coefficients accumulate O(order) more.
    bound += rounding_slack(bits, magnitude, 32.0 + 8.0 * static_cast<double>(order));
    result.value = acc.value();
    result.error_bound = bound;

    if (!(bound <= cfg.tolerance))
        throw ConvergenceError(std::string(kernel_name(k)) + ": tolerance not reached within max_terms (bound " +
                                   std::to_string(bound) + ")",
                               std::move(result));
    return result;
}

void require_nonnegative(const Real& x, const char* who) {
    if (!x.is_finite() || x.sign() < 0) throw std::domain_error(std::string(who) + ": x must be finite and >= 0");
}

void require_positive(const Real& x, const char* who) {
    if (!x.is_finite() || x.sign() <= 0) throw std::domain_error(std::string(who) + ": x must be finite and > 0");
}

}  // namespace

void SumConfig::validate() const {
    if (!(tolerance > 0.0)) throw std::invalid_argument("SumConfig: tolerance must be positive");
    if (max_terms < 1) throw std::invalid_argument("SumConfig: max_terms must be positive");
    if (tail_order < 0 || tail_order > 12) throw std::invalid_argument("SumConfig: tail_order must be in [0, 12]");
    if (precision_bits < 32) throw std::invalid_argument("SumConfig: precision_bits must be >= 32");
}

std::string to_string(SumMethod m) { return m == SumMethod::direct ? "direct" : "tail_accelerated"; }

TailValue power_tail(long s, std::int64_t L, mpfr_prec_t bits) {
    if (s < 2) throw std::domain_error("power_tail: s must be >= 2");
    if (L < 1) throw std::domain_error("power_tail: L must be >= 1");
    const mpfr_prec_t wp = bits + 32;
    const Real N(static_cast<long>(L + 1), wp);
    const Real inv_n = 1L / N;
    const Real n_pow = pow(N, -s);  // N^-s

    // sum_{l>=N} l^-s = N^{1-s}/(s-1) + N^-s/2 + sum_j B_2j/(2j)! (s)_{2j-1} N^{-s-2j+1} + R
    Real value = n_pow * N / (s - 1) + n_pow / 2L;
    Real factor = n_pow * inv_n * s;  // (s)_{2j-1} N^{-s-2j+1} / (2j)!, j = 1
    factor /= 2L;
    double previous = std::numeric_limits<double>::infinity();
    double omitted = 0.0;
    const double floor = std::ldexp(std::abs(value.to_double()), -static_cast<int>(wp));
    for (unsigned j = 1;; ++j) {
        const Real term = to_real(exact::bernoulli(2 * j), wp) * factor;
        const double size = std::abs(term.to_double());
        if (size >= previous || size < floor) {
            omitted = size;
            break;
        }
        value += term;
        previous = size;
        // advance (s)_{2j-1}/(2j)! N^{...} to j+1
        factor *= (s + 2L * j - 1) * (s + 2L * j);
        factor /= (2L * j + 1) * (2L * j + 2);
        factor *= square(inv_n);
    }
    TailValue out{value.with_precision(bits), 0.0};
    out.error_bound = omitted + std::ldexp(std::abs(value.to_double()), -static_cast<int>(bits) + 2);
    return out;
}

namespace terms {

Real id1(long l, const Real& x) {
    if (l == 0) return zeroth_term(Kernel::id1, x);
    const specfun::PhaseExcess pe = specfun::phase_excess(l, x);
    const Real mean = sqrt(square(Real(l, x.precision())) + square(x));
    return 2L * sin(pe.phi) / (Real::pi(x.precision()) * mean);
}

Real id2(long l, const Real& x) {
    if (l == 0) return zeroth_term(Kernel::id2, x);
    const specfun::PhaseExcess pe = specfun::phase_excess(l, x);
    return 2L * square(sin(pe.phi / 2L));
}

Real cos_mean(long l, const Real& x) {
    if (l == 0) return zeroth_term(Kernel::cos_mean, x);
    const specfun::PhaseExcess pe = specfun::phase_excess(l, x);
    return 2L * x * cos(pe.phi) / (square(Real(l, x.precision())) + square(x));
}

Real sinc_mean(long l, const Real& x) {
    if (l == 0) return zeroth_term(Kernel::sinc_mean, x);
    const specfun::PhaseExcess pe = specfun::phase_excess(l, x);
    const Real r2 = square(Real(l, x.precision())) + square(x);
    return 2L * x * sin(pe.phi) / (Real::pi(x.precision()) * sqrt(r2) * r2);
}

}  // namespace terms

SumResult id1_rhs(const Real& x, const SumConfig& cfg) {
    require_nonnegative(x, "id1_rhs");
    return evaluate(Kernel::id1, x, cfg);
}

SumResult id2_rhs(const Real& x, const SumConfig& cfg) {
    require_nonnegative(x, "id2_rhs");
    return evaluate(Kernel::id2, x, cfg);
}

SumResult cos_mean_sum(const Real& x, const SumConfig& cfg) {
    require_positive(x, "cos_mean_sum");
    return evaluate(Kernel::cos_mean, x, cfg);
}

SumResult sinc_mean_sum(const Real& x, const SumConfig& cfg) {
    require_positive(x, "sinc_mean_sum");
    return evaluate(Kernel::sinc_mean, x, cfg);
}

SumResult bessel_alt_sum(unsigned n, const SumConfig& cfg) {
    cfg.validate();
    if (n < 1) throw std::domain_error("bessel_alt_sum: n must be >= 1");
    const mpfr_prec_t bits = cfg.precision_bits;
    const Real pi = Real::pi(bits);

    // (-1)^l j_n(pi l) = (1/(pi l)) sum_{k=0}^{n} e_k (pi l)^-k, from the finite Hankel
    // expansion of j_n with sin(pi l) = 0, cos(pi l) = (-1)^l.  Hence each summand is
    // sqrt(2) sum_k e_k pi^{-k-1} l^{-(n+k+1)}.
    const int sin_half = std::array{0, 1, 0, -1}[n % 4];
    const int cos_half = std::array{1, 0, -1, 0}[n % 4];
    std::vector<exact::Rational> coeff(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        exact::Rational a = exact::make_rational(exact::factorial(n + k),
                                                 exact::factorial(k) * exact::factorial(n - k));
        a /= exact::Integer(1) << k;
        if (k % 2 == 0)
            coeff[k] = -sin_half * ((k / 2) % 2 == 0 ? a : exact::Rational(-a));
        else
            coeff[k] = cos_half * (((k - 1) / 2) % 2 == 0 ? a : exact::Rational(-a));
    }
    const Real sqrt2 = sqrt(Real(2L, bits));
    std::vector<Real> tail_coeff;  // sqrt(2) e_k pi^{-k-1}
    for (unsigned k = 0; k <= n; ++k) tail_coeff.push_back(sqrt2 * to_real(coeff[k], bits) / pow(pi, k + 1L));

    const bool accelerate = cfg.tail_order > 0;
    auto plain_bound = [&](double L) {
        double b = 0.0;
        for (unsigned k = 0; k <= n; ++k)
            b += std::abs(tail_coeff[k].to_double()) * std::pow(L, -static_cast<double>(n + k)) / (n + k);
        return b;
    };
    // With the exact expansion the only tail error is Euler-Maclaurin's, which is
    // negligible once L is a few dozen.
    const std::int64_t L = accelerate ? std::min<std::int64_t>(cfg.max_terms, 64)
                                      : smallest_passing(1, cfg.max_terms, plain_bound, 0.5 * cfg.tolerance);

    CompensatedSum acc(bits);
    for (long l = 1; l <= L; ++l) {
        const Real lr(l, bits);
        Real v = specfun::bessel_j_half(n, pi * lr) / (pow(lr, static_cast<long>(n)) * sqrt(lr));
        acc.add(l % 2 == 0 ? v : -v);
    }
    SumResult result;
    result.terms_used = L;
    result.method = accelerate ? SumMethod::tail_accelerated : SumMethod::direct;
    double bound = 0.0;
    double magnitude = acc.magnitude();
    if (accelerate) {
        for (unsigned k = 0; k <= n; ++k) {
            if (tail_coeff[k].is_zero()) continue;
            const TailValue tail = power_tail(static_cast<long>(n + k + 1), L, bits);
            const Real contribution = tail_coeff[k] * tail.value;
            acc.add(contribution);
            bound += std::abs(tail_coeff[k].to_double()) * tail.error_bound;
            magnitude += std::abs(contribution.to_double());
        }
    } else {
        bound = plain_bound(static_cast<double>(L));
    }
    bound += rounding_slack(bits, magnitude, 64.0 + 8.0 * n);
    result.value = acc.value();
    result.error_bound = bound;
    if (!(bound <= cfg.tolerance))
        throw ConvergenceError("bessel_alt_sum: tolerance not reached within max_terms", std::move(result));
    return result;
}

FiniteDifference id1_derivative_fd(const Real& x, const Real& h, const SumConfig& cfg) {
    if (!(h.sign() > 0) || !(h * 4L < x))
        throw std::domain_error("id1_derivative_fd: requires 0 < h < x/4");
    const Real hw = h.with_precision(cfg.precision_bits);
    const Real xw = x.with_precision(cfg.precision_bits);
    const SumResult up = id1_rhs(xw + hw, cfg);
    const SumResult down = id1_rhs(xw - hw, cfg);
    FiniteDifference fd{(up.value - down.value) / (2L * hw), 0.0};
    fd.error_bound = (up.error_bound + down.error_bound) / (2.0 * hw.to_double());
    return fd;
}

}  // namespace sincsum::sums
