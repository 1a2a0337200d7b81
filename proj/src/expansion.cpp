#include "sincsum/expansion.hpp"

#include "sincsum/specfun.hpp"

#include <stdexcept>
#include <string>

namespace sincsum::expansion {

using exact::Integer;

namespace {

// Polynomial in X = x^2 with rational coefficients, indexed by power, truncated.
using XPoly = std::vector<Rational>;

XPoly multiply(const XPoly& a, const XPoly& b) {
    XPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// C(1/2, m) = (-1)^{m+1} (2m-2)! / (2^{2m-1} m! (m-1)!), m >= 1
Rational half_binomial(unsigned m) {
    Rational c = exact::make_rational(exact::factorial(2 * m - 2),
                                      (Integer(1) << (2 * m - 1)) * exact::factorial(m) * exact::factorial(m - 1));
    return m % 2 == 1 ? c : Rational(-c);
}

Rational sign_power(unsigned k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

PiSeries& PiSeries::operator+=(const PiSeries& rhs) {
    if (rhs.order() != order()) throw std::invalid_argument("PiSeries: order mismatch");
    for (unsigned n = 1; n <= order(); ++n) coeff(n) += rhs.coeff(n);
    return *this;
}

PiSeries operator*(const PiSeries& a, const PiSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("PiSeries: order mismatch");
    PiSeries r(a.order());
    for (unsigned i = 1; i <= a.order(); ++i)
        for (unsigned j = 1; i + j <= a.order(); ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
    return r;
}

bool SummandCoefficient::graded() const {
    for (const auto& [key, value] : terms)
        if (key.first + key.second != 2 * static_cast<int>(n) || key.second < 2) return false;
    return true;
}

Real SummandCoefficient::evaluate(long l, mpfr_prec_t bits) const {
    Real sum(bits);
    const Real pi = Real::pi(bits);
    const Real lr(l, bits);
    for (const auto& [key, value] : terms) {
        Real q(bits);
        mpfr_set_q(q.get(), value.get_mpq_t(), MPFR_RNDN);
        sum += q * pow(pi, key.first) / pow(lr, key.second);
    }
    return sum;
}

PiSeries sin_sq_half_series(unsigned N) {
    if (N < 1) throw std::domain_error("sin_sq_half_series: N must be >= 1");
    // sin^2(pi x/2) = (1 - cos(pi x))/2 = sum_{n>=1} (-1)^{n+1} (pi x)^{2n} / (2 (2n)!)
    PiSeries s(N);
    for (unsigned n = 1; n <= N; ++n)
        s.coeff(n) = sign_power(n + 1) / Rational(2 * exact::factorial(2 * n));
    return s;
}

std::vector<SummandCoefficient> summand_series(unsigned N) {
    if (N < 2) throw std::domain_error("summand_series: N must be >= 2");
    // u = sqrt(l^2+x^2) - l = sum_{m>=1} C(1/2,m) X^m l^{1-2m}.  The l power of any
    // X^n coefficient of u^{2j} is fixed at 2j - 2n, so only the rationals are tracked.
    XPoly u(N + 1);
    for (unsigned m = 1; m <= N; ++m) u[m] = half_binomial(m);
    const XPoly u2 = multiply(u, u);

    // sin^2(pi u / 2) = sum_{j>=1} (-1)^{j+1} (pi u)^{2j} / (2 (2j)!)
    std::vector<SummandCoefficient> out(N - 1);
    for (unsigned n = 2; n <= N; ++n) out[n - 2].n = n;
    XPoly power = u2;  // u^{2j}
    for (unsigned j = 1; 2 * j <= N; ++j) {
        const Rational weight = sign_power(j + 1) / Rational(2 * exact::factorial(2 * j));
        for (unsigned n = 2 * j; n <= N; ++n) {
            if (power[n] == 0) continue;
            SummandCoefficient& c = out[n - 2];
            const int pi_power = 2 * static_cast<int>(j);
            const int inv_l_power = 2 * static_cast<int>(n) - pi_power;
            c.terms[{pi_power, inv_l_power}] += weight * power[n];
        }
        power = multiply(power, u2);
    }
    for (const auto& c : out)
        if (!c.graded())
            throw std::logic_error("summand_series: grading violated at n = " + std::to_string(c.n));
    return out;
}

ZetaMapResult zeta_map(const std::vector<SummandCoefficient>& coeffs, unsigned order) {
    ZetaMapResult result{PiSeries(order), false};
    for (const auto& c : coeffs) {
        if (c.n < 1 || c.n > order) throw std::invalid_argument("zeta_map: coefficient index outside series order");
        for (const auto& [key, value] : c.terms) {
            const int s = key.second;
            if (s % 2 != 0 || s == 0)
                throw std::logic_error("zeta_map: l-power must be nonzero and even, got " + std::to_string(s));
            if (key.first + s != 2 * static_cast<int>(c.n)) throw std::logic_error("zeta_map: grading violated");
            if (s < 0) result.regularization_used = true;
            result.series.coeff(c.n) += 2 * value * exact::zeta_even_pi_coeff(s);
        }
    }
    return result;
}

CancellationReport id2_cancellation(unsigned N) {
    if (N < 2) throw std::domain_error("id2_cancellation: N must be >= 2");
    const ZetaMapResult mapped = zeta_map(summand_series(N), N);
    const PiSeries total = sin_sq_half_series(N) + mapped.series;
    CancellationReport report;
    report.order = N;
    report.coefficient_of_x2 = total.coeff(1);
    report.all_cancelled = true;
    for (unsigned n = 2; n <= N; ++n) {
        report.residuals.push_back(total.coeff(n));
        if (total.coeff(n) != 0) report.all_cancelled = false;
    }
    report.regularization_used = mapped.regularization_used;
    return report;
}

std::pair<Rational, Rational> a5_sides(unsigned n) {
    const Rational lhs(Integer(1), exact::double_factorial(2L * n + 1));
    Rational sum = 0;
    for (unsigned k = 0; k <= n; ++k)
        sum += exact::bernoulli(n + k + 1) /
               Rational(exact::factorial(k) * exact::factorial(n - k) * (n + k + 1));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, n + 1);
    if ((n + 1) % 2 == 1) scale = -scale;
    return {lhs, sum * scale};
}

bool a5_check(unsigned n) {
    const auto [lhs, rhs] = a5_sides(n);
    return lhs == rhs;
}

bool a6_factorial_identity(unsigned n) {
    const Integer lhs = exact::factorial(n) * (Integer(1) << n) * exact::double_factorial(2L * n + 1);
    return lhs == exact::factorial(2 * n + 1);
}

Real a3_numeric_consistency(long l, const Real& x, unsigned N) {
    if (l < 1) throw std::domain_error("a3_numeric_consistency: l must be >= 1");
    if (!(x.sign() > 0) || !(x * 2L < Real(l, x.precision())))
        throw std::domain_error("a3_numeric_consistency: requires 0 < x < l/2");
    if (N < 1) throw std::domain_error("a3_numeric_consistency: N must be >= 1");
    const mpfr_prec_t bits = x.precision();
    const Real pi = Real::pi(bits);
    const Real lr(l, bits);
    const Real lhs = specfun::sinc(pi * sqrt(square(lr) + square(x)));

    const Real step = -pi * square(x) / 2L;  // (-pi x^2)^n / (n! 2^n), built up by n
    const Real root = sqrt(1L / (2L * lr));
    Real weight(1L, bits);
    Real rhs(bits);
    for (unsigned n = 1; n <= N; ++n) {
        weight *= step;
        weight /= static_cast<long>(n);
        rhs += weight / pow(lr, static_cast<long>(n)) * root * specfun::bessel_j_half(n, pi * lr);
    }
    return abs(lhs - rhs);
}

}  // namespace sincsum::expansion
