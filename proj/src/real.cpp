#include "sincsum/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sincsum {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t common_precision(const Real& a, const Real& b) {
    return std::min(a.precision(), b.precision());
}

std::partial_ordering from_cmp(int c, bool unordered) {
    if (unordered) return std::partial_ordering::unordered;
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, kRound);
}

Real::Real(long value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, kRound);
}

Real Real::parse(std::string_view text, mpfr_prec_t bits) {
    Real r(bits);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRound);
    if (s.empty() || end != s.c_str() + s.size())
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    if (!r.is_finite()) throw std::invalid_argument("not a finite number: '" + s + "'");
    return r;
}

Real Real::pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.value_, kRound);
    return r;
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
    // Steal the limbs; leave `other` as a valid 2-bit zero so its destructor is harmless.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, kRound);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.value_, value_, kRound);
    return r;
}

std::string Real::to_string() const {
    // Digits needed to round-trip: 1 + ceil(p * log10(2)).
    const int digits = 1 + static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120));
    return to_string(digits);
}

std::string Real::to_string(int significant_digits) const {
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(value_)) return "0";
    const int n = mpfr_snprintf(nullptr, 0, "%.*Re", significant_digits - 1, value_);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, value_);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

Real& Real::operator+=(const Real& rhs) { mpfr_add(value_, value_, rhs.value_, kRound); return *this; }
Real& Real::operator-=(const Real& rhs) { mpfr_sub(value_, value_, rhs.value_, kRound); return *this; }
Real& Real::operator*=(const Real& rhs) { mpfr_mul(value_, value_, rhs.value_, kRound); return *this; }
Real& Real::operator/=(const Real& rhs) { mpfr_div(value_, value_, rhs.value_, kRound); return *this; }
Real& Real::operator+=(long rhs) { mpfr_add_si(value_, value_, rhs, kRound); return *this; }
Real& Real::operator-=(long rhs) { mpfr_sub_si(value_, value_, rhs, kRound); return *this; }
Real& Real::operator*=(long rhs) { mpfr_mul_si(value_, value_, rhs, kRound); return *this; }
Real& Real::operator/=(long rhs) { mpfr_div_si(value_, value_, rhs, kRound); return *this; }
Real& Real::operator*=(double rhs) { mpfr_mul_d(value_, value_, rhs, kRound); return *this; }

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.value_, value_, kRound);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(common_precision(a, b));
    mpfr_add(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(common_precision(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(common_precision(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(common_precision(a, b));
    mpfr_div(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.get(), a, b.get(), kRound);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    const bool unordered = mpfr_unordered_p(a.get(), b.get()) != 0;
    return from_cmp(unordered ? 0 : mpfr_cmp(a.get(), b.get()), unordered);
}

std::partial_ordering operator<=>(const Real& a, double b) {
    const bool unordered = mpfr_nan_p(a.get()) || std::isnan(b);
    return from_cmp(unordered ? 0 : mpfr_cmp_d(a.get(), b), unordered);
}

#define SINCSUM_UNARY(name, fn)                \
    Real name(const Real& a) {                 \
        Real r(a.precision());                 \
        fn(r.get(), a.get(), kRound);          \
        return r;                              \
    }

SINCSUM_UNARY(abs, mpfr_abs)
SINCSUM_UNARY(sqrt, mpfr_sqrt)
SINCSUM_UNARY(sin, mpfr_sin)
SINCSUM_UNARY(cos, mpfr_cos)
SINCSUM_UNARY(sinh, mpfr_sinh)
SINCSUM_UNARY(log, mpfr_log)
SINCSUM_UNARY(exp, mpfr_exp)
SINCSUM_UNARY(square, mpfr_sqr)

#undef SINCSUM_UNARY

Real pow(const Real& a, long n) {
    Real r(a.precision());
    mpfr_pow_si(r.get(), a.get(), n, kRound);
    return r;
}

Real ldexp(const Real& a, long exp2) {
    Real r(a.precision());
    mpfr_mul_2si(r.get(), a.get(), exp2, kRound);
    return r;
}

double ulp(const Real& a) {
    const auto p = static_cast<long>(a.precision());
    if (a.is_zero() || !a.is_finite()) return std::ldexp(1.0, static_cast<int>(-p));
    return std::ldexp(1.0, static_cast<int>(mpfr_get_exp(a.get()) - p));
}

}  // namespace sincsum
