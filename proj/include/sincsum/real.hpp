#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sincsum {

/// Working precision used when a caller does not ask for one.
inline constexpr mpfr_prec_t kDefaultPrecisionBits = 256;

/// Arbitrary-precision binary floating-point number backed by MPFR.
///
/// Every operation rounds to nearest at the precision of the result.  A
/// binary operation between two Reals produces a result at the smaller of
/// the two operand precisions; an operation with a built-in arithmetic type
/// keeps the precision of the Real operand.
class Real {
public:
    explicit Real(mpfr_prec_t bits = kDefaultPrecisionBits);
    Real(double value, mpfr_prec_t bits);
    Real(long value, mpfr_prec_t bits);
    Real(int value, mpfr_prec_t bits) : Real(static_cast<long>(value), bits) {}

    /// Parses a decimal literal ("0.1", "-2.5e3").  Throws std::invalid_argument.
    static Real parse(std::string_view text, mpfr_prec_t bits = kDefaultPrecisionBits);
    static Real pi(mpfr_prec_t bits = kDefaultPrecisionBits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    /// Same value rounded to a different precision.
    Real with_precision(mpfr_prec_t bits) const;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
    /// Scientific decimal string with enough digits to round-trip the value.
    std::string to_string() const;
    std::string to_string(int significant_digits) const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator+=(long rhs);
    Real& operator-=(long rhs);
    Real& operator*=(long rhs);
    Real& operator/=(long rhs);
    Real& operator*=(double rhs);

    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);
    friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
    friend std::partial_ordering operator<=>(const Real& a, double b);

private:
    mpfr_t value_;
};

inline Real operator+(Real a, long b) { return a += b; }
inline Real operator+(long a, Real b) { return b += a; }
inline Real operator-(Real a, long b) { return a -= b; }
inline Real operator-(long a, const Real& b) { Real r = -b; return r += a; }
inline Real operator*(Real a, long b) { return a *= b; }
inline Real operator*(long a, Real b) { return b *= a; }
inline Real operator/(Real a, long b) { return a /= b; }
inline Real operator*(Real a, double b) { return a *= b; }
inline Real operator*(double a, Real b) { return b *= a; }
Real operator/(long a, const Real& b);

Real abs(const Real& a);
Real sqrt(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real sinh(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real square(const Real& a);
Real pow(const Real& a, long n);
Real ldexp(const Real& a, long exp2);
/// Smallest positive spacing 2^(exponent - precision) of a, or 2^-precision for zero.
double ulp(const Real& a);

}  // namespace sincsum
