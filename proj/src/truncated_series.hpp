#pragma once

// Power series in one variable over Real, truncated at a fixed order.  Used to
// expand the sum kernels in t = 1/l for the asymptotic tail.

#include "sincsum/real.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace sincsum::detail {

class TruncatedSeries {
public:
    TruncatedSeries(std::size_t order, mpfr_prec_t bits) : coeffs_(order + 1, Real(bits)), bits_(bits) {}

    static TruncatedSeries variable(std::size_t order, mpfr_prec_t bits) {
        TruncatedSeries s(order, bits);
        if (order >= 1) s.coeffs_[1] = Real(1L, bits);
        return s;
    }

    static TruncatedSeries constant(std::size_t order, const Real& c) {
        TruncatedSeries s(order, c.precision());
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    mpfr_prec_t precision() const { return bits_; }
    const Real& operator[](std::size_t k) const { return coeffs_[k]; }
    Real& operator[](std::size_t k) { return coeffs_[k]; }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
        return *this;
    }

    TruncatedSeries& operator*=(const Real& c) {
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Real& c) { return a *= c; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        assert(a.order() == b.order());
        TruncatedSeries r(a.order(), a.bits_);
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    /// 1/a; requires a[0] != 0.
    friend TruncatedSeries reciprocal(const TruncatedSeries& a) {
        assert(!a[0].is_zero());
        TruncatedSeries r(a.order(), a.bits_);
        r.coeffs_[0] = 1L / a[0];
        for (std::size_t k = 1; k <= a.order(); ++k) {
            Real acc(a.bits_);
            for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
            r.coeffs_[k] = -acc / a[0];
        }
        return r;
    }

    /// sqrt(1 + w); requires w[0] == 0.
    friend TruncatedSeries sqrt_one_plus(const TruncatedSeries& w) {
        assert(w[0].is_zero());
        TruncatedSeries r = constant(w.order(), Real(1L, w.bits_));
        TruncatedSeries power = r;
        Real binom(1L, w.bits_);  // C(1/2, m)
        for (std::size_t m = 1; m <= w.order(); ++m) {
            power = power * w;
            binom *= Real(0.5, w.bits_) - static_cast<long>(m - 1);
            binom /= static_cast<long>(m);
            r += power * binom;
        }
        return r;
    }

    /// sin(s) and cos(s); require s[0] == 0.
    friend TruncatedSeries sin_of(const TruncatedSeries& s) { return trig(s, 1); }
    friend TruncatedSeries cos_of(const TruncatedSeries& s) { return trig(s, 0); }

private:
    // sum over j of (-1)^j s^{2j+first} / (2j+first)!
    static TruncatedSeries trig(const TruncatedSeries& s, std::size_t first) {
        assert(s[0].is_zero());
        const TruncatedSeries s2 = s * s;
        TruncatedSeries term = first == 1 ? s : constant(s.order(), Real(1L, s.bits_));
        TruncatedSeries r = term;
        for (std::size_t m = first + 2; m <= s.order(); m += 2) {
            term = term * s2;
            term *= Real(-1L, s.bits_) / static_cast<long>((m - 1) * m);
            r += term;
        }
        return r;
    }

    std::vector<Real> coeffs_;
    mpfr_prec_t bits_;
};

}  // namespace sincsum::detail
