#include "sincsum/exactmath.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace sincsum::exact {

namespace {

class BernoulliMemo {
public:
    Rational at(unsigned n) {
        std::lock_guard lock(mutex_);
        extend(n);
        return values_[n];
    }

    std::vector<Rational> prefix(unsigned n) {
        std::lock_guard lock(mutex_);
        extend(n);
        return {values_.begin(), values_.begin() + n + 1};
    }

private:
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
    void extend(unsigned n) {
        if (values_.empty()) values_.emplace_back(1);
        for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
            if (m >= 3 && m % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            Rational acc = 0;
            Integer c = 1;  // C(m+1, j), advanced incrementally
            for (unsigned j = 0; j < m; ++j) {
                acc += c * values_[j];
                c = c * (m + 1 - j) / (j + 1);
            }
            values_.emplace_back(-acc / (m + 1));
        }
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

BernoulliMemo& memo() {
    static BernoulliMemo instance;
    return instance;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_canonical(const Rational& q) {
    return q.get_den() > 0 && gcd(q.get_num(), q.get_den()) == 1;
}

Rational bernoulli(unsigned n) { return memo().at(n); }

std::vector<Rational> bernoulli_table(unsigned n) { return memo().prefix(n); }

Rational zeta_even_pi_coeff(long s) {
    if (s % 2 != 0 || s == 0)
        throw std::domain_error("zeta_even_pi_coeff: argument must be a nonzero even integer, got " +
                                std::to_string(s));
    if (s < 0) return 0;
    const auto us = static_cast<unsigned long>(s);
    // zeta(s) = (-1)^{s/2+1} B_s (2pi)^s / (2 s!)
    Rational c = bernoulli(static_cast<unsigned>(us));
    Integer two_s;
    mpz_ui_pow_ui(two_s.get_mpz_t(), 2, us);
    c *= two_s;
    c /= 2 * factorial(us);
    if ((us / 2) % 2 == 0) c = -c;
    return c;
}

Integer double_factorial(long k) {
    if (k < -1) throw std::domain_error("double_factorial: k must be >= -1");
    Integer r = 1;
    if (k > 0) mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace sincsum::exact
