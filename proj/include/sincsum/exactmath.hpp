#pragma once

#include <gmpxx.h>

#include <vector>

namespace sincsum::exact {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number.  gmpxx keeps every arithmetic result canonical
/// (lowest terms, positive denominator); build from a numerator/denominator
/// pair with make_rational() so the same holds for constructed values.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
bool is_canonical(const Rational& q);

/// B_n with the convention B_1 = -1/2.  Memoized; safe to call concurrently.
Rational bernoulli(unsigned n);

/// Snapshot of the memo table, B_0..B_n.
std::vector<Rational> bernoulli_table(unsigned n);

/// Rational c with zeta(s) = c * pi^s for even s >= 2; zero for even s < 0.
/// Throws std::domain_error for odd s or s == 0.
Rational zeta_even_pi_coeff(long s);

/// k!! with (-1)!! = 0!! = 1.  Throws std::domain_error for k < -1.
Integer double_factorial(long k);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace sincsum::exact
