#pragma once

#include "sincsum/real.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sincsum::sums {

struct SumConfig {
    double tolerance = 1e-12;             ///< absolute
    std::int64_t max_terms = 10'000'000;  ///< cap on directly summed terms
    int tail_order = 6;                   ///< most asymptotic tail corrections to use; 0 = plain truncation
    mpfr_prec_t precision_bits = kDefaultPrecisionBits;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

enum class SumMethod { direct, tail_accelerated };

std::string to_string(SumMethod m);

struct SumResult {
    Real value;
    double error_bound = 0.0;  ///< rigorous bound on |value - exact sum|
    std::int64_t terms_used = 0;  ///< summands l = 1..terms_used taken directly
    SumMethod method = SumMethod::direct;
};

/// The requested tolerance could not be met within max_terms; carries the best
/// result obtained.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, SumResult best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const SumResult& best() const { return best_; }

private:
    SumResult best_;
};

/// sinc(pi x) + 2 sum_{l>=1} (-1)^l sinc(pi sqrt(l^2+x^2)).  Equals 1 for all real x.
SumResult id1_rhs(const Real& x, const SumConfig& cfg = {});

/// sin^2(pi x/2) + 2 sum_{l>=1} sin^2((pi/2)(sqrt(l^2+x^2) - l)).  Equals pi^2 x^2 / 4.
SumResult id2_rhs(const Real& x, const SumConfig& cfg = {});

/// x sum_{l in Z} (-1)^l cos(pi sqrt(l^2+x^2)) / (l^2+x^2).  Equals pi / sinh(pi x).
SumResult cos_mean_sum(const Real& x, const SumConfig& cfg = {});

/// x sum_{l in Z} (-1)^l sinc(pi sqrt(l^2+x^2)) / (l^2+x^2).  Equals pi / sinh(pi x).
SumResult sinc_mean_sum(const Real& x, const SumConfig& cfg = {});

/// sum_{l>=1} (-1)^l l^{-(n+1/2)} J_{n+1/2}(pi l).  Equals -pi^n / (sqrt(2) (2n+1)!!).
SumResult bessel_alt_sum(unsigned n, const SumConfig& cfg = {});

/// Central difference of id1_rhs; zero because the sum does not depend on x.
struct FiniteDifference {
    Real value;
    double error_bound = 0.0;  ///< (sum of the two SumResult bounds) / (2h)
};

/// Requires 0 < h < x/4.
FiniteDifference id1_derivative_fd(const Real& x, const Real& h, const SumConfig& cfg = {});

/// Sum_{l > L} l^{-s} for integer s >= 2, by Euler-Maclaurin.
struct TailValue {
    Real value;
    double error_bound = 0.0;
};
TailValue power_tail(long s, std::int64_t L, mpfr_prec_t bits);

/// Summands of the sums above in the sign-free form used for evaluation.
/// For l >= 1 each equals the literal summand, (-1)^l factor included, doubled
/// for the +-l pair; l = 0 gives the single central term.
namespace terms {

/// 2 (-1)^l sinc(pi sqrt(l^2+x^2)) = 2 sin(phi_l) / (pi sqrt(l^2+x^2))
Real id1(long l, const Real& x);
/// 2 sin^2(phi_l / 2)
Real id2(long l, const Real& x);
/// 2x (-1)^l cos(pi sqrt(l^2+x^2)) / (l^2+x^2) = 2x cos(phi_l) / (l^2+x^2)
Real cos_mean(long l, const Real& x);
/// 2x (-1)^l sinc(pi sqrt(l^2+x^2)) / (l^2+x^2)
Real sinc_mean(long l, const Real& x);

}  // namespace terms

}  // namespace sincsum::sums
