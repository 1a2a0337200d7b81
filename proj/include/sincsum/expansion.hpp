#pragma once

#include "sincsum/exactmath.hpp"
#include "sincsum/real.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sincsum::expansion {

using exact::Rational;

/// Truncated series sum_{n=1}^{N} r_n pi^{2n} x^{2n}; only the rationals r_n are stored.
class PiSeries {
public:
    explicit PiSeries(unsigned order) : coeffs_(order) {}

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
    /// r_n for 1 <= n <= order.
    const Rational& coeff(unsigned n) const { return coeffs_.at(n - 1); }
    Rational& coeff(unsigned n) { return coeffs_.at(n - 1); }

    PiSeries& operator+=(const PiSeries& rhs);
    friend PiSeries operator+(PiSeries a, const PiSeries& b) { return a += b; }
    /// Graded product: the x^{2a} and x^{2b} terms land at x^{2(a+b)}, truncated at order.
    friend PiSeries operator*(const PiSeries& a, const PiSeries& b);
    friend bool operator==(const PiSeries&, const PiSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Coefficient of x^{2n} in the expansion of sin^2((pi/2)(sqrt(l^2+x^2) - l)):
/// sum over entries of value * pi^{pi_power} / l^{inv_l_power}.
struct SummandCoefficient {
    using Key = std::pair<int, int>;  ///< (pi_power, inv_l_power)

    unsigned n = 0;
    std::map<Key, Rational> terms;

    /// pi_power + inv_l_power == 2n and inv_l_power >= 2 for every entry.
    bool graded() const;
    /// Numeric value of the coefficient at a fixed l.
    Real evaluate(long l, mpfr_prec_t bits) const;
};

struct CancellationReport {
    unsigned order = 0;
    Rational coefficient_of_x2;       ///< in units of pi^2
    std::vector<Rational> residuals;  ///< n = 2..order
    bool all_cancelled = false;
    /// Whether any l^{+2k} (divergent) sum went through the zeta(-2k) = 0 rule.
    bool regularization_used = false;
};

/// Series of sin^2(pi x / 2): r_n = (-1)^{n+1} / (2 (2n)!).  Requires N >= 1.
PiSeries sin_sq_half_series(unsigned N);

/// Coefficients for n = 2..N.  Requires N >= 2.
std::vector<SummandCoefficient> summand_series(unsigned N);

struct ZetaMapResult {
    PiSeries series;
    bool regularization_used = false;
};

/// Replaces each l^{-s} by zeta(s) (zero for even s < 0), doubles for the l >= 1
/// sum taken twice, and collects by power of x^2.  The result has order equal to
/// the largest n present.  Throws std::logic_error on an odd or zero l-power.
ZetaMapResult zeta_map(const std::vector<SummandCoefficient>& coeffs, unsigned order);

CancellationReport id2_cancellation(unsigned N);

/// 1/(2n+1)!! == (-2)^{n+1} sum_{k=0}^{n} B_{n+k+1} / (k! (n-k)! (n+k+1)), exactly.
bool a5_check(unsigned n);

/// Both sides of the Bernoulli identity, for reporting.
std::pair<Rational, Rational> a5_sides(unsigned n);

/// n! 2^n (2n+1)!! == (2n+1)!, exactly.
bool a6_factorial_identity(unsigned n);

/// |sinc(pi sqrt(l^2+x^2)) - sum_{n=1}^{N} (-pi x^2)^n/(n! 2^n) l^-n sqrt(1/(2l)) J_{n+1/2}(pi l)|
/// Requires l >= 1, 0 < x < l/2, N >= 1.
Real a3_numeric_consistency(long l, const Real& x, unsigned N);

}  // namespace sincsum::expansion
