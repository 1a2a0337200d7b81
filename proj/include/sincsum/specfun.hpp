#pragma once

#include "sincsum/real.hpp"

namespace sincsum::specfun {

/// sin(z)/z, with sinc(0) = 1 exactly.  Small arguments use the Taylor series.
Real sinc(const Real& z);

/// Spherical Bessel function j_n(z) for real z.
///
/// n <= 2 uses the closed trigonometric forms (ascending series for |z| < 1).
/// Larger orders use upward recurrence from j_0, j_1 when |z| >= n and Miller's
/// downward recurrence, normalized against j_0 or j_1, when |z| < n.  The
/// computation runs with guard bits and is rounded to the precision of z.
Real spherical_bessel_j(unsigned n, const Real& z);

/// J_{n+1/2}(z) = sqrt(2z/pi) j_n(z).  Throws std::domain_error unless z > 0.
Real bessel_j_half(unsigned n, const Real& z);

/// pi (sqrt(l^2 + x^2) - l), the amount by which the mean argument pi sqrt(l^2+x^2)
/// exceeds pi l.
struct PhaseExcess {
    long l;
    Real x;
    Real phi;
};

/// Evaluated as pi x^2 / (sqrt(l^2 + x^2) + l), which is free of cancellation.
/// Throws std::domain_error for l < 0 or x < 0.
PhaseExcess phase_excess(long l, const Real& x);

}  // namespace sincsum::specfun
