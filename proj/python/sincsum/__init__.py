"""High-precision evaluation of mean sinc-sum identities and 2D scale-invariant scattering.

Real results are returned as decimal strings carrying the full working precision;
exact results (Bernoulli numbers, zeta coefficients, series coefficients) as
``fractions.Fraction``.  Inputs may be floats or decimal strings.
"""

from fractions import Fraction

from . import _core
from ._core import (
    ConvergenceError,
    QuadratureError,
    a5_check,
    a6_factorial_identity,
    amplitude,
    bessel_alt_sum,
    bessel_j_half,
    cos_mean_sum,
    diff_cross_section,
    id1_derivative_fd,
    id1_rhs,
    id2_rhs,
    phase_excess,
    phase_shift,
    sigma_closed,
    sigma_partial_waves,
    sigma_quadrature,
    sinc,
    sinc_mean_sum,
    spherical_bessel_j,
)

__all__ = [
    "ConvergenceError", "QuadratureError", "a5_check", "a6_factorial_identity", "amplitude",
    "bernoulli", "bessel_alt_sum", "bessel_j_half", "cos_mean_sum", "diff_cross_section",
    "double_factorial", "id1_derivative_fd", "id1_rhs", "id2_cancellation", "id2_rhs", "phase_excess",
    "phase_shift", "run_cli", "sigma_closed", "sigma_partial_waves", "sigma_quadrature", "sin_sq_half_series",
    "sinc", "sinc_mean_sum", "spherical_bessel_j", "zeta_even_pi_coeff",
]


def bernoulli(n):
    return Fraction(_core.bernoulli(n))


def zeta_even_pi_coeff(s):
    return Fraction(_core.zeta_even_pi_coeff(s))


def double_factorial(k):
    return int(_core.double_factorial(k))


def sin_sq_half_series(order):
    return [Fraction(c) for c in _core.sin_sq_half_series(order)]


def id2_cancellation(order):
    r = _core.id2_cancellation(order)
    r["coefficient_of_x2"] = Fraction(r["coefficient_of_x2"])
    r["residuals"] = [Fraction(q) for q in r["residuals"]]
    return r


def run_cli(*args):
    """Run the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
