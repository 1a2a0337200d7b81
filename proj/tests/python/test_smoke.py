import json
import math
from fractions import Fraction

import pytest

import sincsum


def test_exact_values():
    assert sincsum.bernoulli(1) == Fraction(-1, 2)
    assert sincsum.bernoulli(12) == Fraction(-691, 2730)
    assert sincsum.zeta_even_pi_coeff(4) == Fraction(1, 90)
    assert sincsum.zeta_even_pi_coeff(-4) == 0
    assert sincsum.double_factorial(7) == 105
    with pytest.raises(ValueError):
        sincsum.zeta_even_pi_coeff(3)


def test_special_functions():
    assert float(sincsum.sinc(0)) == 1.0
    assert math.isclose(float(sincsum.spherical_bessel_j(1, str(math.pi))), 1 / math.pi, rel_tol=1e-14)
    assert math.isclose(float(sincsum.phase_excess(3, 4)), 2 * math.pi, rel_tol=1e-15)
    with pytest.raises(ValueError):
        sincsum.bessel_j_half(1, 0)


def test_identities():
    r = sincsum.id1_rhs(0.5)
    assert abs(float(r["value"]) - 1) <= r["error_bound"] <= 1e-12
    assert r["method"] == "tail_accelerated"
    r = sincsum.id2_rhs("2")
    assert abs(float(r["value"]) - math.pi**2) < 1e-12
    r = sincsum.cos_mean_sum(1.0)
    assert abs(float(r["value"]) - math.pi / math.sinh(math.pi)) < 1e-12
    r = sincsum.bessel_alt_sum(1)
    assert abs(float(r["value"]) + math.pi / (3 * math.sqrt(2))) < 1e-12
    assert len(sincsum.id1_rhs(1.0, precision_bits=512)["value"]) > 120


def test_convergence_error():
    with pytest.raises(sincsum.ConvergenceError):
        sincsum.id2_rhs(1.0, tol=1e-30, max_terms=50, tail_order=0)


def test_expansion():
    assert sincsum.sin_sq_half_series(3) == [Fraction(1, 4), Fraction(-1, 48), Fraction(1, 1440)]
    r = sincsum.id2_cancellation(20)
    assert r["coefficient_of_x2"] == Fraction(1, 4)
    assert r["all_cancelled"] and all(q == 0 for q in r["residuals"])
    assert all(sincsum.a5_check(n) for n in range(20))
    assert sincsum.a6_factorial_identity(10)


def test_scattering():
    assert math.isclose(float(sincsum.phase_shift(0, 1)), -math.pi / 2, rel_tol=1e-15)
    assert float(sincsum.sigma_closed(1, 1)["sigma"]) == pytest.approx(math.pi**2, rel=1e-15)
    pw = sincsum.sigma_partial_waves(2, 2)
    assert float(pw["sigma"]) == pytest.approx(2 * math.pi**2, rel=1e-12)
    q = sincsum.sigma_quadrature(0.3, 1)
    assert float(q["sigma"]) == pytest.approx(0.09 * math.pi**2, rel=1e-6)
    a = sincsum.amplitude(1.0, 1, 1)
    b = sincsum.amplitude(2 * math.pi - 1.0, 1, 1)
    assert abs(float(a["re"]) - float(b["re"])) < 1e-10
    d = sincsum.diff_cross_section(1.0, 1, 1)
    assert float(d["value"]) == pytest.approx(float(a["re"]) ** 2 + float(a["im"]) ** 2, rel=1e-10)
    with pytest.raises(ValueError):
        sincsum.amplitude(0.0, 1, 1)


def test_cli_in_process():
    code, out, _ = sincsum.run_cli("verify", "id1", "--x", "0.5,1")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 2 and all(r["pass"] for r in rows)
    code, _, _ = sincsum.run_cli("expand", "--order", "1")
    assert code == 2
