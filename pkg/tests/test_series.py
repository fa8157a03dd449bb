from fractions import Fraction as F
import math

import pytest
import sympy as sp

from rstirling.families import r_stirling1_lambda
from rstirling.scalars import LamRPoly, binomial
from rstirling.series import (
    TruncatedSeries,
    daehee_gf,
    lambda_binomial_series,
    log1p_over_lambda,
    r_stirling_gf,
    series_mul,
)

from conftest import LAM, R


def test_series_mul_examples():
    a = TruncatedSeries([1, 1], 2)
    b = TruncatedSeries([1, -1], 2)
    assert series_mul(a, b).coeffs == (1, 0, -1)
    geom = TruncatedSeries([1] * 6, 5)
    assert series_mul(geom, TruncatedSeries([1, -1], 5)) == TruncatedSeries.one(5)


def test_mismatched_orders_truncate_to_smaller():
    s = series_mul(TruncatedSeries([1, 2, 3, 4], 3), TruncatedSeries([1, 1], 1))
    assert s.order == 1 and s.coeffs == (1, 3)
    assert (TruncatedSeries([1, 2, 3], 2) + TruncatedSeries([1], 0)).order == 0


def test_log1p_over_lambda_symbolic():
    s = log1p_over_lambda(3, LAM)
    assert s.coeffs == (0, 1, -LAM / 2, LAM**2 / 3)
    # hand Cauchy product of the first terms: t^2 - lam t^3
    sq = series_mul(s, s)
    assert sq.coeffs == (0, 0, 1, -LAM)


def test_log1p_over_lambda_degenerate():
    assert log1p_over_lambda(3, F(0)).coeffs == (0, 1, 0, 0)
    assert log1p_over_lambda(1, LAM).coeffs == (0, 1)


def test_log1p_at_lambda_one_is_classical():
    classical = [F(0)] + [F((-1) ** (j - 1), j) for j in range(1, 12)]
    assert list(log1p_over_lambda(11, F(1)).coeffs) == classical


def test_lambda_binomial_series():
    assert lambda_binomial_series(R, 2, LAM).coeffs == (1, R, R * (R - LAM) / 2)
    assert lambda_binomial_series(F(0), 5, LAM) == TruncatedSeries.one(5)
    assert lambda_binomial_series(F(1), 2, F(1)).coeffs == (1, 1, 0)


def test_r_stirling_gf_examples():
    assert r_stirling_gf(0, 4, LAM, F(0)) == TruncatedSeries.one(4)
    assert r_stirling_gf(1, 2, LAM, R).egf_coefficient(2) == 2 * R - LAM
    assert r_stirling_gf(2, 3, LAM, F(0)).egf_coefficient(3) == -3 * LAM
    s = r_stirling_gf(3, 6, LAM, R)
    assert s.coeffs[:3] == (0, 0, 0)


def test_r_stirling_gf_rejects_short_order():
    with pytest.raises(ValueError):
        r_stirling_gf(3, 2)


def test_egf_accessor_bounds():
    with pytest.raises(IndexError):
        TruncatedSeries([1, 2], 1).egf_coefficient(2)


def test_daehee_examples():
    assert daehee_gf(1, F(0), 2).egf_coefficients() == [1, F(-1, 2), F(2, 3)]
    d2 = daehee_gf(2, F(0), 2).egf_coefficients()
    assert d2[1] == -1 and d2[2] == F(11, 6)
    assert daehee_gf(1, R, 1).egf_coefficient(1) == R - F(1, 2)


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_daehee_against_sympy(k):
    t, x = sp.symbols("t x")
    expr = sp.series((sp.log(1 + t) / t) ** k * (1 + t) ** sp.Rational(3, 2), t, 0, 8).removeO()
    expected = [sp.Rational(expr.coeff(t, n)) * math.factorial(n) for n in range(8)]
    got = daehee_gf(k, F(3, 2), 7).egf_coefficients()
    assert [F(int(e.p), int(e.q)) for e in expected] == got


def test_r_stirling_gf_against_sympy():
    t, lam, r = sp.symbols("t lam r")
    k, order = 2, 6
    expr = sp.series(
        (sp.log(1 + lam * t) / lam) ** k / 2 * sp.exp(r / lam * sp.log(1 + lam * t)), t, 0, order + 1
    ).removeO()
    got = r_stirling_gf(k, order, LAM, R).egf_coefficients()
    for n in range(order + 1):
        want = sp.Poly(sp.simplify(expr.coeff(t, n) * math.factorial(n)), lam, r)
        assert got[n] == LamRPoly({mono: F(int(c.p), int(c.q)) for mono, c in want.terms()})


def test_gf_matches_recurrence():
    for k in range(9):
        s = r_stirling_gf(k, 10, LAM, R)
        for n in range(k, 11):
            assert s.egf_coefficient(n) == r_stirling1_lambda(n, k, LAM, R)


def test_daehee_scaled_matches_lambda_stirling():
    for k in range(8):
        col = daehee_gf(k, F(0), 15 - k).egf_coefficients()
        for n in range(0, 16 - k):
            assert col[n] * LAM**n * binomial(n + k, k) == r_stirling1_lambda(n + k, k, LAM, F(0))
