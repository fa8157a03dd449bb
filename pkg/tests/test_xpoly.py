from fractions import Fraction as F

from hypothesis import given, strategies as st

from rstirling.xpoly import XPoly, coefficient, expand_linear_product, falling_factorial_x

from conftest import LAM, R, lamr_polys


def test_empty_product_is_one():
    assert expand_linear_product([]) == XPoly([1])
    assert expand_linear_product([]).degree == 0


def test_lambda_falling_two_factors():
    p = expand_linear_product([0, -LAM])
    assert p.coeffs == (0, -LAM, 1)
    assert coefficient(p, 1) == -LAM
    assert coefficient(p, 5) == 0
    assert coefficient(XPoly([1]), 0) == 1


def test_three_shifted_factors():
    p = expand_linear_product([R, R - LAM, R - 2 * LAM])
    expected = [R * (R - LAM) * (R - 2 * LAM), 3 * R**2 - 6 * R * LAM + 2 * LAM**2, 3 * R - 3 * LAM, 1]
    assert list(p.coeffs) == expected


def test_zero_polynomial_has_no_degree():
    assert XPoly([0, 0]).degree is None
    assert XPoly([F(0)]) == XPoly()


def test_affine_product_scales_leading_term():
    p = falling_factorial_x(3, LAM, shift=R, slope=F(2))
    assert p.coefficient(3) == 8
    assert p.coefficient(0) == R * (R - LAM) * (R - 2 * LAM)


@given(st.lists(lamr_polys(max_terms=2, max_deg=2), max_size=5), st.randoms())
def test_order_independent(constants, rnd):
    shuffled = list(constants)
    rnd.shuffle(shuffled)
    assert expand_linear_product(constants) == expand_linear_product(shuffled)


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), max_size=7))
def test_leading_and_constant_coefficients(constants):
    p = expand_linear_product(constants)
    assert p.degree == len(constants)
    assert p.coefficient(len(constants)) == 1
    prod = F(1)
    for c in constants:
        prod *= c
    assert p.coefficient(0) == prod


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), max_size=6),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_evaluation_matches_product(constants, x):
    prod = F(1)
    for c in constants:
        prod *= x + c
    assert expand_linear_product(constants)(x) == prod
