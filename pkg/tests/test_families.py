from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as F

import pytest
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from rstirling import families
from rstirling.families import (
    Family,
    FamilyParams,
    Triangle,
    daehee_number,
    daehee_polynomial,
    falling_factorial_lambda,
    r_stirling1_lambda,
    stirling1_classical,
    stirling1_lambda,
    stirling2_classical,
    triangle,
    unsigned_r_stirling1_lambda,
    whitney_numbers,
    whitney_type_T,
)
from rstirling.series import r_stirling_gf, whitney_type_gf
from rstirling.xpoly import XPoly, expand_linear_product, falling_factorial_x, rising_factorial_x

from conftest import LAM, R


def test_falling_factorial_examples():
    assert falling_factorial_lambda(R, 2, LAM) == R * (R - LAM)
    assert falling_factorial_lambda(R + 7, 0, LAM) == 1
    assert falling_factorial_lambda(F(3), 3, F(1)) == 6


@pytest.mark.parametrize(
    "n,k,expected",
    [(2, 1, 2 * R - LAM), (3, 2, 3 * R - 3 * LAM), (5, 5, 1), (0, 0, 1), (3, 4, 0), (3, -1, 0)],
)
def test_r_stirling_examples(n, k, expected):
    assert r_stirling1_lambda(n, k, LAM, R) == expected


def test_r_stirling_lambda_row4():
    assert r_stirling1_lambda(4, 1, LAM, F(0)) == -6 * LAM**3


def test_lambda_stirling_examples():
    assert stirling1_lambda(3, 1, LAM) == 2 * LAM**2
    assert stirling1_lambda(2, 1, F(1)) == -1
    assert all(stirling1_lambda(n, 0, LAM) == 0 for n in range(1, 9))


def test_unsigned_examples():
    assert unsigned_r_stirling1_lambda(2, 1, LAM, R) == 2 * R + LAM
    assert unsigned_r_stirling1_lambda(6, 6, LAM, R) == 1
    assert unsigned_r_stirling1_lambda(3, 1, F(1), F(0)) == 2


def test_k0_column_is_falling_factorial():
    for n in range(13):
        assert r_stirling1_lambda(n, 0, LAM, R) == falling_factorial_lambda(R, n, LAM)


def test_daehee_examples():
    assert daehee_number(1, 1) == F(-1, 2)
    assert daehee_number(2, 2) == F(11, 6)
    assert all(daehee_number(0, k) == 1 for k in range(6))
    assert daehee_polynomial(1, 1, R) == R - F(1, 2)
    assert daehee_polynomial(5, 3, F(0)) == daehee_number(5, 3)


def test_daehee_via_r_stirling():
    # S^(3)(2,1) at lam = 1 equals 2 * D_1(3) = 5
    assert r_stirling1_lambda(2, 1, F(1), F(3)) == 2 * daehee_polynomial(1, 1, F(3)) == 5


def test_daehee_column_regrows():
    assert daehee_number(30, 2) == daehee_polynomial(30, 2, F(0))
    assert daehee_number(3, 2) == F(-5, 6) * 6


@pytest.mark.parametrize("n,k,expected", [(3, 2, 3), (4, 4, 1), (4, 1, 1), (5, 2, 15), (0, 0, 1), (3, 0, 0)])
def test_stirling2(n, k, expected):
    assert stirling2_classical(n, k) == expected


def test_classical_stirling1_against_sympy():
    for n in range(11):
        for k in range(n + 1):
            assert stirling1_classical(n, k) == sympy_stirling(n, k, kind=1, signed=True)
            assert stirling2_classical(n, k) == sympy_stirling(n, k, kind=2)


def test_whitney_examples():
    m, r = F(3), F(5, 2)
    assert whitney_numbers(1, 0, m, r) == r
    assert whitney_numbers(2, 1, m, r) == 2 * r + m
    assert all(whitney_numbers(n, n, m, r) == 1 for n in range(8))
    with pytest.raises(ValueError):
        whitney_numbers(2, 1, 0, r)


@pytest.mark.parametrize("m", [F(1), F(2), F(3)])
@pytest.mark.parametrize("r", [F(0), F(1), F(-1, 2)])
def test_whitney_defining_identity(m, r):
    for n in range(9):
        lhs = XPoly([r, m]) ** n
        rhs = XPoly()
        for k in range(n + 1):
            rhs = rhs + falling_factorial_x(k) * (m**k * whitney_numbers(n, k, m, r))
        assert lhs == rhs


def test_whitney_type_examples():
    m = F(2)
    assert whitney_type_T(2, 1, m, LAM, R) == m * (2 * R - LAM)
    for n in range(8):
        assert whitney_type_T(n, 0, m, LAM, R) == falling_factorial_lambda(R, n, LAM)
        for k in range(n + 1):
            assert whitney_type_T(n, k, F(1), LAM, R) == r_stirling1_lambda(n, k, LAM, R)


def test_three_path_agreement_symbolic():
    n_max = 12
    gfs = {k: r_stirling_gf(k, n_max, LAM, R) for k in range(n_max + 1)}
    unsigned_gfs = {k: r_stirling_gf(k, n_max, -LAM, R) for k in range(n_max + 1)}
    lam_gfs = {k: r_stirling_gf(k, n_max, LAM, F(0)) for k in range(n_max + 1)}
    m = F(3)
    for n in range(n_max + 1):
        oracle = falling_factorial_x(n, LAM, shift=R)
        lam_oracle = falling_factorial_x(n, LAM)
        unsigned_oracle = rising_factorial_x(n, LAM, shift=R)
        whitney_oracle = falling_factorial_x(n, LAM, shift=R, slope=m)
        for k in range(n + 1):
            v = r_stirling1_lambda(n, k, LAM, R)
            assert v == gfs[k].egf_coefficient(n) == oracle.coefficient(k)
            v = stirling1_lambda(n, k, LAM)
            assert v == lam_gfs[k].egf_coefficient(n) == lam_oracle.coefficient(k)
            v = unsigned_r_stirling1_lambda(n, k, LAM, R)
            assert v == unsigned_gfs[k].egf_coefficient(n) == unsigned_oracle.coefficient(k)
            if n <= 9:
                v = whitney_type_T(n, k, m, LAM, R)
                assert v == whitney_type_gf(k, n, m, LAM, R).egf_coefficient(n) == whitney_oracle.coefficient(k)


def test_classical_limit_row4():
    assert [stirling1_lambda(4, k, F(1)) for k in range(5)] == [0, -6, 11, -6, 1]


def test_sign_relation():
    for n in range(13):
        for k in range(n + 1):
            sign = -1 if (n - k) % 2 else 1
            assert unsigned_r_stirling1_lambda(n, k, LAM, R) == sign * r_stirling1_lambda(n, k, LAM, -R)


def test_row_sums():
    for n in range(13):
        total = sum((r_stirling1_lambda(n, k, LAM, R) for k in range(n + 1)), F(0))
        assert total == falling_factorial_lambda(1 + R, n, LAM)


def test_memoization_transparency():
    lam, r = F(5, 7), F(-3, 4)
    families.clear_caches()
    deep = r_stirling1_lambda(14, 6, lam, r)
    families.clear_caches()
    for n in range(15):
        for k in range(n + 1):
            r_stirling1_lambda(n, k, lam, r)
    assert r_stirling1_lambda(14, 6, lam, r) == deep


def test_numeric_and_symbolic_caches_are_disjoint():
    numeric = families.r_stirling_triangle(F(1), F(0))
    symbolic = families.r_stirling_triangle(LAM - LAM + 1, R - R)
    assert numeric is not symbolic
    assert numeric.row(5) == symbolic.row(5)


def test_concurrent_readers_see_whole_rows():
    tri = Triangle("test", [F(1)], families._affine_step(1, lambda n: F(1, 3) - n * F(2, 5)))

    def read(n):
        row = tri.row(n)
        assert len(row) == n + 1
        return row

    with ThreadPoolExecutor(max_workers=8) as pool:
        rows = list(pool.map(read, [40 - (i % 40) for i in range(200)]))
    assert all(row == tri.row(len(row) - 1) for row in rows)
    ref = expand_linear_product([F(1, 3) - i * F(2, 5) for i in range(40)])
    assert list(tri.row(40)) == list(ref.coeffs)


def test_family_params_validation():
    with pytest.raises(ValueError):
        FamilyParams(Family.Whitney, lam=F(1), m=F(2), r=F(1))
    with pytest.raises(ValueError):
        FamilyParams(Family.RStirlingLambda, lam=F(1))
    with pytest.raises(ValueError):
        FamilyParams(Family.Whitney, m=F(0), r=F(1))
    with pytest.raises(ValueError):
        FamilyParams(Family.ClassicalStirling1, x=F(1))
    FamilyParams(Family.ClassicalStirling2)


def test_triangle_shape_and_invariants():
    params = FamilyParams(Family.RStirlingLambda, lam=LAM, r=R)
    rows = triangle(params, 9)
    assert [len(row) for row in rows] == list(range(1, 11))
    assert all(row[-1] == 1 for row in rows)
    assert triangle(FamilyParams(Family.Whitney, m=F(2), r=F(1)), 2) == [[1], [1, 1], [1, 4, 1]]
    daehee = triangle(FamilyParams(Family.DaeheeNumbers), 3)
    assert daehee[2] == [0, F(2, 3), F(11, 6)]
    with pytest.raises(ValueError):
        triangle(params, -1)
