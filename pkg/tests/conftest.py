from fractions import Fraction

import pytest
from hypothesis import strategies as st

from rstirling.scalars import LamRPoly

LAM = LamRPoly.lam()
R = LamRPoly.r()

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def lamr_polys(draw, max_terms=4, max_deg=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        mono = (draw(st.integers(0, max_deg)), draw(st.integers(0, max_deg)))
        terms[mono] = draw(small_fractions)
    return LamRPoly(terms)


@pytest.fixture
def lam():
    return LAM


@pytest.fixture
def r():
    return R


F = Fraction
