"""Dense polynomials in ``x`` with exact scalar coefficients.

The product expansions here are the ground truth the number families are
checked against: they multiply out linear factors and nothing else.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .scalars import format_scalar


def _trim(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class XPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def x(cls) -> "XPoly":
        return cls([0, 1])

    @property
    def degree(self) -> Optional[int]:
        """Degree in x, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other) -> "XPoly":
        return other if isinstance(other, XPoly) else XPoly([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return XPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = XPoly([1])
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"XPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = format_scalar(c)
            if not mono:
                parts.append(f"({cs})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return "+".join(parts)


def coefficient(p: XPoly, k: int):
    return p.coefficient(k)


def expand_affine_product(constants: Iterable, slope=1) -> XPoly:
    """Multiply out prod_i (slope*x + c_i)."""
    result = XPoly([1])
    for c in constants:
        result = result * XPoly([c, slope])
    return result


def expand_linear_product(constants: Iterable) -> XPoly:
    """Multiply out prod_i (x + c_i); the empty product is 1."""
    return expand_affine_product(constants, 1)


def falling_factorial_x(n: int, lam=1, shift=0, slope=1) -> XPoly:
    """(slope*x + shift)_{n,lam} expanded in powers of x."""
    return expand_affine_product((shift - i * lam for i in range(n)), slope)


def rising_factorial_x(n: int, lam=1, shift=0) -> XPoly:
    """(x + shift)(x + shift + lam)...(x + shift + (n-1) lam) expanded in x."""
    return expand_linear_product(shift + i * lam for i in range(n))
