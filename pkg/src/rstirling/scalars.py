"""Exact scalars: rationals and polynomials in the formal symbols ``lam`` and ``r``.

Numeric values are plain :class:`fractions.Fraction` (or ``int``).  Symbolic
values are :class:`LamRPoly`, a sparse map from exponent pairs ``(i, j)`` of
``lam**i * r**j`` to rational coefficients.  Both mix freely under ``+ - *``
and ``==``, so every routine downstream is written once and works in either
mode.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Tuple, Union

Monomial = Tuple[int, int]
Rational = Fraction
Scalar = Union[int, Fraction, "LamRPoly"]

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")
_FACTOR_RE = re.compile(r"^(lam|r)(?:\^(\d+))?$")


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class LamRPoly:
    """Sparse bivariate polynomial in ``lam`` and ``r`` over the rationals.

    Instances are immutable and hashable.  A constant polynomial compares
    and hashes equal to the corresponding ``Fraction``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Monomial, object] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def lam(cls) -> "LamRPoly":
        return cls({(1, 0): 1})

    @classmethod
    def r(cls) -> "LamRPoly":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c) -> "LamRPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono == (0, 0) for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def evaluate(self, lam, r) -> Fraction:
        lam = _as_fraction(lam)
        r = _as_fraction(r)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * lam**i * r**j
        return total

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LamRPoly | None":
        if isinstance(other, LamRPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LamRPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return LamRPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LamRPoly({mono: -c for mono, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LamRPoly({mono: c * other for mono, c in self._terms.items()})
        if not isinstance(other, LamRPoly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                mono = (i1 + i2, j1 + j2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return LamRPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Division only by nonzero constants; quotients by lam or r leave the ring.
        if isinstance(other, LamRPoly):
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("LamRPoly division by zero")
        inv = 1 / Fraction(other)
        return LamRPoly({mono: c * inv for mono, c in self._terms.items()})

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {e!r}")
        result = LamRPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LamRPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_eval(p, lam, r) -> Fraction:
    """Substitute ``lam`` and ``r`` into ``p``; plain rationals pass through."""
    if isinstance(p, LamRPoly):
        return p.evaluate(lam, r)
    return _as_fraction(p)


def falling_factorial_lambda(x, n: int, lam):
    """The lambda-falling factorial x(x - lam)(x - 2 lam)...(x - (n-1) lam)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    result = Fraction(1)
    for i in range(n):
        result = result * (x - i * lam)
    return result


# -- text form ------------------------------------------------------------


def format_rational(q) -> str:
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; only the numerator may carry a minus sign."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(s)


def _monomial_str(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("lam" if i == 1 else f"lam^{i}")
    if j:
        parts.append("r" if j == 1 else f"r^{j}")
    return "*".join(parts)


def _term_order(item):
    (i, j), _ = item
    return (-(i + j), -j)


def format_poly(p: LamRPoly) -> str:
    """Canonical text: total degree descending, then r-degree descending."""
    if p.is_zero():
        return "0"
    out = []
    for (i, j), c in sorted(p.terms.items(), key=_term_order):
        mono = _monomial_str(i, j)
        if not mono:
            term = format_rational(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{format_rational(c)}*{mono}"
        if out and not term.startswith("-"):
            term = "+" + term
        out.append(term)
    return "".join(out)


def parse_poly(text: str) -> LamRPoly:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    terms: Dict[Monomial, Fraction] = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        coeff = Fraction(-1 if sign == "-" else 1)
        i = j = 0
        for factor in body.split("*"):
            m = _FACTOR_RE.match(factor)
            if m:
                e = int(m.group(2) or 1)
                if m.group(1) == "lam":
                    i += e
                else:
                    j += e
            else:
                coeff *= parse_rational(factor)
        terms[(i, j)] = terms.get((i, j), 0) + coeff
    if "".join(sign + body for sign, body in re.findall(r"([+-]?)([^+-]+)", s)) != s:
        raise ValueError(f"malformed polynomial: {text!r}")
    return LamRPoly(terms)


def format_scalar(value) -> str:
    if isinstance(value, LamRPoly):
        return format_poly(value)
    return format_rational(value)


def parse_scalar(text: str):
    """Parse a rendered scalar, returning a Fraction when no symbol occurs."""
    s = text.strip()
    if "lam" in s or "r" in s:
        return parse_poly(s)
    return parse_rational(s)

