"""Truncated power series in ``t`` and the generating functions built from them.

Coefficients are stored as ordinary coefficients; ``egf_coefficient`` reads
off ``n! * coeffs[n]``.  Every generating function here is assembled from
closed-form coefficient formulas, so no quotient by ``lam`` is ever taken.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List

from .scalars import format_scalar


class TruncatedSeries:
    """Series c_0 + c_1 t + ... + c_N t^N, exact up to the order N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(1)], order)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def egf_coefficient(self, n: int):
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n] * math.factorial(n)

    def egf_coefficients(self) -> List:
        return [self.egf_coefficient(n) for n in range(self.order + 1)]

    def __add__(self, other: "TruncatedSeries"):
        order = min(self.order, other.order)
        return TruncatedSeries(
            (self.coeffs[i] + other.coeffs[i] for i in range(order + 1)), order
        )

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries((a * c for a in self.coeffs), self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        return series_mul(self, other)

    def __pow__(self, k: int):
        result = TruncatedSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        body = ", ".join(format_scalar(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller of the two orders."""
    order = min(a.order, b.order)
    out = []
    for n in range(order + 1):
        acc = Fraction(0)
        for i in range(n + 1):
            ai = a.coeffs[i]
            if ai == 0:
                continue
            acc = acc + ai * b.coeffs[n - i]
        out.append(acc)
    return TruncatedSeries(out, order)


def log1p_over_lambda(order: int, lam=1) -> TruncatedSeries:
    """log(1 + lam t)/lam, i.e. sum_{j>=1} (-1)^(j-1) lam^(j-1) t^j / j.

    At lam = 0 this degenerates to t.
    """
    coeffs = [Fraction(0)]
    power = Fraction(1)
    for j in range(1, order + 1):
        sign = 1 if j % 2 else -1
        coeffs.append(power * Fraction(sign, j))
        power = power * lam
    return TruncatedSeries(coeffs, order)


def lambda_binomial_series(r, order: int, lam=1) -> TruncatedSeries:
    """(1 + lam t)^(r/lam) with t^l coefficient (r)_{l,lam} / l!."""
    coeffs = [Fraction(1)]
    c = Fraction(1)
    for l in range(1, order + 1):
        c = c * (r - (l - 1) * lam) / l
        coeffs.append(c)
    return TruncatedSeries(coeffs, order)


def r_stirling_gf(k: int, order: int, lam=1, r=0) -> TruncatedSeries:
    """(1/k!) (log(1 + lam t)/lam)^k (1 + lam t)^(r/lam).

    The EGF coefficient at t^n is the lambda r-Stirling number S(n, k).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if order < k:
        raise ValueError(f"order {order} must be >= k = {k}")
    logpow = log1p_over_lambda(order, lam) ** k
    return series_mul(logpow, lambda_binomial_series(r, order, lam)).scale(
        Fraction(1, math.factorial(k))
    )


def whitney_type_gf(k: int, order: int, m, lam=1, r=0) -> TruncatedSeries:
    """(m^k/k!) (log(1 + lam t)/lam)^k (1 + lam t)^(r/lam)."""
    return r_stirling_gf(k, order, lam, r).scale(Fraction(m) ** k)


def log1p_over_t(order: int) -> TruncatedSeries:
    """log(1 + t)/t = sum_j (-1)^j t^j / (j + 1)."""
    return TruncatedSeries(
        (Fraction((-1) ** j, j + 1) for j in range(order + 1)), order
    )


def daehee_gf(k: int, x=0, order: int = 0) -> TruncatedSeries:
    """(log(1 + t)/t)^k (1 + t)^x; EGF coefficients are D_n^(k)(x)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return series_mul(log1p_over_t(order) ** k, lambda_binomial_series(x, order, 1))
