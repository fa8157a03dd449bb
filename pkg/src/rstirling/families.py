"""Number families computed by recurrence over memoized triangles.

Each Stirling-type family is a triangle ``rows[n][k]`` (``0 <= k <= n``)
grown one row at a time from the factorization

    P_{n+1}(x) = P_n(x) * (a*x + b_n)

of its defining product, so that ``row_{n+1}[k] = a*row_n[k-1] + b_n*row_n[k]``.
With ``row_n[-1] = 0`` this seeds the ``k = 0`` column too.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .scalars import binomial, falling_factorial_lambda, format_scalar
from .series import daehee_gf

__all__ = [
    "Family",
    "FamilyParams",
    "Triangle",
    "falling_factorial_lambda",
    "r_stirling1_lambda",
    "stirling1_lambda",
    "unsigned_r_stirling1_lambda",
    "stirling1_classical",
    "stirling2_classical",
    "daehee_number",
    "daehee_polynomial",
    "whitney_numbers",
    "whitney_type_T",
    "triangle",
]

StepFn = Callable[[Sequence, int], List]


class Triangle:
    """Append-only table of rows; row ``n`` has ``n + 1`` entries.

    A single lock serializes growth.  Rows are published whole, so a
    concurrent reader sees either no row ``n`` or the finished one.
    """

    def __init__(self, key, first_row: Sequence, step: StepFn):
        self.key = key
        self._rows: List[tuple] = [tuple(first_row)]
        self._step = step
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._rows)

    def row(self, n: int) -> tuple:
        if n < 0:
            raise IndexError(f"row index must be >= 0, got {n}")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    last = len(self._rows) - 1
                    self._rows.append(tuple(self._step(self._rows[last], last)))
        return self._rows[n]

    def value(self, n: int, k: int):
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        return self.row(n)[k]

    def rows(self, n_max: int) -> List[tuple]:
        if n_max >= 0:
            self.row(n_max)
        return self._rows[: n_max + 1]


def _affine_step(slope, offset: Callable[[int], object]) -> StepFn:
    """Row step for P_{n+1} = P_n * (slope*x + offset(n))."""

    def step(prev: Sequence, n: int) -> List:
        b = offset(n)
        nxt = []
        for k in range(n + 2):
            v = 0
            if k >= 1:
                v = v + slope * prev[k - 1]
            if k <= n:
                v = v + b * prev[k]
            nxt.append(v)
        return nxt

    return step


def _stirling2_step(prev: Sequence, n: int) -> List:
    return [
        (k * prev[k] if k <= n else 0) + (prev[k - 1] if k >= 1 else 0)
        for k in range(n + 2)
    ]


def _tag(value):
    # Fraction(1) == LamRPoly.const(1); the type name keeps caches disjoint.
    return (type(value).__name__, value)


_cache: Dict[tuple, Triangle] = {}
_cache_lock = threading.Lock()


def _cached(key: tuple, build: Callable[[], Triangle]) -> Triangle:
    tri = _cache.get(key)
    if tri is None:
        with _cache_lock:
            tri = _cache.get(key)
            if tri is None:
                tri = _cache[key] = build()
    return tri


def clear_caches() -> None:
    with _cache_lock:
        _cache.clear()
        _daehee_cache.clear()


def r_stirling_triangle(lam, r) -> Triangle:
    key = ("r-stirling", _tag(lam), _tag(r))
    return _cached(key, lambda: Triangle(key, [Fraction(1)],
                                         _affine_step(1, lambda n: r - n * lam)))


def unsigned_r_stirling_triangle(lam, r) -> Triangle:
    key = ("unsigned-r-stirling", _tag(lam), _tag(r))
    return _cached(key, lambda: Triangle(key, [Fraction(1)],
                                         _affine_step(1, lambda n: r + n * lam)))


def whitney_type_triangle(m, lam, r) -> Triangle:
    m = Fraction(m)
    key = ("whitney-type", _tag(m), _tag(lam), _tag(r))
    return _cached(key, lambda: Triangle(key, [Fraction(1)],
                                         _affine_step(m, lambda n: r - n * lam)))


def _classical1_triangle() -> Triangle:
    key = ("stirling1",)
    return _cached(key, lambda: Triangle(key, [1], _affine_step(1, lambda n: -n)))


def _classical2_triangle() -> Triangle:
    key = ("stirling2",)
    return _cached(key, lambda: Triangle(key, [1], _stirling2_step))


def r_stirling1_lambda(n: int, k: int, lam, r):
    """S_{1,lam}^{(r)}(n, k) via S(n+1,k) = S(n,k-1) - (n lam - r) S(n,k)."""
    if n < 0:
        return Fraction(0)
    return r_stirling_triangle(lam, r).value(n, k)


def stirling1_lambda(n: int, k: int, lam):
    return r_stirling1_lambda(n, k, lam, Fraction(0))


def unsigned_r_stirling1_lambda(n: int, k: int, lam, r):
    """Coefficient of x^k in (x + r)(x + r + lam)...(x + r + (n-1) lam)."""
    if n < 0:
        return Fraction(0)
    return unsigned_r_stirling_triangle(lam, r).value(n, k)


def stirling1_classical(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind, s(n+1,k) = s(n,k-1) - n s(n,k)."""
    if n < 0:
        return 0
    return _classical1_triangle().value(n, k)


def stirling2_classical(n: int, k: int) -> int:
    if n < 0:
        return 0
    return _classical2_triangle().value(n, k)


class _DaeheeColumn:
    """EGF coefficients D_0^(k)(x), ..., regrown at double order when exceeded."""

    def __init__(self, k: int, x):
        self.k = k
        self.x = x
        self.values: tuple = ()
        self.lock = threading.Lock()

    def get(self, n: int):
        if n >= len(self.values):
            with self.lock:
                if n >= len(self.values):
                    order = max(n, 2 * len(self.values), 8)
                    self.values = tuple(daehee_gf(self.k, self.x, order).egf_coefficients())
        return self.values[n]


_daehee_cache: Dict[tuple, _DaeheeColumn] = {}


def daehee_polynomial(n: int, k: int, x):
    """Higher-order Daehee polynomial D_n^(k)(x)."""
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be >= 0, got n={n}, k={k}")
    key = (k, _tag(x))
    col = _daehee_cache.get(key)
    if col is None:
        with _cache_lock:
            col = _daehee_cache.setdefault(key, _DaeheeColumn(k, x))
    return col.get(n)


def daehee_number(n: int, k: int) -> Fraction:
    return daehee_polynomial(n, k, Fraction(0))


def whitney_numbers(n: int, k: int, m, r):
    """r-Whitney numbers W_{m,r}(n, k).

    Expanding (m x + r)^n binomially and writing x^j = sum_k S2(j,k) (x)_k gives
    W_{m,r}(n,k) = sum_j C(n,j) m^(j-k) r^(n-j) S2(j,k).
    """
    m = Fraction(m)
    if m == 0:
        raise ValueError("Whitney numbers need m != 0")
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    total = Fraction(0)
    for j in range(k, n + 1):
        total = total + binomial(n, j) * m ** (j - k) * r ** (n - j) * stirling2_classical(j, k)
    return total


def whitney_type_T(n: int, k: int, m, lam, r):
    """Coefficient of x^k in (m x + r)_{n,lam}, grown by its own recurrence."""
    if n < 0:
        return Fraction(0)
    return whitney_type_triangle(m, lam, r).value(n, k)


# -- uniform family interface ---------------------------------------------


class Family(enum.Enum):
    LambdaStirling1 = "lambda-stirling"
    RStirlingLambda = "r-stirling-lambda"
    UnsignedRStirlingLambda = "unsigned-r-stirling-lambda"
    ClassicalStirling1 = "stirling1"
    ClassicalStirling2 = "stirling2"
    DaeheeNumbers = "daehee"
    DaeheePolynomial = "daehee-polynomial"
    Whitney = "whitney"
    WhitneyTypeT = "whitney-type"


FAMILY_PARAMS: Dict[Family, Tuple[str, ...]] = {
    Family.LambdaStirling1: ("lam",),
    Family.RStirlingLambda: ("lam", "r"),
    Family.UnsignedRStirlingLambda: ("lam", "r"),
    Family.ClassicalStirling1: (),
    Family.ClassicalStirling2: (),
    Family.DaeheeNumbers: (),
    Family.DaeheePolynomial: ("x",),
    Family.Whitney: ("m", "r"),
    Family.WhitneyTypeT: ("m", "lam", "r"),
}


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    lam: object = None
    r: object = None
    m: Optional[Fraction] = None
    x: object = None

    def __post_init__(self):
        allowed = FAMILY_PARAMS[self.family]
        for name in ("lam", "r", "m", "x"):
            given = getattr(self, name) is not None
            if given and name not in allowed:
                raise ValueError(f"family {self.family.value} takes no parameter {name!r}")
            if not given and name in allowed:
                raise ValueError(f"family {self.family.value} requires parameter {name!r}")
        if self.m is not None:
            if not isinstance(self.m, (int, Fraction)):
                raise ValueError("m must be a rational number")
            if self.family is Family.Whitney and self.m == 0:
                raise ValueError("Whitney numbers need m != 0")

    def rendered(self) -> Dict[str, str]:
        return {
            name: format_scalar(getattr(self, name))
            for name in FAMILY_PARAMS[self.family]
        }


def family_value(params: FamilyParams, n: int, k: int):
    """Single entry (n, k) of the family selected by ``params``."""
    f = params.family
    if f is Family.LambdaStirling1:
        return stirling1_lambda(n, k, params.lam)
    if f is Family.RStirlingLambda:
        return r_stirling1_lambda(n, k, params.lam, params.r)
    if f is Family.UnsignedRStirlingLambda:
        return unsigned_r_stirling1_lambda(n, k, params.lam, params.r)
    if f is Family.ClassicalStirling1:
        return stirling1_classical(n, k)
    if f is Family.ClassicalStirling2:
        return stirling2_classical(n, k)
    if f is Family.DaeheeNumbers:
        return daehee_number(n, k)
    if f is Family.DaeheePolynomial:
        return daehee_polynomial(n, k, params.x)
    if f is Family.Whitney:
        return whitney_numbers(n, k, params.m, params.r)
    if f is Family.WhitneyTypeT:
        return whitney_type_T(n, k, params.m, params.lam, params.r)
    raise AssertionError(f)


def triangle(params: FamilyParams, n_max: int) -> List[List]:
    """Rows 0..n_max of the family; row n holds entries k = 0..n."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    return [[family_value(params, n, k) for k in range(n + 1)] for n in range(n_max + 1)]
