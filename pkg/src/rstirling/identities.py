"""Registry of machine-checkable identities and the runner that evaluates them.

Every identity has a left and a right evaluator that share nothing but the
memoized triangles.  An identity is checked either at numeric samples of
(lam, r, m) or symbolically, with ``lam`` and ``r`` as formal symbols so that
agreement is agreement of polynomials.

Two statements are registered twice.  The product convolutions behind them
carry an ``(r)`` superscript on one factor that the displayed theorem drops,
so the ``*_PRINTED`` form holds only at r = 0 while ``*_CORRECTED`` holds for
all r.  Both are shipped; the printed failures are expected.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .families import (
    daehee_number,
    daehee_polynomial,
    r_stirling1_lambda,
    stirling1_classical,
    stirling1_lambda,
    unsigned_r_stirling1_lambda,
    whitney_numbers,
    whitney_type_T,
)
from .scalars import LamRPoly, binomial, falling_factorial_lambda, format_scalar
from .xpoly import XPoly, falling_factorial_x

NUMERIC = "numeric"
SYMBOLIC = "symbolic"

DEFAULT_LAMS = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2, 3), Fraction(5, 7))
DEFAULT_RS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-3, 4))
DEFAULT_MS = (Fraction(1), Fraction(2), Fraction(3))
DEFAULT_N_NUMERIC = 12
DEFAULT_N_SYMBOLIC = 8


class IdentityConfigError(ValueError):
    """An identity was asked to run in a mode or at a sample it cannot support."""


class Sample(NamedTuple):
    lam: object
    r: object
    m: object = Fraction(1)


def default_samples() -> List[Sample]:
    return [Sample(l, r, m) for l, r, m in itertools.product(DEFAULT_LAMS, DEFAULT_RS, DEFAULT_MS)]


# -- index ranges -----------------------------------------------------------


def _rows(n_max: int) -> Iterator[tuple]:
    for n in range(n_max + 1):
        yield (n,)


def _pairs(n_max: int) -> Iterator[tuple]:
    for n in range(n_max + 1):
        for k in range(n + 1):
            yield (n, k)


def _recurrence_pairs(n_max: int) -> Iterator[tuple]:
    # 1 <= k <= n with row n+1 inside the range
    for n in range(1, n_max):
        for k in range(1, n + 1):
            yield (n, k)


def _split_pairs(n_max: int) -> Iterator[tuple]:
    # n, k >= 0 with n + k <= n_max
    for total in range(n_max + 1):
        for k in range(total + 1):
            yield (total - k, k)


def _triples(n_max: int) -> Iterator[tuple]:
    # m + k <= n <= n_max
    for n in range(n_max + 1):
        for m in range(n + 1):
            for k in range(n - m + 1):
                yield (n, m, k)


# -- helpers shared by several sides ----------------------------------------


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=None)
def _oracle(n: int, lam, r) -> XPoly:
    return falling_factorial_x(n, lam, shift=r)


@lru_cache(maxsize=None)
def _whitney_oracle(n: int, m, lam, r) -> XPoly:
    return falling_factorial_x(n, lam, shift=r, slope=m)


def _inverse_binomial_coeff(l: int, lam, r):
    # (-1)^l (r + (l-1) lam)_{l,lam}: EGF coefficients of (1 + lam t)^(-r/lam)
    return _sign(l) * falling_factorial_lambda(r + (l - 1) * lam, l, lam)


def _daehee_convolution(n: int, k: int, lam, r):
    return sum(
        (binomial(n, l) * daehee_number(l, k) * lam**l * falling_factorial_lambda(r, n - l, lam)
         for l in range(n + 1)),
        Fraction(0),
    )


# -- the identities ---------------------------------------------------------


def _thm21_lhs(p, n):
    return _oracle(n, p.lam, p.r)


def _thm21_rhs(p, n):
    return XPoly(r_stirling1_lambda(n, k, p.lam, p.r) for k in range(n + 1))


def _thm225_lhs(p, n, k):
    return r_stirling1_lambda(n, k, p.lam, p.r)


def _thm225_rhs(p, n, k):
    return sum(
        (binomial(n, m) * stirling1_lambda(m, k, p.lam) * falling_factorial_lambda(p.r, n - m, p.lam)
         for m in range(k, n + 1)),
        Fraction(0),
    )


def _thm23_lhs(p, n, k):
    return _oracle(n + 1, p.lam, p.r).coefficient(k)


def _thm23_rhs(p, n, k):
    row = _oracle(n, p.lam, p.r)
    return row.coefficient(k - 1) - (n * p.lam - p.r) * row.coefficient(k)


def _thm24_lhs(p, n, k):
    return _daehee_convolution(n, k, p.lam, p.r)


def _thm24_rhs(p, n, k):
    total = sum(
        (binomial(k + l, l) * p.r**l * stirling1_lambda(n + k, k + l, p.lam) for l in range(n + 1)),
        Fraction(0),
    )
    return total / binomial(n + k, n)


def _thm26_lhs(p, n, m, k):
    return binomial(m + k, m) * r_stirling1_lambda(n, m + k, p.lam, p.r)


def _thm26_printed_rhs(p, n, m, k):
    return sum(
        (binomial(n, l) * stirling1_lambda(l, k, p.lam) * stirling1_lambda(n - l, m, p.lam)
         for l in range(k, n - m + 1)),
        Fraction(0),
    )


def _thm26_corrected_rhs(p, n, m, k):
    return sum(
        (binomial(n, l) * r_stirling1_lambda(l, k, p.lam, p.r) * stirling1_lambda(n - l, m, p.lam)
         for l in range(k, n - m + 1)),
        Fraction(0),
    )


def _thm27_lhs(p, n, k):
    return stirling1_lambda(n, k, p.lam)


def _thm27_rhs(p, n, k):
    return sum(
        (binomial(n, l) * r_stirling1_lambda(l, k, p.lam, p.r) * _inverse_binomial_coeff(n - l, p.lam, p.r)
         for l in range(k, n + 1)),
        Fraction(0),
    )


def _thm28_lhs(p, n, k):
    return r_stirling1_lambda(n + k, k, p.lam, p.r)


def _thm28_rhs(p, n, k):
    return binomial(n + k, n) * _daehee_convolution(n, k, p.lam, p.r)


def _lam_daehee(p, n, k):
    return p.lam**n * binomial(n + k, k) * daehee_number(n, k)


def _thm29a_rhs(p, n, k):
    return sum(
        (binomial(n + k, l) * r_stirling1_lambda(l, k, p.lam, p.r)
         * _inverse_binomial_coeff(n + k - l, p.lam, p.r)
         for l in range(k, n + k + 1)),
        Fraction(0),
    )


def _thm29b_lhs(p, n, k):
    return daehee_number(n, k)


def _thm29b_rhs(p, n, k):
    x = p.r / p.lam
    total = Fraction(0)
    for l in range(k, n + k + 1):
        j = n + k - l
        total += (binomial(n + k, l) * binomial(l, k) * (1 / p.lam) ** j
                  * _inverse_binomial_coeff(j, p.lam, p.r) * daehee_polynomial(l - k, k, x))
    return total / binomial(n + k, k)


def _thm210_rhs(corrected: bool):
    def rhs(p, n, k):
        total = Fraction(0)
        for j in range(n - k + 1):
            inner = sum(
                (_sign(m) * p.r**m * stirling1_lambda(j, m, p.lam) for m in range(j + 1)),
                Fraction(0),
            )
            if corrected:
                tail = r_stirling1_lambda(n - j, k, p.lam, p.r)
            else:
                tail = stirling1_lambda(n - j, k, p.lam)
            total = total + binomial(n, j) * inner * tail
        return total

    return rhs


def _thm211_lhs(p, n, k):
    return whitney_type_T(n, k, p.m, p.lam, p.r)


def _thm211_rhs(p, n, k):
    total = Fraction(0)
    for j in range(k, n + 1):
        s1 = stirling1_classical(j, k)
        if s1 == 0:
            continue
        for l in range(j, n + 1):
            total = total + stirling1_lambda(n, l, p.lam) * s1 * p.m**j * whitney_numbers(l, j, p.m, p.r)
    return total


def _eq21_lhs(p, n, k):
    return unsigned_r_stirling1_lambda(n, k, p.lam, p.r)


def _eq21_rhs(p, n, k):
    return _sign(n - k) * r_stirling1_lambda(n, k, p.lam, -p.r)


def _eq36_rhs(p, n, k):
    return p.lam**n * binomial(n + k, n) * daehee_polynomial(n, k, p.r / p.lam)


def _eq37_rhs(p, n, k):
    return stirling1_lambda(n + k, k, p.lam)


def _eq43_rhs(p, n, k):
    return _whitney_oracle(n, p.m, p.lam, p.r).coefficient(k) / p.m**k


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    title: str
    index_names: Tuple[str, ...]
    indices: Callable[[int], Iterable[tuple]]
    lhs: Callable
    rhs: Callable
    uses_m: bool = False
    symbolic: bool = True
    lam_nonzero: bool = False
    printed: bool = False
    note: str = ""

    @property
    def default_mode(self) -> str:
        # Printed variants run numerically so each failure names its r sample.
        if self.printed or not self.symbolic:
            return NUMERIC
        return SYMBOLIC


_PRINTED_NOTE = (
    "printed statement uses the plain lambda-Stirling number where its derivation "
    "convolves with S^(r); holds at r = 0 only"
)

REGISTRY: Dict[str, IdentitySpec] = {
    spec.id: spec
    for spec in [
        IdentitySpec("THM2_1", "(x+r)_{n,lam} = sum_k S^(r)(n,k) x^k",
                     ("n",), _rows, _thm21_lhs, _thm21_rhs),
        IdentitySpec("THM2_2_5", "S^(r)(n,k) = sum_m C(n,m) S(m,k) (r)_{n-m,lam}",
                     ("n", "k"), _pairs, _thm225_lhs, _thm225_rhs),
        IdentitySpec("THM2_3", "S^(r)(n+1,k) = S^(r)(n,k-1) - (n lam - r) S^(r)(n,k)",
                     ("n", "k"), _recurrence_pairs, _thm23_lhs, _thm23_rhs),
        IdentitySpec("THM2_4", "sum_l C(n,l) D_l^(k) lam^l (r)_{n-l,lam} = "
                     "sum_l C(k+l,l)/C(n+k,n) r^l S(n+k,k+l)",
                     ("n", "k"), _split_pairs, _thm24_lhs, _thm24_rhs),
        IdentitySpec("THM2_6_PRINTED", "C(m+k,m) S^(r)(n,m+k) = sum_l C(n,l) S(l,k) S(n-l,m)",
                     ("n", "m", "k"), _triples, _thm26_lhs, _thm26_printed_rhs,
                     printed=True, note=_PRINTED_NOTE),
        IdentitySpec("THM2_6_CORRECTED", "C(m+k,m) S^(r)(n,m+k) = sum_l C(n,l) S^(r)(l,k) S(n-l,m)",
                     ("n", "m", "k"), _triples, _thm26_lhs, _thm26_corrected_rhs),
        IdentitySpec("THM2_7", "S(n,k) = sum_l C(n,l) S^(r)(l,k) (-1)^(n-l) (r+lam(n-l-1))_{n-l,lam}",
                     ("n", "k"), _pairs, _thm27_lhs, _thm27_rhs),
        IdentitySpec("THM2_8", "S^(r)(n+k,k) = C(n+k,n) sum_m C(n,m) D_m^(k) lam^m (r)_{n-m,lam}",
                     ("n", "k"), _split_pairs, _thm28_lhs, _thm28_rhs),
        IdentitySpec("THM2_9A", "lam^n C(n+k,k) D_n^(k) = sum_l C(n+k,l) S^(r)(l,k) "
                     "(-1)^(n+k-l) (r+(n+k-l-1)lam)_{n+k-l,lam}",
                     ("n", "k"), _split_pairs, _lam_daehee, _thm29a_rhs),
        IdentitySpec("THM2_9B", "D_n^(k) = C(n+k,k)^-1 sum_l C(n+k,l) C(l,k) lam^-(n+k-l) "
                     "(r+(n+k-l-1)lam)_{n+k-l,lam} (-1)^(n+k-l) D_{l-k}^(k)(r/lam)",
                     ("n", "k"), _split_pairs, _thm29b_lhs, _thm29b_rhs,
                     symbolic=False, lam_nonzero=True),
        IdentitySpec("THM2_10_PRINTED", "S(n,k) = sum_j sum_m C(n,j) (-r)^m S(j,m) S(n-j,k)",
                     ("n", "k"), _pairs, _thm27_lhs, _thm210_rhs(False),
                     printed=True, note=_PRINTED_NOTE),
        IdentitySpec("THM2_10_CORRECTED", "S(n,k) = sum_j sum_m C(n,j) (-r)^m S(j,m) S^(r)(n-j,k)",
                     ("n", "k"), _pairs, _thm27_lhs, _thm210_rhs(True)),
        IdentitySpec("THM2_11", "T(n,k|m) = sum_j sum_l S(n,l) S_1(j,k) m^j W_{m,r}(l,j)",
                     ("n", "k"), _pairs, _thm211_lhs, _thm211_rhs, uses_m=True),
        IdentitySpec("EQ21", "S^(-r)(n,k) = (-1)^(n-k) [n+r, k+r]_{r,lam}",
                     ("n", "k"), _pairs, _eq21_lhs, _eq21_rhs),
        IdentitySpec("EQ36", "S^(r)(n+k,k) = lam^n C(n+k,n) D_n^(k)(r/lam)",
                     ("n", "k"), _split_pairs, _thm28_lhs, _eq36_rhs,
                     symbolic=False, lam_nonzero=True),
        IdentitySpec("EQ37", "lam^n C(n+k,k) D_n^(k) = S(n+k,k)",
                     ("n", "k"), _split_pairs, _lam_daehee, _eq37_rhs),
        IdentitySpec("EQ43", "S^(r)(n,k) = T(n,k|m) / m^k",
                     ("n", "k"), _pairs, _thm225_lhs, _eq43_rhs, uses_m=True),
    ]
}

IDENTITY_IDS: Tuple[str, ...] = tuple(REGISTRY)


# -- checks and reports -----------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    n_max: Optional[int] = None
    samples: Optional[Sequence[Sample]] = None
    mode: Optional[str] = None


@dataclass
class Failure:
    indices: Dict[str, int]
    params: Dict[str, str]
    lhs: str
    rhs: str


@dataclass
class IdentityReport:
    id: str
    mode: str
    n_max: int
    instances: int = 0
    failures: List[Failure] = field(default_factory=list)
    printed: bool = False
    note: str = ""

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "mode": self.mode,
            "n_max": self.n_max,
            "instances": self.instances,
            "failures": [
                {"indices": f.indices, "params": f.params, "lhs": f.lhs, "rhs": f.rhs}
                for f in self.failures
            ],
            "status": self.status,
            "printed_variant": self.printed,
            "note": self.note,
        }


def _render(value) -> str:
    if isinstance(value, XPoly):
        return str(value)
    return format_scalar(value)


def _parameter_points(spec: IdentitySpec, mode: str, samples: Sequence[Sample]) -> List[Sample]:
    if mode == SYMBOLIC:
        lam, r = LamRPoly.lam(), LamRPoly.r()
        if spec.uses_m:
            ms = list(dict.fromkeys(s.m for s in samples))
            return [Sample(lam, r, m) for m in ms]
        return [Sample(lam, r)]
    points = []
    for s in samples:
        points.append(Sample(s.lam, s.r, s.m if spec.uses_m else Fraction(1)))
    return list(dict.fromkeys(points))


def _validate(spec: IdentitySpec, mode: str, points: Sequence[Sample]) -> None:
    if mode not in (NUMERIC, SYMBOLIC):
        raise IdentityConfigError(f"unknown mode {mode!r}")
    if mode == SYMBOLIC and not spec.symbolic:
        raise IdentityConfigError(
            f"{spec.id} evaluates a Daehee polynomial at r/lam, which is not a "
            "polynomial in lam; use numeric mode with lam != 0"
        )
    for p in points:
        if spec.lam_nonzero and p.lam == 0:
            raise IdentityConfigError(f"{spec.id} needs lam != 0")
        if spec.uses_m and p.m == 0:
            raise IdentityConfigError(f"{spec.id} needs m != 0")


def check(ic: IdentityCheck) -> IdentityReport:
    """Evaluate both sides of one identity over its index range and samples."""
    try:
        spec = REGISTRY[ic.id]
    except KeyError:
        raise IdentityConfigError(f"unknown identity {ic.id!r}") from None
    mode = ic.mode or spec.default_mode
    n_max = ic.n_max
    if n_max is None:
        n_max = DEFAULT_N_SYMBOLIC if mode == SYMBOLIC else DEFAULT_N_NUMERIC
    samples = default_samples() if ic.samples is None else list(ic.samples)
    points = _parameter_points(spec, mode, samples)
    _validate(spec, mode, points)

    report = IdentityReport(spec.id, mode, n_max, printed=spec.printed, note=spec.note)
    indices = list(spec.indices(n_max))
    for p in points:
        for idx in indices:
            report.instances += 1
            lhs = spec.lhs(p, *idx)
            rhs = spec.rhs(p, *idx)
            if lhs != rhs:
                params = {"lam": format_scalar(p.lam), "r": format_scalar(p.r)}
                if spec.uses_m:
                    params["m"] = format_scalar(p.m)
                report.failures.append(
                    Failure(dict(zip(spec.index_names, idx)), params, _render(lhs), _render(rhs))
                )
    return report


@dataclass
class SuiteConfig:
    ids: Optional[Sequence[str]] = None
    n_numeric: int = DEFAULT_N_NUMERIC
    n_symbolic: int = DEFAULT_N_SYMBOLIC
    samples: Optional[Sequence[Sample]] = None
    # None: each identity's default; "numeric": all numeric;
    # "symbolic": symbolic wherever the identity permits it.
    mode: Optional[str] = None
    workers: int = 1


def _mode_for(spec: IdentitySpec, requested: Optional[str]) -> str:
    if requested is None:
        return spec.default_mode
    if requested == SYMBOLIC and not spec.symbolic:
        return NUMERIC
    return requested


def run_suite(config: Optional[SuiteConfig] = None) -> List[IdentityReport]:
    """Run the registered identities; reports come back in registry order."""
    config = config or SuiteConfig()
    ids = list(IDENTITY_IDS) if config.ids is None else list(config.ids)
    for i in ids:
        if i not in REGISTRY:
            raise IdentityConfigError(f"unknown identity {i!r}")
    ids.sort(key=IDENTITY_IDS.index)

    def one(identity_id: str) -> IdentityReport:
        spec = REGISTRY[identity_id]
        mode = _mode_for(spec, config.mode)
        n_max = config.n_symbolic if mode == SYMBOLIC else config.n_numeric
        return check(IdentityCheck(identity_id, n_max, config.samples, mode))

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(one, ids))
    return [one(i) for i in ids]


def suite_ok(reports: Iterable[IdentityReport]) -> bool:
    """True when every non-printed identity passed."""
    return all(rep.passed for rep in reports if not rep.printed)
