"""Shifted factorials, Gamma/digamma and the Gauss hypergeometric series 2F1.

Only real arguments are handled.  ``gauss_2f1`` sums the defining power
series for ``0 <= z <= 1/2``, maps negative arguments through the Pfaff
transformation, sums slowly for ``1/2 < z < 1`` and uses the Gauss
summation formula at ``z = 1``.  Callers that need accuracy close to
``z = 1`` are expected to apply their own complementary identity first.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DivergenceError, DomainError, ParameterError, RangeError

__all__ = [
    "Method",
    "Evaluation",
    "pochhammer",
    "gamma",
    "digamma",
    "sum_series",
    "gauss_2f1",
    "log_tail_series",
    "EULER_GAMMA",
    "MAX_TERMS",
    "Z_SWITCH",
]

EULER_GAMMA = 0.57721566490153286061
MAX_TERMS = 1_000_000
Z_SWITCH = 0.5
_POLE_TOL = 1e-12


class Method(enum.Enum):
    SERIES = "series"
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed-form"
    INVERSION = "inversion"


@dataclass(frozen=True)
class Evaluation:
    """A computed value together with a claimed absolute error bound."""

    value: float
    abs_err: float
    method: Method

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise RangeError(f"non-finite value {self.value!r}")
        if not (math.isfinite(self.abs_err) and self.abs_err >= 0.0):
            raise ValueError(f"abs_err must be finite and >= 0, got {self.abs_err!r}")

    def __float__(self) -> float:
        return self.value


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``a (a+1) ... (a+n-1)``, with ``(a, 0) = 1``."""
    if n < 0 or int(n) != n:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    out = 1.0
    for k in range(int(n)):
        out *= a + k
    if not math.isfinite(out):
        raise RangeError(f"pochhammer({a}, {n}) overflows")
    return out


# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(x: float) -> float:
    """Gamma function for real ``x`` (Lanczos approximation with reflection)."""
    if x <= 0.0 and x == math.floor(x):
        raise ParameterError(f"gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    x -= 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    # split the power to delay overflow
    half = t ** (0.5 * (x + 0.5))
    return math.sqrt(2.0 * math.pi) * half * (half * math.exp(-t)) * acc


# Bernoulli numbers B_{2k} / (2k) for the asymptotic digamma expansion.
_DIGAMMA_ASYMP = (1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12)


def digamma(x: float) -> float:
    """Logarithmic derivative of Gamma for real ``x > 0``."""
    if x <= 0.0:
        raise DomainError("digamma is only implemented for x > 0")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for c in _DIGAMMA_ASYMP:
        tail += c * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - tail


def sum_series(
    first: float,
    ratio: Callable[[int], float],
    tol: float,
    limit_ratio: float = 0.0,
    max_terms: int = MAX_TERMS,
) -> tuple[float, float]:
    """Sum ``sum_n t_n`` given ``t_0`` and ``t_{n+1} / t_n = ratio(n)``.

    Stops once the terms decrease in magnitude and the geometric tail
    estimate ``|t_{n+1}| / (1 - rho)`` falls below ``0.5 * tol * |S|``.
    ``rho`` is the larger of the last observed ratio and ``limit_ratio``
    (the known limit of the ratios), clamped to ``[0, 0.9]``.

    Returns ``(sum, tail_bound)``.
    """
    total = first
    term = first
    prev_mag = math.inf
    for n in range(max_terms):
        r = ratio(n)
        nxt = term * r
        if nxt == 0.0:
            return total, 0.0
        rho = min(max(abs(r), abs(limit_ratio)), 0.9)
        tail = abs(nxt) / (1.0 - rho)
        mag = abs(term)
        if mag < prev_mag and tail <= 0.5 * tol * abs(total):
            return total, tail
        total += nxt
        if not math.isfinite(total):
            raise RangeError("series partial sum is not finite")
        prev_mag = mag
        term = nxt
    raise ConvergenceError(f"series did not converge within {max_terms} terms")


def _is_nonpositive_int(v: float) -> bool:
    return v <= _POLE_TOL and abs(v - round(v)) <= _POLE_TOL


def _series_2f1(a: float, b: float, c: float, z: float, tol: float) -> tuple[float, float]:
    def ratio(n: int) -> float:
        return (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z

    return sum_series(1.0, ratio, tol, limit_ratio=z)


def gauss_2f1(a: float, b: float, c: float, z: float, tol: float = 1e-15) -> Evaluation:
    """Gauss hypergeometric function ``2F1(a, b; c; z)`` for real ``z <= 1``.

    >>> round(gauss_2f1(1, 1, 2, 0.5).value, 10)
    1.3862943611
    """
    if not (0.0 < tol <= 1e-3):
        raise ValueError(f"tol must lie in (0, 1e-3], got {tol!r}")
    if _is_nonpositive_int(c):
        raise ParameterError(f"c = {c} is zero or a negative integer")
    if not math.isfinite(z) or z > 1.0:
        raise DomainError(f"z = {z} outside (-inf, 1]")
    if z == 0.0:
        return Evaluation(1.0, 0.0, Method.SERIES)
    if z == 1.0:
        s = c - a - b
        if s <= 0.0:
            raise DivergenceError(f"2F1 diverges at z=1 when c-a-b = {s} <= 0")
        if _is_nonpositive_int(c - a) or _is_nonpositive_int(c - b):
            return Evaluation(0.0, 0.0, Method.CLOSED_FORM)
        value = gamma(c) * gamma(s) / (gamma(c - a) * gamma(c - b))
        if not math.isfinite(value):
            raise RangeError("Gauss summation overflowed")
        return Evaluation(value, 1e-14 * abs(value), Method.CLOSED_FORM)
    if z < 0.0:
        w = z / (z - 1.0)
        # Two Pfaff forms share the argument w; prefer one that terminates.
        if _is_nonpositive_int(c - a) and not _is_nonpositive_int(c - b):
            a, b = b, a
        pref = (1.0 - z) ** (-a)
        s, err = _series_2f1(a, c - b, c, w, tol)
        value = pref * s
        if not math.isfinite(value):
            raise RangeError("2F1 overflowed after Pfaff transformation")
        return Evaluation(value, abs(pref) * err, Method.SERIES)
    s, err = _series_2f1(a, b, c, z, tol)
    return Evaluation(s, err, Method.SERIES)


def log_tail_series(b: float, w: float, tol: float = 1e-15) -> tuple[float, float]:
    """``sum_{k>=1} (b)_k w^k / (k! k)`` for ``|w| < 1``.

    This equals ``int_0^w ((1-v)^(-b) - 1) / v dv`` and appears in the
    logarithmic endpoint expansions of artanh_p and arsinh_p.
    Returns ``(sum, tail_bound)``.
    """
    if w == 0.0:
        return 0.0, 0.0
    if not abs(w) < 1.0:
        raise DomainError(f"|w| = {abs(w)} must be < 1")

    def ratio(n: int) -> float:
        k = n + 1
        return (b + k) * k / ((k + 1.0) * (k + 1.0)) * w

    return sum_series(b * w, ratio, tol, limit_ratio=w)
