"""Adaptive Gauss-Kronrod quadrature of the defining integrals.

This is the independent cross-check for the hypergeometric route: it never
touches a series, only the integrands themselves.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DomainError
from .hypergeom import Evaluation, Method

__all__ = ["IntegralSpec", "integrate", "arc_integral", "kernel", "MAX_INTERVALS"]

MAX_INTERVALS = 100_000

# 7-point Gauss / 15-point Kronrod nodes on [-1, 1] (nonnegative half).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for nodes _XGK[1], _XGK[3], _XGK[5], _XGK[7].
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    resk = fc * _WGK[7]
    resg = fc * _WG[3]
    for j in range(7):
        dx = half * _XGK[j]
        f1 = f(center - dx)
        f2 = f(center + dx)
        if not (math.isfinite(f1) and math.isfinite(f2)):
            raise DomainError(f"non-finite integrand sample near {center - dx} / {center + dx}")
        resk += _WGK[j] * (f1 + f2)
        if j % 2 == 1:
            resg += _WG[j // 2] * (f1 + f2)
    if not math.isfinite(fc):
        raise DomainError(f"non-finite integrand sample at {center}")
    return resk * half, abs((resk - resg) * half)


def integrate(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> Evaluation:
    """Integrate ``f`` over ``[a, b]`` by globally adaptive G7-K15 bisection.

    The interval with the largest error estimate is split until the summed
    estimates drop below ``tol``.  Nodes never touch the endpoints, so an
    integrable endpoint singularity is tolerated (slowly).
    """
    if not a < b:
        if a == b:
            return Evaluation(0.0, 0.0, Method.QUADRATURE)
        raise ValueError(f"need a < b, got [{a}, {b}]")
    value, err = _gk15(f, a, b)
    heap = [(-err, a, b, value)]
    total_val, total_err = value, err
    n_intervals = 1
    while total_err > tol:
        if n_intervals >= MAX_INTERVALS:
            raise ConvergenceError(f"subdivision limit {MAX_INTERVALS} reached (error {total_err:.3g})")
        neg_err, lo, hi, val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ConvergenceError(f"interval [{lo}, {hi}] cannot be split further")
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        total_val += v1 + v2 - val
        total_err += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        n_intervals += 1
    # Re-add from scratch to shed the running-sum drift.
    total_val = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    return Evaluation(total_val, total_err, Method.QUADRATURE)


@dataclass(frozen=True)
class IntegralSpec:
    """Which defining integral to evaluate, and up to where.

    ``kind`` is one of ``"arcsin"``, ``"arccos"``, ``"arctan"``, ``"arsinh"``,
    ``"artanh"``, ``"arcsin_pq"``, ``"arccos_pq"``, ``"arsinh_pq"``.
    ``q`` defaults to ``p``.
    """

    kind: str
    p: float
    upper: float
    q: float | None = None


def kernel(kind: str, p: float, q: float | None = None) -> Callable[[float], float]:
    """The integrand whose integral from 0 defines the named inverse function."""
    q = p if q is None else q
    if kind in ("arcsin", "arcsin_pq"):
        return lambda t: (1.0 - t**q) ** (-1.0 / p)
    if kind == "arctan":
        return lambda t: 1.0 / (1.0 + t**p)
    if kind in ("arsinh", "arsinh_pq"):
        return lambda t: (1.0 + t**q) ** (-1.0 / p)
    if kind == "artanh":
        return lambda t: 1.0 / (1.0 - t**p)
    raise ValueError(f"no kernel for kind {kind!r}")


def _check_upper(kind: str, upper: float) -> None:
    if not (math.isfinite(upper) and upper >= 0.0):
        raise DomainError(f"upper limit {upper} must be finite and >= 0")
    if kind in ("arcsin", "arccos", "arcsin_pq", "arccos_pq", "arsinh_pq") and upper > 1.0:
        raise DomainError(f"{kind}: upper limit {upper} > 1")
    if kind == "artanh" and upper >= 1.0:
        raise DomainError(f"artanh: upper limit {upper} >= 1 (integral diverges)")


def _arcsin_type(p: float, q: float, upper: float, tol: float) -> Evaluation:
    """``int_0^upper (1 - t^q)^(-1/p) dt`` with the t = 1 singularity removed."""
    split = 0.5
    if upper <= split:
        return integrate(kernel("arcsin_pq", p, q), 0.0, upper, tol)
    head = integrate(kernel("arcsin_pq", p, q), 0.0, split, 0.5 * tol)
    # t = 1 - u^k, k = p/(p-1): the integrand becomes bounded in u.
    k = p / (p - 1.0)

    def g(u: float) -> float:
        s = u**k
        one_minus_tq = -math.expm1(q * math.log1p(-s))
        return one_minus_tq ** (-1.0 / p) * k * u ** (k - 1.0)

    u_lo = (1.0 - upper) ** (1.0 / k)
    u_hi = (1.0 - split) ** (1.0 / k)
    tail = integrate(g, u_lo, u_hi, 0.5 * tol)
    return Evaluation(head.value + tail.value, head.abs_err + tail.abs_err, Method.QUADRATURE)


def arc_integral(spec: IntegralSpec, tol: float = 1e-12) -> Evaluation:
    """Evaluate the defining integral selected by ``spec`` by quadrature.

    Infinite upper limits are not supported.
    """
    p = spec.p
    q = p if spec.q is None else spec.q
    if not (p > 1.0 and q > 1.0):
        raise DomainError(f"exponents must exceed 1, got p={p}, q={q}")
    kind = spec.kind
    _check_upper(kind, spec.upper)
    x = spec.upper
    if x == 0.0 and kind not in ("arccos", "arccos_pq"):
        return Evaluation(0.0, 0.0, Method.QUADRATURE)
    if kind == "arcsin":
        return _arcsin_type(p, p, x, tol)
    if kind == "arcsin_pq":
        return _arcsin_type(p, q, x, tol)
    if kind == "arccos":
        return _arcsin_type(p, p, (1.0 - x**p) ** (1.0 / p), tol)
    if kind == "arccos_pq":
        return _arcsin_type(p, q, (1.0 - x**p) ** (1.0 / q), tol)
    if kind in ("arctan", "arsinh", "artanh", "arsinh_pq"):
        return integrate(kernel(kind, p, q), 0.0, x, tol)
    raise ValueError(f"unknown integral kind {kind!r}")
