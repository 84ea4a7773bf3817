"""Generalized p-trigonometric and p-hyperbolic functions.

Inverse functions are evaluated through their hypergeometric
representations, with complementary identities near the ends of the
domain so that every series argument stays at or below 1/2.  Forward
functions are computed by safeguarded Newton inversion of the inverse
functions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .hypergeom import (
    EULER_GAMMA,
    Evaluation,
    Method,
    digamma,
    gamma,
    gauss_2f1,
    log_tail_series,
)

__all__ = [
    "FnKind",
    "EigenPair",
    "P_MIN",
    "P_MAX",
    "DEFAULT_TOL",
    "check_p",
    "pi_p",
    "constant",
    "arc_fn",
    "arc_fn_deriv",
    "fwd_fn",
    "fwd_fn_deriv",
    "arc_fn_pq",
    "pi_pq",
    "n_pq",
    "eigenpair",
    "lemma_fn",
    "LEMMA_FAMILIES",
]

P_MIN = 1.0 + 1e-9
P_MAX = 1e6
DEFAULT_TOL = 1e-15
ROOT_RTOL = 1e-13
ROOT_MAXIT = 200
ARTANH_XMAX = 1.0 - 1e-12
_EPS = 2.220446049250313e-16
ROUND_ULPS = 8.0


class FnKind(enum.Enum):
    ARCSIN = "arcsin_p"
    ARCCOS = "arccos_p"
    ARCTAN = "arctan_p"
    ARSINH = "arsinh_p"
    ARTANH = "artanh_p"
    SIN = "sin_p"
    COS = "cos_p"
    TAN = "tan_p"
    SINH = "sinh_p"
    TANH = "tanh_p"

    @property
    def is_inverse(self) -> bool:
        return self in _INVERSE_KINDS

    @property
    def partner(self) -> FnKind:
        """The paired function: forward for an inverse kind and vice versa."""
        return _PARTNER[self]


_INVERSE_KINDS = frozenset({FnKind.ARCSIN, FnKind.ARCCOS, FnKind.ARCTAN, FnKind.ARSINH, FnKind.ARTANH})
_PARTNER = {
    FnKind.ARCSIN: FnKind.SIN,
    FnKind.ARCCOS: FnKind.COS,
    FnKind.ARCTAN: FnKind.TAN,
    FnKind.ARSINH: FnKind.SINH,
    FnKind.ARTANH: FnKind.TANH,
}
_PARTNER.update({v: k for k, v in list(_PARTNER.items())})


def check_p(p: float, name: str = "p") -> float:
    if not (P_MIN < p < P_MAX):
        raise DomainError(f"{name}={p} outside ({P_MIN}, {P_MAX})")
    return float(p)


def _as_kind(kind) -> FnKind:
    return kind if isinstance(kind, FnKind) else FnKind(kind)


def _one_minus_pow(x: float, p: float) -> float:
    """``1 - x**p`` without cancellation for x close to 1."""
    if x == 0.0:
        return 1.0
    return -math.expm1(p * math.log(x))


# --------------------------------------------------------------------------
# constants


def _half_pi_p(p: float) -> float:
    return math.pi / (p * math.sin(math.pi / p))


def pi_p(p: float) -> Evaluation:
    """``pi_p = 2 pi / (p sin(pi/p))``; equals pi at p = 2."""
    check_p(p)
    value = 2.0 * _half_pi_p(p)
    return Evaluation(value, 4.0 * _EPS * value, Method.CLOSED_FORM)


def constant(name: str, p: float, tol: float = DEFAULT_TOL) -> Evaluation:
    """Domain endpoints ``a_p``, ``b_p`` and ``c_p`` of sin_p, tan_p, sinh_p.

    ``c_p`` is taken as ``arsinh_p(1) = 2^(-1/p) F(1, 1/p; 1+1/p; 1/2)``;
    the series ``F(1, 1/p; 1+1/p; 1)`` diverges.
    """
    check_p(p)
    a = 1.0 / p
    if name == "a_p":
        e = pi_p(p)
        return Evaluation(0.5 * e.value, 0.5 * e.abs_err, Method.CLOSED_FORM)
    if name == "b_p":
        f = gauss_2f1(a, a, 1.0 + a, 0.5, tol)
    elif name == "c_p":
        f = gauss_2f1(1.0, a, 1.0 + a, 0.5, tol)
    else:
        raise ValueError(f"unknown constant {name!r}")
    scale = 2.0 ** (-a)
    return Evaluation(scale * f.value, scale * f.abs_err, Method.SERIES)


# --------------------------------------------------------------------------
# inverse functions


def _arcsin_from_z(p: float, z: float, zc: float, tol: float) -> Evaluation:
    """arcsin_p of ``x = z**(1/p)`` given ``z = x**p`` and ``zc = 1 - z``."""
    a = 1.0 / p
    if z <= 0.5:
        x = z**a
        f = gauss_2f1(a, a, 1.0 + a, z, tol)
        return Evaluation(x * f.value, x * f.abs_err, Method.SERIES)
    # int_x^1 (1-t^p)^(-1/p) dt = zc^(1-1/p) / (p-1) * F(1-1/p, 1-1/p; 2-1/p; zc)
    half = _half_pi_p(p)
    if zc == 0.0:
        return Evaluation(half, 4.0 * _EPS * half, Method.CLOSED_FORM)
    b = 1.0 - a
    f = gauss_2f1(b, b, 1.0 + b, zc, tol)
    scale = zc**b / (p - 1.0)
    value = half - scale * f.value
    return Evaluation(value, scale * f.abs_err + 4.0 * _EPS * half, Method.SERIES)


def _artanh_from_z(p: float, z: float, zc: float, tol: float) -> Evaluation:
    """artanh_p of ``x = z**(1/p)`` given ``z = x**p`` and ``zc = 1 - z``.

    Near 1 the logarithmic expansion
    ``(1/p) [-log(zc) - psi(1/p) - gamma - L(1-1/p, zc)]`` is used, where
    ``L(b, w) = sum_{k>=1} (b)_k w^k / (k! k)``.
    """
    a = 1.0 / p
    if z <= 0.5:
        x = z**a
        f = gauss_2f1(1.0, a, 1.0 + a, z, tol)
        return Evaluation(x * f.value, x * f.abs_err, Method.SERIES)
    tail, tail_err = log_tail_series(1.0 - a, zc, tol)
    psi = digamma(a)
    log_zc = math.log(zc)
    value = a * (-log_zc - psi - EULER_GAMMA - tail)
    rounding = 8.0 * _EPS * (abs(log_zc) + abs(psi) + 1.0)
    return Evaluation(value, a * (tail_err + rounding), Method.SERIES)


def _arctan(p: float, x: float, tol: float) -> Evaluation:
    a = 1.0 / p
    if x <= 1.0:
        f = gauss_2f1(1.0, a, 1.0 + a, -(x**p), tol)
        return Evaluation(x * f.value, x * f.abs_err, Method.SERIES)
    # int_x^inf dt / (1+t^p) = y^(p-1)/(p-1) F(1, 1-1/p; 2-1/p; -y^p), y = 1/x
    y = 1.0 / x
    b = 1.0 - a
    f = gauss_2f1(1.0, b, 1.0 + b, -(y**p), tol)
    scale = y ** (p - 1.0) / (p - 1.0)
    half = _half_pi_p(p)
    return Evaluation(half - scale * f.value, scale * f.abs_err + 4.0 * _EPS * half, Method.SERIES)


def _arsinh(p: float, x: float, tol: float) -> Evaluation:
    a = 1.0 / p
    if x <= 1.0:
        f = gauss_2f1(a, a, 1.0 + a, -(x**p), tol)
        return Evaluation(x * f.value, x * f.abs_err, Method.SERIES)
    # arsinh_p(x) = artanh_p(w^(1/p)) with w = x^p / (1 + x^p); 1 - w = 1/(1+x^p)
    v = math.exp(-p * math.log(x))
    wc = v / (1.0 + v)
    return _artanh_from_z(p, 1.0 - wc, wc, tol)


def _check_arc_domain(kind: FnKind, x: float) -> None:
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"{kind.value}: argument {x} must be finite and >= 0")
    if kind in (FnKind.ARCSIN, FnKind.ARCCOS) and x > 1.0:
        raise DomainError(f"{kind.value}: argument {x} > 1")
    if kind is FnKind.ARTANH and x > ARTANH_XMAX:
        raise DomainError(f"{kind.value}: argument {x} too close to (or beyond) the pole at 1")


def arc_fn(kind, p: float, x: float, tol: float = DEFAULT_TOL) -> Evaluation:
    """Evaluate an inverse p-function (arcsin_p, arccos_p, arctan_p, arsinh_p, artanh_p).

    >>> round(arc_fn(FnKind.ARCSIN, 2, 0.5).value, 10)
    0.5235987756
    """
    kind = _as_kind(kind)
    if not kind.is_inverse:
        raise ValueError(f"{kind.value} is not an inverse function")
    check_p(p)
    _check_arc_domain(kind, x)
    if x == 0.0 and kind is not FnKind.ARCCOS:
        return Evaluation(0.0, 0.0, Method.SERIES)
    if kind is FnKind.ARCSIN:
        ev = _arcsin_from_z(p, x**p, _one_minus_pow(x, p), tol)
    elif kind is FnKind.ARCCOS:
        # arccos_p x = arcsin_p((1 - x^p)^(1/p)): roles of z and 1 - z swap.
        ev = _arcsin_from_z(p, _one_minus_pow(x, p), x**p, tol)
    elif kind is FnKind.ARTANH:
        ev = _artanh_from_z(p, x**p, _one_minus_pow(x, p), tol)
    elif kind is FnKind.ARCTAN:
        ev = _arctan(p, x, tol)
    else:
        ev = _arsinh(p, x, tol)
    return _with_rounding(ev)


def _with_rounding(ev: Evaluation) -> Evaluation:
    # series tail bounds ignore summation rounding, which runs to a few ulps
    return Evaluation(ev.value, ev.abs_err + ROUND_ULPS * _EPS * abs(ev.value), ev.method)


def arc_fn_deriv(kind, p: float, x: float) -> float:
    """Derivative of an inverse p-function, i.e. its defining integrand."""
    kind = _as_kind(kind)
    check_p(p)
    _check_arc_domain(kind, x)
    if kind is FnKind.ARCSIN:
        if x >= 1.0:
            raise DomainError("arcsin_p' is infinite at x=1")
        return _one_minus_pow(x, p) ** (-1.0 / p)
    if kind is FnKind.ARCCOS:
        if x >= 1.0 or (x == 0.0 and p < 2.0):
            raise DomainError(f"arccos_p' is infinite at x={x}")
        if x == 0.0:
            return -1.0 if p == 2.0 else 0.0
        return -(x ** (p - 2.0)) * _one_minus_pow(x, p) ** ((1.0 - p) / p)
    if kind is FnKind.ARCTAN:
        return 1.0 / (1.0 + x**p)
    if kind is FnKind.ARSINH:
        return (1.0 + x**p) ** (-1.0 / p)
    if kind is FnKind.ARTANH:
        return 1.0 / _one_minus_pow(x, p)
    raise ValueError(f"{kind.value} is not an inverse function")


# --------------------------------------------------------------------------
# forward functions


def _rtsafe(func, lo: float, hi: float, guess: float, increasing: bool) -> tuple[float, float]:
    """Newton iteration kept inside the bracket ``[lo, hi]``.

    ``func(y)`` returns ``(F(y), F'(y))`` where F changes sign on the
    bracket.  Falls back to bisection when a Newton step leaves the
    bracket or fails to halve the previous step.  Returns ``(root, step)``.
    """
    y = guess
    dx_old = hi - lo
    dx = dx_old
    for _ in range(ROOT_MAXIT):
        f, df = func(y)
        if f == 0.0:
            return y, 0.0
        if (f < 0.0) == increasing:
            lo = y
        else:
            hi = y
        newton_ok = math.isfinite(df) and df != 0.0
        if newton_ok:
            step = f / df
            y_new = y - step
            newton_ok = lo < y_new < hi and abs(2.0 * f) <= abs(dx_old * df)
        if newton_ok:
            dx_old, dx = dx, step
            y = y_new
        else:
            dx_old = dx
            y_new = 0.5 * (lo + hi)
            dx = y - y_new
            y = y_new
        if abs(dx) <= ROOT_RTOL * abs(y) or hi - lo <= ROOT_RTOL * abs(y) or not lo < y < hi:
            return _polish(func, y, lo, hi, abs(dx))
    raise ConvergenceError(f"root finder exceeded {ROOT_MAXIT} iterations")


def _polish(func, y: float, lo: float, hi: float, step: float) -> tuple[float, float]:
    """One last Newton step so the result is good to rounding, not just to ROOT_RTOL."""
    f, df = func(y)
    if f == 0.0 or not (math.isfinite(df) and df != 0.0):
        return y, step
    y_new = y - f / df
    if lo <= y_new <= hi:
        return y_new, abs(f / df)
    return y, step


def _check_fwd_domain(kind: FnKind, p: float, x: float) -> None:
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"{kind.value}: argument {x} must be finite and >= 0")
    half = _half_pi_p(p)
    if kind in (FnKind.SIN, FnKind.COS) and x > half:
        raise DomainError(f"{kind.value}: argument {x} > pi_p/2 = {half}")
    if kind is FnKind.TAN and x >= half:
        raise DomainError(f"{kind.value}: argument {x} >= pi_p/2 = {half}")


def _inversion_eval(y: float, step: float, arc_err: float, deriv: float) -> Evaluation:
    err = abs(step) + (arc_err / abs(deriv) if deriv else 0.0) + 2.0 * _EPS * abs(y)
    return Evaluation(y, err, Method.INVERSION)


def fwd_fn(kind, p: float, x: float, tol: float = DEFAULT_TOL) -> Evaluation:
    """Evaluate a forward p-function by inverting its inverse function.

    sin_p and cos_p live on ``[0, pi_p/2]``, tan_p on ``[0, pi_p/2)`` and
    sinh_p, tanh_p on ``[0, inf)``.
    """
    kind = _as_kind(kind)
    if kind.is_inverse:
        raise ValueError(f"{kind.value} is not a forward function")
    check_p(p)
    _check_fwd_domain(kind, p, x)
    inv = kind.partner
    if x == 0.0:
        return Evaluation(1.0 if kind is FnKind.COS else 0.0, 0.0, Method.INVERSION)
    half = _half_pi_p(p)
    last_err = [0.0]

    def func(y: float) -> tuple[float, float]:
        e = arc_fn(inv, p, y, tol)
        last_err[0] = e.abs_err
        return e.value - x, _safe_deriv(inv, p, y)

    if kind is FnKind.SIN:
        if x == half:
            return Evaluation(1.0, 4.0 * _EPS, Method.INVERSION)
        # arcsin_p y < (pi_p/2) y and arcsin_p y > y bracket the root.
        lo, hi = x / half, min(x, 1.0)
        y, step = _rtsafe(func, lo, hi, hi, increasing=True)
    elif kind is FnKind.COS:
        if x == half:
            return Evaluation(0.0, 4.0 * _EPS, Method.INVERSION)
        lo, hi = 0.0, 1.0
        # sin-based initial guess, accurate away from x = pi_p/2
        guess = (1.0 - min(x / half, 1.0) ** p) ** (1.0 / p)
        guess = min(max(guess, 1e-300), 1.0 - 1e-16)
        y, step = _rtsafe(func, lo, hi, guess, increasing=False)
    elif kind is FnKind.TAN:
        lo = x
        hi = max(2.0 * x, 2.0)
        while arc_fn(inv, p, hi, tol).value <= x:
            lo, hi = hi, 2.0 * hi
            if not math.isfinite(hi):
                raise ConvergenceError(f"tan_p({x}) exceeds the floating-point range")
        y, step = _rtsafe(func, lo, hi, lo, increasing=True)
    elif kind is FnKind.SINH:
        lo = x
        hi = 2.0 * x + 1.0
        while arc_fn(inv, p, hi, tol).value <= x:
            lo, hi = hi, 2.0 * hi
        y, step = _rtsafe(func, lo, hi, lo, increasing=True)
    else:  # TANH
        # artanh_p y >= y, so the root is below x; artanh_p is infinite at 1.
        lo, hi = 0.0, x
        if x >= 1.0:
            k = 1
            hi = 0.5
            while arc_fn(inv, p, hi, tol).value <= x:
                lo = hi
                k += 1
                hi = 1.0 - 2.0**-k
                if hi > ARTANH_XMAX:
                    return _tanh_saturated(p, x)
        y, step = _rtsafe(func, lo, hi, hi, increasing=True)
    return _inversion_eval(y, step, last_err[0], _safe_deriv(inv, p, y))


def _safe_deriv(kind: FnKind, p: float, y: float) -> float:
    try:
        return arc_fn_deriv(kind, p, y)
    except DomainError:
        return math.inf


def _tanh_saturated(p: float, x: float) -> Evaluation:
    """tanh_p(x) once artanh_p exceeds its value at 1 - 1e-12.

    Uses the asymptotic form ``artanh_p(y) ~ -(1/p) log(1 - y^p) + K`` with
    ``K = -(psi(1/p) + gamma)/p``, which is exact up to ``O(1 - y^p)``.
    """
    a = 1.0 / p
    k = -a * (digamma(a) + EULER_GAMMA)
    zc = math.exp(-(x - k) * p)
    return Evaluation((1.0 - zc) ** a, 4.0 * zc + 2.0 * _EPS, Method.INVERSION)


def fwd_fn_deriv(kind, p: float, x: float) -> float:
    """Derivative of a forward p-function at ``x``."""
    kind = _as_kind(kind)
    if kind.is_inverse:
        raise ValueError(f"{kind.value} is not a forward function")
    check_p(p)
    _check_fwd_domain(kind, p, x)
    if kind is FnKind.SIN:
        return fwd_fn(FnKind.COS, p, x).value
    if kind is FnKind.COS:
        # d/dx cos_p = -cos_p^(2-p) sin_p^(p-1)
        c = fwd_fn(FnKind.COS, p, x).value
        s = fwd_fn(FnKind.SIN, p, x).value
        if c == 0.0 and p > 2.0:
            raise DomainError(f"cos_p' is infinite at x={x} for p={p}")
        return -(c ** (2.0 - p)) * s ** (p - 1.0)
    y = fwd_fn(kind, p, x).value
    if kind is FnKind.TAN:
        return 1.0 + y**p
    if kind is FnKind.SINH:
        return (1.0 + y**p) ** (1.0 / p)
    return _one_minus_pow(y, p)


# --------------------------------------------------------------------------
# two-parameter family


def _arcsin_pq_from_z(p: float, q: float, z: float, zc: float, tol: float) -> Evaluation:
    """``int_0^x (1 - t^q)^(-1/p) dt`` with ``z = x**q`` and ``zc = 1 - z``."""
    a, b = 1.0 / p, 1.0 / q
    if z <= 0.5:
        x = z**b
        f = gauss_2f1(a, b, 1.0 + b, z, tol)
        return Evaluation(x * f.value, x * f.abs_err, Method.SERIES)
    half = _half_pi_pq(p, q)
    if zc == 0.0:
        return Evaluation(half, 1e-14 * half, Method.CLOSED_FORM)
    # int_x^1 = (1/q) zc^(1-1/p) / (1-1/p) F(1-1/p, 1-1/q; 2-1/p; zc)
    e = 1.0 - a
    f = gauss_2f1(e, 1.0 - b, 1.0 + e, zc, tol)
    scale = zc**e / (q * e)
    return Evaluation(half - scale * f.value, scale * f.abs_err + 1e-14 * half, Method.SERIES)


def _half_pi_pq(p: float, q: float) -> float:
    """``arcsin_{p,q}(1) = B(1/q, 1 - 1/p) / q``."""
    a, b = 1.0 / p, 1.0 / q
    return gamma(b) * gamma(1.0 - a) / (q * gamma(1.0 + b - a))


def pi_pq(p: float, q: float) -> Evaluation:
    """``pi_{p,q} := 2 arcsin_{p,q}(1)``, by analogy with ``pi_p = 2 arcsin_p(1)``."""
    check_p(p)
    check_p(q, "q")
    value = 2.0 * _half_pi_pq(p, q)
    return Evaluation(value, 1e-14 * value, Method.CLOSED_FORM)


PQ_KINDS = ("arcsin_pq", "arccos_pq", "arsinh_pq")


def arc_fn_pq(kind: str, p: float, q: float, x: float, c_from_p: bool = False, tol: float = DEFAULT_TOL) -> Evaluation:
    """Two-parameter inverse functions arcsin_{p,q}, arccos_{p,q}, arsinh_{p,q} on ``[0, 1]``.

    By default arcsin_{p,q} follows its defining integral
    ``int_0^x (1 - t^q)^(-1/p) dt = x F(1/p, 1/q; 1+1/q; x^q)``.  With
    ``c_from_p=True`` the series ``x F(1/p, 1/q; 1+1/p; x^q)`` is summed
    instead; the two agree only when ``p == q``.
    """
    check_p(p)
    check_p(q, "q")
    if kind not in PQ_KINDS:
        raise ValueError(f"unknown two-parameter kind {kind!r}")
    if not (math.isfinite(x) and 0.0 <= x <= 1.0):
        raise DomainError(f"{kind}: argument {x} outside [0, 1]")
    a, b = 1.0 / p, 1.0 / q
    if kind == "arsinh_pq":
        if x == 0.0:
            return Evaluation(0.0, 0.0, Method.SERIES)
        f = gauss_2f1(a, b, 1.0 + b, -(x**q), tol)
        return _with_rounding(Evaluation(x * f.value, x * f.abs_err, Method.SERIES))
    if kind == "arccos_pq":
        # arccos_{p,q} x = arcsin_{p,q}((1 - x^p)^(1/q)); the q-th power is 1 - x^p
        z, zc = _one_minus_pow(x, p), x**p
    else:
        if x == 0.0:
            return Evaluation(0.0, 0.0, Method.SERIES)
        z, zc = x**q, _one_minus_pow(x, q)
    if c_from_p:
        y = z**b
        f = gauss_2f1(a, b, 1.0 + a, z, tol)
        return _with_rounding(Evaluation(y * f.value, y * f.abs_err, f.method))
    return _with_rounding(_arcsin_pq_from_z(p, q, z, zc, tol))


def n_pq(p: float, q: float, tol: float = DEFAULT_TOL) -> Evaluation:
    """``n_{p,q} = 2^(-1/p) F(1, 1/p; 1+1/q; 1/2)``, which equals arsinh_{p,q}(1)."""
    check_p(p)
    check_p(q, "q")
    f = gauss_2f1(1.0, 1.0 / p, 1.0 + 1.0 / q, 0.5, tol)
    scale = 2.0 ** (-1.0 / p)
    return _with_rounding(Evaluation(scale * f.value, scale * f.abs_err, Method.SERIES))


# --------------------------------------------------------------------------
# eigenpairs of the one-dimensional p-Laplacian


@dataclass(frozen=True)
class EigenPair:
    """Dirichlet eigenpair ``(lam, sin_p(n pi_p t))`` of the p-Laplacian on (0, 1)."""

    n: int
    lam: float
    p: float

    def _reduce(self, t: float) -> tuple[float, float, float]:
        pi_val = 2.0 * _half_pi_p(self.p)
        period = 2.0 * pi_val
        theta = self.n * pi_val * t
        k = math.floor(theta / period)
        r = theta - k * period
        sign = 1.0
        if r >= pi_val:
            r -= pi_val
            sign = -1.0
        dsign = sign
        if r > 0.5 * pi_val:
            r = pi_val - r
            dsign = -sign
        return max(min(r, 0.5 * pi_val), 0.0), sign, dsign

    def u(self, t: float) -> float:
        """Eigenfunction value, extended oddly and 2 pi_p periodically past the principal branch."""
        r, sign, _ = self._reduce(t)
        return sign * fwd_fn(FnKind.SIN, self.p, r).value

    def du(self, t: float) -> float:
        r, _, dsign = self._reduce(t)
        return dsign * self.n * 2.0 * _half_pi_p(self.p) * fwd_fn(FnKind.COS, self.p, r).value


def eigenpair(n: int, p: float) -> EigenPair:
    """Eigenvalue ``(p-1) (n pi_p)^p`` with eigenfunction ``sin_p(n pi_p t)``."""
    if int(n) != n or n < 1:
        raise ValueError(f"mode index must be a positive integer, got {n!r}")
    check_p(p)
    lam = (p - 1.0) * (n * pi_p(p).value) ** p
    return EigenPair(int(n), lam, float(p))


# --------------------------------------------------------------------------
# auxiliary functions of the monotonicity lemmas

_F_FAMILY = {"f1": FnKind.ARCSIN, "f2": FnKind.ARTANH, "f3": FnKind.ARCTAN, "f4": FnKind.ARSINH}
_H_FAMILY = {"h1": FnKind.SIN, "h2": FnKind.TANH, "h3": FnKind.COS, "h4": FnKind.TAN, "h5": FnKind.SINH}
LEMMA_FAMILIES = tuple(_F_FAMILY) + tuple(_H_FAMILY)


def lemma_fn(family: str, m: float, p: float, x: float) -> float:
    """``f_i(x) = (g(x)/x)^m g'(x)`` or ``h_j(x) = (G(x)/x)^(m-1) G'(x)``.

    The f-family uses g in (arcsin_p, artanh_p, arctan_p, arsinh_p) with
    ``m >= -1``; the h-family uses G in (sin_p, tanh_p, cos_p, tan_p,
    sinh_p) with ``m >= 1``.  Arguments lie in (0, 1).
    """
    check_p(p)
    if not 0.0 < x < 1.0:
        raise DomainError(f"lemma functions are sampled on (0, 1), got x={x}")
    if family in _F_FAMILY:
        if m < -1.0:
            raise DomainError(f"{family} requires m >= -1, got {m}")
        kind = _F_FAMILY[family]
        g = arc_fn(kind, p, x).value
        return (g / x) ** m * arc_fn_deriv(kind, p, x)
    if family in _H_FAMILY:
        if m < 1.0:
            raise DomainError(f"{family} requires m >= 1, got {m}")
        kind = _H_FAMILY[family]
        g = fwd_fn(kind, p, x).value
        return (g / x) ** (m - 1.0) * fwd_fn_deriv(kind, p, x)
    raise ValueError(f"unknown lemma family {family!r}")
