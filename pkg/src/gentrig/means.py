"""Power means of two positive numbers."""

from __future__ import annotations

import math

from .errors import DomainError

__all__ = ["power_mean", "MAX_ORDER"]

MAX_ORDER = 100.0


def power_mean(t: float, x: float, y: float) -> float:
    """Power mean ``((x**t + y**t) / 2) ** (1/t)``; geometric mean when ``t == 0``.

    Only an exact zero selects the geometric mean.  The mean is formed
    relative to the dominant argument, so ``max(x, y)**t`` never overflows,
    and tiny nonzero ``t`` goes through ``log1p``/``expm1``.

    >>> power_mean(2, 1, 7)
    5.0
    """
    if not (math.isfinite(t) and abs(t) <= MAX_ORDER):
        raise DomainError(f"mean order t={t} outside [-{MAX_ORDER}, {MAX_ORDER}]")
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"power mean needs positive arguments, got {x}, {y}")
    if x == y:
        return x
    if t == 0.0:
        return math.sqrt(x) * math.sqrt(y)
    if t == 1.0:
        return 0.5 * x + 0.5 * y
    lo, hi = (x, y) if x < y else (y, x)
    # Scale by the dominant argument: M = big * ((1 + (small/big)^t) / 2)^(1/t).
    big = hi if t > 0 else lo
    small = lo if t > 0 else hi
    tl = t * math.log(small / big)
    if abs(tl) < 0.5:
        # (1 + r)/2 is close to 1 here; stay in log space to keep the 1/t power accurate
        m = big * math.exp(math.log1p(0.5 * math.expm1(tl)) / t)
    else:
        m = big * (0.5 * (1.0 + (small / big) ** t)) ** (1.0 / t)
    return min(max(m, lo), hi)
