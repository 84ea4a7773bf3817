"""Grid sweeps that check every inequality and monotonicity claim numerically.

Each claim becomes a :class:`CheckRecord` with a signed margin oriented so
that the claim holds exactly when ``margin >= -tol``, whichever way the
inequality points.  Sweeps return a :class:`Report` whose record order
depends only on the records' keys, never on evaluation order.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import GentrigError
from .hypergeom import gauss_2f1, sum_series
from .means import power_mean
from .ptrig import (
    FnKind,
    arc_fn,
    constant,
    eigenpair,
    fwd_fn,
    lemma_fn,
    pi_p,
)

__all__ = [
    "GridSpec",
    "CheckRecord",
    "Report",
    "CSV_COLUMNS",
    "DEFAULT_P",
    "DEFAULT_X",
    "check_arc_mean_convexity",
    "check_forward_mean_convexity",
    "check_bounds_lemma",
    "check_gm_lemma",
    "check_monotone",
    "check_monotone_suite",
    "check_pi_proposition",
    "check_convexity_lemma",
    "check_eigen_residual",
    "run_suite",
    "SUITES",
]

CSV_COLUMNS = ("check_id", "p", "q", "t", "r", "s", "x", "m", "n", "lhs", "rhs", "margin", "pass")
_PARAM_COLUMNS = CSV_COLUMNS[1:9]

DEFAULT_P = (1.25, 1.5, 2.0, 3.0, 5.0, 10.0)
DEFAULT_X = tuple(round(0.05 * i, 2) for i in range(1, 20))
DEFAULT_T_THM1 = (0.0, 0.5, 1.0, 2.0, 5.0)
DEFAULT_T_THM2 = (1.0, 2.0, 5.0)
DEFAULT_T_PROP = (-1.0, 0.0, 0.5)
FINE_X = tuple(round(0.01 * i, 2) for i in range(1, 100))
F_FAMILY_M = (-1.0, -0.5, 0.0, 1.0, 2.0)
H_FAMILY_M = (1.0, 2.0, 5.0)
FP_LEMMA_S = (0.1, 0.5, 0.9)
MONOTONE_TOL = 1e-10
EIGEN_CASES = ((1, 1.5), (1, 2.0), (1, 3.0), (2, 1.5), (2, 2.0), (2, 3.0))

ERRATUM_THM2_SINH = (
    "thm2.sinh: checked with sinh_p applied to both arguments; "
    "the variant M_t(sinh_p(r), arsinh_p(s)) fails already at r = s"
)
NOTE_FINITE_M = "mono: m is sampled at finitely many values; the lemmas are stated for all real m in range"


@dataclass(frozen=True)
class GridSpec:
    """Cartesian sampling of exponents, mean orders and unit-interval points."""

    p_values: tuple[float, ...] = DEFAULT_P
    q_values: tuple[float, ...] = DEFAULT_P
    t_values: tuple[float, ...] = DEFAULT_T_THM1
    x_values: tuple[float, ...] = DEFAULT_X
    margin_tol: float = 1e-9

    def __post_init__(self):
        for name in ("p_values", "q_values", "t_values", "x_values"):
            vals = tuple(float(v) for v in getattr(self, name))
            if not vals:
                raise ValueError(f"{name} must be nonempty")
            object.__setattr__(self, name, vals)
        if any(not 0.01 <= x <= 0.99 for x in self.x_values):
            raise ValueError("x_values must lie in [0.01, 0.99]")
        if any(p <= 1.0 for p in self.p_values + self.q_values):
            raise ValueError("exponents must exceed 1")
        if not self.margin_tol > 0.0:
            raise ValueError("margin_tol must be positive")

    def with_t(self, t_values: Iterable[float]) -> GridSpec:
        return GridSpec(self.p_values, self.q_values, tuple(t_values), self.x_values, self.margin_tol)


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    params: tuple[tuple[str, float], ...]
    lhs: float
    rhs: float
    margin: float
    tol: float
    passed: bool
    tag: str = ""

    def param(self, name: str):
        return dict(self.params).get(name)

    def sort_key(self):
        d = dict(self.params)
        return (self.check_id, tuple(-math.inf if d.get(c) is None else d[c] for c in _PARAM_COLUMNS))

    def csv_row(self) -> list[str]:
        d = dict(self.params)
        row = [self.check_id]
        for c in _PARAM_COLUMNS:
            v = d.get(c)
            row.append("" if v is None else (str(int(v)) if c == "n" else _fmt(v)))
        row += [_fmt(self.lhs), _fmt(self.rhs), _fmt(self.margin), "1" if self.passed else "0"]
        return row


def _fmt(v: float) -> str:
    return format(v, ".17g")


@dataclass
class Report:
    """Sorted check records plus the configuration that produced them."""

    records: list[CheckRecord]
    config: object = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        self.records = sorted(self.records, key=CheckRecord.sort_key)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.records)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def select(self, prefix: str) -> Report:
        return Report([r for r in self.records if r.check_id.startswith(prefix)], self.config, self.notes)

    def summary(self) -> str:
        return f"checks={self.total} passed={self.passed} failed={self.failed}"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            w.writerow(r.csv_row())
        return buf.getvalue()

    @classmethod
    def merge(cls, reports: Sequence[Report], config=None) -> Report:
        records: list[CheckRecord] = []
        notes: list[str] = []
        for rep in reports:
            records.extend(rep.records)
            notes.extend(n for n in rep.notes if n not in notes)
        return cls(records, config, tuple(notes))


def _record(
    check_id: str,
    params: dict,
    lhs: float,
    rhs: float,
    relation: str,
    tol: float,
    margin: float | None = None,
) -> CheckRecord:
    """Build a record for the claim ``lhs <relation> rhs``.

    ``margin`` overrides the plain difference when the caller has a
    cancellation-free expression for it.
    """
    if margin is None:
        margin = rhs - lhs if relation == "<=" else lhs - rhs
    scaled = tol * max(abs(lhs), abs(rhs), 1.0)
    ordered = tuple((c, float(params[c])) for c in _PARAM_COLUMNS if c in params)
    if not (math.isfinite(lhs) and math.isfinite(rhs) and math.isfinite(margin)):
        return CheckRecord(check_id, ordered, lhs, rhs, margin, scaled, False, "non-finite")
    return CheckRecord(check_id, ordered, lhs, rhs, margin, scaled, margin >= -scaled)


def _failed(check_id: str, params: dict, exc: Exception) -> CheckRecord:
    ordered = tuple((c, float(params[c])) for c in _PARAM_COLUMNS if c in params)
    nan = math.nan
    return CheckRecord(check_id, ordered, nan, nan, nan, 0.0, False, f"{type(exc).__name__}: {exc}")


def _guarded(check_id: str, params: dict, build: Callable[[], CheckRecord]) -> CheckRecord:
    try:
        return build()
    except (GentrigError, ArithmeticError, ValueError) as exc:
        return _failed(check_id, params, exc)


def _pairs(xs: Sequence[float]):
    """Unordered pairs r <= s, the diagonal included once."""
    xs = sorted(set(xs))
    for i, r in enumerate(xs):
        for s in xs[i:]:
            yield r, s


# --------------------------------------------------------------------------
# power-mean convexity sweeps


def _mean_sweep(
    prefix: str,
    families: Sequence[tuple[str, FnKind, str]],
    grid: GridSpec,
    evaluate: Callable[[FnKind, float, float], float],
) -> list[CheckRecord]:
    records = []
    for name, kind, relation in families:
        cid = f"{prefix}.{name}"
        for p in grid.p_values:
            cache: dict[float, float] = {}

            def value(x: float) -> float:
                if x not in cache:
                    cache[x] = evaluate(kind, p, x)
                return cache[x]

            for t in grid.t_values:
                for r, s in _pairs(grid.x_values):
                    params = {"p": p, "t": t, "r": r, "s": s}

                    def build():
                        lhs = evaluate(kind, p, power_mean(t, r, s))
                        rhs = power_mean(t, value(r), value(s))
                        return _record(cid, params, lhs, rhs, relation, grid.margin_tol)

                    records.append(_guarded(cid, params, build))
    return records


THM1_FAMILIES = (
    ("arcsin", FnKind.ARCSIN, "<="),
    ("artanh", FnKind.ARTANH, "<="),
    ("arctan", FnKind.ARCTAN, ">="),
    ("arsinh", FnKind.ARSINH, ">="),
)
THM2_FAMILIES = (
    ("sin", FnKind.SIN, ">="),
    ("cos", FnKind.COS, "<="),
    ("tan", FnKind.TAN, "<="),
    ("tanh", FnKind.TANH, ">="),
    ("sinh", FnKind.SINH, "<="),
)


def check_arc_mean_convexity(grid: GridSpec | None = None) -> Report:
    """Power-mean convexity (concavity) of arcsin_p, artanh_p (arctan_p, arsinh_p) for t >= 0."""
    grid = grid or GridSpec()
    if any(t < 0 for t in grid.t_values):
        raise ValueError("arc-function mean convexity is claimed for t >= 0 only")
    recs = _mean_sweep("thm1", THM1_FAMILIES, grid, lambda k, p, x: arc_fn(k, p, x).value)
    return Report(recs, grid)


def check_forward_mean_convexity(grid: GridSpec | None = None) -> Report:
    """Power-mean claims for sin_p, cos_p, tan_p, tanh_p, sinh_p with t >= 1."""
    grid = grid or GridSpec(t_values=DEFAULT_T_THM2)
    if any(t < 1 for t in grid.t_values):
        raise ValueError("forward-function mean convexity is claimed for t >= 1 only")
    recs = _mean_sweep("thm2", THM2_FAMILIES, grid, lambda k, p, x: fwd_fn(k, p, x).value)
    return Report(recs, grid, (ERRATUM_THM2_SINH,))


# --------------------------------------------------------------------------
# two-sided bounds


def _tail_a(p: float, v: float) -> float:
    """``sum_{n>=2} c_n v^n`` with ``c_n`` the coefficients of ``F(1/p, 1/p; 1+1/p; v)``."""
    a = 1.0 / p
    first = a * a / (1.0 + a) * v * (1.0 + a) ** 2 / ((2.0 + a) * 2.0) * v

    def ratio(n: int) -> float:
        k = n + 2
        return (a + k) ** 2 / ((1.0 + a + k) * (k + 1.0)) * v

    return sum_series(first, ratio, 1e-16)[0]


def _tail_b(p: float, v: float) -> float:
    """``sum_{n>=2} v^n (n-1) / ((1+pn) n (1+p))``."""

    def term(n: int) -> float:
        return (n - 1.0) / ((1.0 + p * n) * n * (1.0 + p))

    return sum_series(term(2) * v * v, lambda i: term(i + 3) / term(i + 2) * v, 1e-16)[0]


def _tail_c(p: float, v: float) -> float:
    """``sum_{n>=1} v^n / (n p (1+pn))``."""

    def term(n: int) -> float:
        return 1.0 / (n * p * (1.0 + p * n))

    return sum_series(term(1) * v, lambda i: term(i + 2) / term(i + 1) * v, 1e-16)[0]


def _arccos_upper_margin(p: float, x: float, X: float, half: float) -> float:
    """``(pi_p/2) y - arccos_p(x)`` with ``y = (1 - x^p)^(1/p)``, free of cancellation.

    arccos_p(x) = pi_p/2 - int_y^1, and the tail integral equals
    ``x^(p-1)/(p-1) F(1-1/p, 1-1/p; 2-1/p; x^p)``.
    """
    e = 1.0 - 1.0 / p
    tail = x ** (p - 1.0) / (p - 1.0) * gauss_2f1(e, e, 1.0 + e, X).value
    return tail - half * -math.expm1(math.log1p(-X) / p)


def check_bounds_lemma(grid: GridSpec | None = None) -> Report:
    """Both sides of the five elementary double bounds for the inverse functions.

    Several bounds are tight to high order at small ``x**p``, where the
    plain difference is lost to rounding.  There the margin is formed from
    the exact series of the difference, whose coefficients are all
    positive; elsewhere the plain difference is used.
    """
    grid = grid or GridSpec()
    tol = grid.margin_tol
    recs: list[CheckRecord] = []
    for p in grid.p_values:
        half = 0.5 * pi_p(p).value
        two_b = 2.0 ** (1.0 / p) * constant("b_p", p).value
        for x in grid.x_values:
            params = {"p": p, "x": x}
            X = x**p
            w = X / (1.0 + X)
            z = x * (1.0 + X) ** (-1.0 / p)
            y = (1.0 - X) ** (1.0 / p)
            small = X <= 0.5

            def items():
                asin = arc_fn(FnKind.ARCSIN, p, x).value
                acos = arc_fn(FnKind.ARCCOS, p, x).value
                atan = arc_fn(FnKind.ARCTAN, p, x).value
                asinh = arc_fn(FnKind.ARSINH, p, x).value
                atanh = arc_fn(FnKind.ARTANH, p, x).value
                pp1 = p * (1.0 + p)
                lower3 = (pp1 * (1.0 + X) + X) * x / (pp1 * (1.0 + X) ** (1.0 + 1.0 / p))
                log1 = math.log1p(X)
                log2 = math.log1p(-X)
                return [
                    ("bounds.1.lower", (1.0 + X / pp1) * x, asin, x * _tail_a(p, X) if small else None),
                    ("bounds.1.upper", asin, half * x, None),
                    ("bounds.2.lower", (1.0 + (1.0 - X) / pp1) * y, acos, None),
                    ("bounds.2.upper", acos, half * y, _arccos_upper_margin(p, x, X, half) if small else None),
                    ("bounds.3.lower", lower3, atan, z * _tail_a(p, w)),
                    ("bounds.3.upper", atan, two_b * z, None),
                    ("bounds.4.lower", z * (1.0 + log1 / (1.0 + p)), asinh, z * _tail_b(p, w)),
                    ("bounds.4.upper", asinh, z * (1.0 + log1 / p), z * _tail_c(p, w)),
                    ("bounds.5.lower", x * (1.0 - log2 / (1.0 + p)), atanh, x * _tail_b(p, X) if small else None),
                    ("bounds.5.upper", atanh, x * (1.0 - log2 / p), x * _tail_c(p, X) if small else None),
                ]

            try:
                rows = items()
            except (GentrigError, ArithmeticError, ValueError) as exc:
                recs.extend(_failed(f"bounds.{i}.{s}", params, exc) for i in range(1, 6) for s in ("lower", "upper"))
                continue
            for cid, lhs, rhs, stable in rows:
                recs.append(_record(cid, params, lhs, rhs, "<=", tol, stable))
    return Report(recs, grid)


# --------------------------------------------------------------------------
# geometric-mean inequalities


def check_gm_lemma(grid: GridSpec | None = None) -> Report:
    """The four sqrt(rs) inequalities and pi_{sqrt(pq)} <= sqrt(pi_p pi_q)."""
    grid = grid or GridSpec()
    fams = (
        ("gm.1", FnKind.ARCSIN, "<="),
        ("gm.2", FnKind.ARTANH, "<="),
        ("gm.3", FnKind.ARSINH, ">="),
        ("gm.4", FnKind.ARCTAN, ">="),
    )
    recs = []
    for cid, kind, rel in fams:
        for p in grid.p_values:
            for r, s in _pairs(grid.x_values):
                params = {"p": p, "r": r, "s": s}

                def build():
                    lhs = arc_fn(kind, p, math.sqrt(r) * math.sqrt(s)).value
                    rhs = math.sqrt(arc_fn(kind, p, r).value * arc_fn(kind, p, s).value)
                    return _record(cid, params, lhs, rhs, rel, grid.margin_tol)

                recs.append(_guarded(cid, params, build))
    for p in grid.p_values:
        for q in grid.q_values:
            if q < p:
                continue
            params = {"p": p, "q": q}

            def build():
                lhs = pi_p(math.sqrt(p * q)).value
                rhs = math.sqrt(pi_p(p).value * pi_p(q).value)
                return _record("gm.5", params, lhs, rhs, "<=", grid.margin_tol)

            recs.append(_guarded("gm.5", params, build))
    return Report(recs, grid)


# --------------------------------------------------------------------------
# monotonicity


_F_DIRECTION = {"f1": "inc", "f2": "inc", "f3": "dec", "f4": "dec"}
_H_DIRECTION = {"h1": "dec", "h2": "dec", "h3": "inc", "h4": "inc", "h5": "inc"}
_RATIO = {
    "sin": (FnKind.SIN, "dec"),
    "cos": (FnKind.COS, "dec"),
    "tan": (FnKind.TAN, "inc"),
    "sinh": (FnKind.SINH, "inc"),
    "tanh": (FnKind.TANH, "dec"),
}


def fp_lemma(p: float, s: float) -> float:
    """``(pi_p/p)^(-s) (p - pi cot(pi/p)) csc(pi/p) / p^3``, claimed decreasing in p."""
    u = math.pi / p
    return (pi_p(p).value / p) ** (-s) * (p - math.pi / math.tan(u)) / math.sin(u) / p**3


def _monotone_records(cid: str, base: dict, xs: Sequence[float], vals: Sequence[float], direction: str, tol: float, left: str, right: str):
    recs = []
    for (x0, v0), (x1, v1) in zip(zip(xs, vals), zip(xs[1:], vals[1:])):
        params = dict(base)
        params[left], params[right] = x0, x1
        relation = "<=" if direction == "inc" else ">="
        recs.append(_record(cid, params, v0, v1, relation, tol))
    return recs


def check_monotone(family: str, params: dict, x_grid: Sequence[float], tol: float = MONOTONE_TOL) -> Report:
    """Direction of monotonicity between consecutive grid points.

    ``family`` is a lemma function name (``"f1"`` .. ``"h5"``, with
    ``params = {"p": .., "m": ..}``), ``"fp"`` (``params = {"s": ..}``,
    grid over p), or ``"ratio.<fn>"`` for ``fn(x)/x`` with ``fn`` in sin,
    cos, tan, sinh, tanh (``params = {"p": ..}``).
    """
    xs = list(x_grid)
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("grid must be strictly increasing")
    cid = f"mono.{family}"
    try:
        if family in _F_DIRECTION or family in _H_DIRECTION:
            p, m = params["p"], params["m"]
            vals = [lemma_fn(family, m, p, x) for x in xs]
            direction = _F_DIRECTION.get(family) or _H_DIRECTION[family]
            return Report(_monotone_records(cid, {"p": p, "m": m}, xs, vals, direction, tol, "r", "s"))
        if family == "fp":
            s = params["s"]
            vals = [fp_lemma(p, s) for p in xs]
            return Report(_monotone_records(cid, {"s": s}, xs, vals, "dec", tol, "p", "q"))
        if family.startswith("ratio."):
            kind, direction = _RATIO[family.split(".", 1)[1]]
            p = params["p"]
            vals = [fwd_fn(kind, p, x).value / x for x in xs]
            return Report(_monotone_records(cid, {"p": p}, xs, vals, direction, tol, "r", "s"))
    except (GentrigError, ArithmeticError) as exc:
        return Report([_failed(cid, dict(params), exc)])
    raise ValueError(f"unknown monotonicity family {family!r}")


def check_monotone_suite(
    grid: GridSpec | None = None,
    x_grid: Sequence[float] = FINE_X,
    tol: float = MONOTONE_TOL,
) -> Report:
    """All monotonicity claims: f1-f4, h1-h5, the p-lemma and the ratio lemma."""
    grid = grid or GridSpec()
    reports = []
    for p in grid.p_values:
        for fam in _F_DIRECTION:
            for m in F_FAMILY_M:
                reports.append(check_monotone(fam, {"p": p, "m": m}, x_grid, tol))
        for fam in _H_DIRECTION:
            for m in H_FAMILY_M:
                reports.append(check_monotone(fam, {"p": p, "m": m}, x_grid, tol))
        for name in _RATIO:
            reports.append(check_monotone(f"ratio.{name}", {"p": p}, x_grid, tol))
    for s in FP_LEMMA_S:
        reports.append(check_monotone("fp", {"s": s}, sorted(grid.p_values), tol))
    merged = Report.merge(reports, grid)
    merged.notes = (NOTE_FINITE_M,)
    return merged


# --------------------------------------------------------------------------
# pi_p under power means


def check_pi_proposition(
    p_values: Sequence[float] = DEFAULT_P,
    q_values: Sequence[float] | None = None,
    t_values: Sequence[float] = DEFAULT_T_PROP,
    margin_tol: float = 1e-9,
) -> Report:
    """``pi_{M_t(p,q)} <= M_t(pi_p, pi_q)`` for ``t < 1`` and ``p <= q``."""
    if any(t >= 1 for t in t_values):
        raise ValueError("the proposition needs t < 1")
    q_values = p_values if q_values is None else q_values
    recs = []
    for t in t_values:
        for p in p_values:
            for q in q_values:
                if q < p:
                    continue
                params = {"p": p, "q": q, "t": t}

                def build():
                    lhs = pi_p(power_mean(t, p, q)).value
                    rhs = power_mean(t, pi_p(p).value, pi_p(q).value)
                    return _record("prop.pi", params, lhs, rhs, "<=", margin_tol)

                recs.append(_guarded("prop.pi", params, build))
    return Report(recs, GridSpec(tuple(p_values), tuple(q_values), tuple(t_values)))


# --------------------------------------------------------------------------
# convexity via second differences


def check_convexity_lemma(
    p_values: Sequence[float] = DEFAULT_P,
    x_grid: Sequence[float] = FINE_X,
    tol: float = MONOTONE_TOL,
) -> Report:
    """arcsin_p convex and sin_p concave, via second differences on a uniform grid."""
    xs = list(x_grid)
    if len(xs) > 2:
        steps = [b - a for a, b in zip(xs, xs[1:])]
        if max(steps) - min(steps) > 1e-9 * max(steps):
            raise ValueError("convexity grid must be uniformly spaced")
    recs = []
    for p in p_values:
        for cid, kind, ev, rel in (
            ("convex.arcsin", FnKind.ARCSIN, arc_fn, "<="),
            ("concave.sin", FnKind.SIN, fwd_fn, ">="),
        ):
            try:
                vals = [ev(kind, p, x).value for x in xs]
            except (GentrigError, ArithmeticError) as exc:
                recs.append(_failed(cid, {"p": p}, exc))
                continue
            for i in range(1, len(xs) - 1):
                lhs = 2.0 * vals[i]
                rhs = vals[i - 1] + vals[i + 1]
                recs.append(_record(cid, {"p": p, "x": xs[i]}, lhs, rhs, rel, tol))
    return Report(recs)


# --------------------------------------------------------------------------
# p-Laplacian eigenpairs


def check_eigen_residual(
    n: int,
    p: float,
    h: float = 1e-4,
    safe_band: float | None = None,
    rtol: float = 1e-5,
    points: int = 200,
) -> Report:
    """Finite-difference residual of ``-(|u'|^(p-2) u')' = lam |u|^(p-2) u``.

    ``u(t) = sin_p(n pi_p t)``.  The flux is differenced on the compact
    stencil ``t +- h/2`` and the residual is reported relative to
    ``lam * max|u|^(p-1) = lam``.  Points where ``|u'| < safe_band`` (default
    a tenth of ``max|u'|``) are skipped, since the flux is not smooth where
    ``u'`` vanishes.  Records also cover the Dirichlet conditions and, at
    p = 2, the classical eigenvalue ``(n pi)^2``.
    """
    if not 1e-6 <= h <= 1e-3:
        raise ValueError("h must lie in [1e-6, 1e-3]")
    ep = eigenpair(n, p)
    omega = n * pi_p(p).value
    band = 0.1 * omega if safe_band is None else safe_band
    if not 0.0 < band:
        raise ValueError("safe_band must be positive")
    lam = ep.lam
    recs = []

    def flux(d: float) -> float:
        return math.copysign(abs(d) ** (p - 1.0), d)

    for k in range(1, points):
        t = k / points
        if not h < t < 1.0 - h:
            continue
        params = {"p": p, "n": n, "x": t}

        def build():
            if abs(ep.du(t)) < band:
                return None
            u0, up, um = ep.u(t), ep.u(t + h), ep.u(t - h)
            res = -(flux((up - u0) / h) - flux((u0 - um) / h)) / h - lam * flux(u0)
            rel = abs(res) / lam
            return _record("eigen.residual", params, rel, rtol, "<=", 0.0)

        rec = _guarded("eigen.residual", params, build)
        if rec is not None:
            recs.append(rec)
    for t in (1e-8, 1.0 - 1e-8):
        params = {"p": p, "n": n, "x": t}
        recs.append(_guarded("eigen.boundary", params, lambda: _record("eigen.boundary", params, abs(ep.u(t)), 1e-7, "<=", 0.0)))
    if p == 2.0:
        exact = (n * math.pi) ** 2
        recs.append(_record("eigen.lambda", {"p": p, "n": n}, abs(lam - exact) / exact, 1e-12, "<=", 0.0))
    return Report(recs)


# --------------------------------------------------------------------------
# suites


def _suite_eigen() -> Report:
    return Report.merge([check_eigen_residual(n, p) for n, p in EIGEN_CASES])


SUITES: dict[str, Callable[[GridSpec | None], Report]] = {
    "thm1": lambda g: check_arc_mean_convexity(g),
    "thm2": lambda g: check_forward_mean_convexity(g),
    "bounds": lambda g: check_bounds_lemma(g),
    "gm": lambda g: check_gm_lemma(g),
    "monotone": lambda g: check_monotone_suite(g),
    "pi-prop": lambda g: check_pi_proposition(g.p_values, g.q_values) if g else check_pi_proposition(),
    "convexity": lambda g: check_convexity_lemma(g.p_values) if g else check_convexity_lemma(),
    "eigen": lambda g: _suite_eigen(),
}


def run_suite(name: str, grid: GridSpec | None = None) -> Report:
    """Run one named suite, or all of them for ``name == "all"`` (default grids)."""
    if name == "all":
        reports = [SUITES[k](None) for k in SUITES]
        return Report.merge(reports)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](grid)
