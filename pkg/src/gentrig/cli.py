"""Command-line front end: ``gentrig {eval,const,check,oracle-diff}``.

Exit codes: 0 success, 1 verification failures, 2 usage, 3 numeric or
domain error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import ptrig, verify
from .errors import GentrigError
from .hypergeom import Evaluation, Method
from .means import power_mean
from .quad_oracle import IntegralSpec, arc_integral

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 0, 1, 2, 3, 4

ONE_PARAM_FNS = tuple(k.value for k in ptrig.FnKind)
PQ_FNS = ptrig.PQ_KINDS
EVAL_FNS = ONE_PARAM_FNS + PQ_FNS + ("lemma_fn", "power_mean")
CONST_NAMES = ("pi_p", "a_p", "b_p", "c_p", "n_pq", "lambda_n")
CP_NOTE = (
    "note: c_p is evaluated as arsinh_p(1) = 2^(-1/p) F(1,1/p;1+1/p;1/2); "
    "the endpoint value F(1,1/p;1+1/p;1) diverges since c-a-b = 0"
)


class UsageError(Exception):
    pass


def _g15(v: float) -> str:
    return format(v, ".15g")


def _floats(text: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gentrig", allow_abbrev=False, description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", allow_abbrev=False, help="evaluate one function at one point")
    ev.add_argument("--fn", required=True, choices=EVAL_FNS)
    ev.add_argument("--p", type=float)
    ev.add_argument("--q", type=float)
    ev.add_argument("--x", type=float)
    ev.add_argument("--y", type=float, help="second argument of power_mean")
    ev.add_argument("--t", type=float, help="order of power_mean")
    ev.add_argument("--m", type=float, help="exponent of lemma_fn")
    ev.add_argument("--family", choices=ptrig.LEMMA_FAMILIES)
    ev.add_argument("--tol", type=float, default=ptrig.DEFAULT_TOL)

    co = sub.add_parser("const", allow_abbrev=False, help="print a constant")
    co.add_argument("--name", required=True, choices=CONST_NAMES)
    co.add_argument("--p", type=float)
    co.add_argument("--q", type=float)
    co.add_argument("--n", type=int)

    ch = sub.add_parser("check", allow_abbrev=False, help="run a verification sweep and write CSV")
    ch.add_argument("--suite", required=True, choices=tuple(verify.SUITES) + ("all",))
    ch.add_argument("--p", type=_floats, help="comma-separated p grid")
    ch.add_argument("--q", type=_floats, help="comma-separated q grid")
    ch.add_argument("--t", type=_floats, help="comma-separated mean orders")
    ch.add_argument("--x", type=_floats, help="comma-separated points in [0.01, 0.99]")
    ch.add_argument("--margin-tol", type=float)
    ch.add_argument("--out", help="CSV output path (default check_<suite>.csv)")

    od = sub.add_parser("oracle-diff", allow_abbrev=False, help="series vs quadrature table")
    od.add_argument("--kinds", default="arcsin_p,arccos_p,arctan_p,arsinh_p,artanh_p")
    od.add_argument("--p", type=_floats, default=verify.DEFAULT_P)
    od.add_argument("--x", type=_floats, default=verify.DEFAULT_X)
    od.add_argument("--tol", type=float, default=1e-11)
    od.add_argument("--format", choices=("plain", "csv"), default="plain")
    return ap


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--fn/--name {getattr(args, 'fn', None) or args.name} requires " + ", ".join("--" + n for n in missing))


def _line(name: str, ev: Evaluation, **params) -> str:
    parts = [name] + [f"{k}={_g15(v)}" for k, v in params.items() if v is not None]
    parts += [f"value={_g15(ev.value)}", f"abs_err={ev.abs_err:.3g}", f"method={ev.method.value}"]
    return " ".join(parts)


def cmd_eval(args) -> int:
    fn = args.fn
    if not 0.0 < args.tol <= 1e-3:
        raise UsageError("--tol must lie in (0, 1e-3]")
    if fn in ONE_PARAM_FNS:
        _need(args, "p", "x")
        kind = ptrig.FnKind(fn)
        f = ptrig.arc_fn if kind.is_inverse else ptrig.fwd_fn
        ev = f(kind, args.p, args.x, args.tol)
        print(_line(fn, ev, p=args.p, x=args.x))
    elif fn in PQ_FNS:
        _need(args, "p", "q", "x")
        ev = ptrig.arc_fn_pq(fn, args.p, args.q, args.x, tol=args.tol)
        print(_line(fn, ev, p=args.p, q=args.q, x=args.x))
    elif fn == "lemma_fn":
        _need(args, "family", "m", "p", "x")
        v = ptrig.lemma_fn(args.family, args.m, args.p, args.x)
        ev = Evaluation(v, 0.0, Method.INVERSION if args.family.startswith("h") else Method.SERIES)
        print(_line(f"{args.family}", ev, m=args.m, p=args.p, x=args.x))
    else:
        _need(args, "t", "x", "y")
        v = power_mean(args.t, args.x, args.y)
        print(_line(fn, Evaluation(v, 0.0, Method.CLOSED_FORM), t=args.t, x=args.x, y=args.y))
    return EXIT_OK


def cmd_const(args) -> int:
    name = args.name
    if name in ("pi_p", "a_p", "b_p", "c_p"):
        _need(args, "p")
        ev = ptrig.pi_p(args.p) if name == "pi_p" else ptrig.constant(name, args.p)
        print(_line(name, ev, p=args.p))
        if name == "c_p":
            print(CP_NOTE)
    elif name == "n_pq":
        _need(args, "p", "q")
        print(_line(name, ptrig.n_pq(args.p, args.q), p=args.p, q=args.q))
    else:
        _need(args, "p", "n")
        if args.n < 1:
            raise UsageError("--n must be a positive integer")
        ep = ptrig.eigenpair(args.n, args.p)
        print(_line(name, Evaluation(ep.lam, 1e-15 * ep.lam, Method.CLOSED_FORM), p=args.p, n=args.n))
    return EXIT_OK


_T_RULES = {
    "thm1": (lambda t: t >= 0, "requires t >= 0"),
    "thm2": (lambda t: t >= 1, "requires t >= 1"),
    "pi-prop": (lambda t: t < 1, "requires t < 1"),
}


def _grid_for(args) -> verify.GridSpec | None:
    overrides = {k: getattr(args, k) for k in ("p", "q", "t", "x")}
    if all(v is None for v in overrides.values()) and args.margin_tol is None:
        return None
    if args.suite == "all":
        raise UsageError("grid overrides are not accepted with --suite all")
    rule = _T_RULES.get(args.suite)
    if overrides["t"] is not None:
        if rule is None:
            raise UsageError(f"--t has no meaning for suite {args.suite}")
        if not all(rule[0](t) for t in overrides["t"]):
            raise UsageError(f"suite {args.suite} {rule[1]}")
    default_t = {"thm2": verify.DEFAULT_T_THM2, "pi-prop": verify.DEFAULT_T_PROP}.get(args.suite, verify.DEFAULT_T_THM1)
    try:
        return verify.GridSpec(
            p_values=overrides["p"] or verify.DEFAULT_P,
            q_values=overrides["q"] or overrides["p"] or verify.DEFAULT_P,
            t_values=overrides["t"] or default_t,
            x_values=overrides["x"] or verify.DEFAULT_X,
            margin_tol=args.margin_tol if args.margin_tol is not None else 1e-9,
        )
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_check(args) -> int:
    grid = _grid_for(args)
    if args.suite == "pi-prop" and grid is not None:
        report = verify.check_pi_proposition(grid.p_values, grid.q_values, grid.t_values, grid.margin_tol)
    else:
        report = verify.run_suite(args.suite, grid)
    out = args.out or f"check_{args.suite}.csv"
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.to_csv())
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(report.summary())
    for note in report.notes:
        print(f"note: {note}")
    if report.failed:
        counts: dict[str, int] = {}
        for r in report.failures():
            counts[r.check_id] = counts.get(r.check_id, 0) + 1
        print("failed: " + " ".join(f"{k}={v}" for k, v in sorted(counts.items())), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def oracle_rows(kinds: Sequence[str], p_values: Sequence[float], x_values: Sequence[float], tol: float):
    """Yield ``(kind, p, x, series, quad, diff, budget)`` for the cross-check grid."""
    for name in kinds:
        kind = ptrig.FnKind(name)
        if not kind.is_inverse:
            raise UsageError(f"{name} is not an inverse function")
        for p in p_values:
            for x in x_values:
                s = ptrig.arc_fn(kind, p, x, tol)
                q = arc_integral(IntegralSpec(name.removesuffix("_p"), p, x), tol)
                diff = abs(s.value - q.value)
                yield name, p, x, s, q, diff, s.abs_err + q.abs_err + 1e-12


def cmd_oracle_diff(args) -> int:
    if not 0.0 < args.tol <= 1e-3:
        raise UsageError("--tol must lie in (0, 1e-3]")
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    bad = [k for k in kinds if k not in ONE_PARAM_FNS]
    if bad:
        raise UsageError(f"unknown kinds: {', '.join(bad)}")
    ok = True
    if args.format == "csv":
        print("kind,p,x,series,quadrature,diff,budget,ok")
    for name, p, x, s, q, diff, budget in oracle_rows(kinds, args.p, args.x, args.tol):
        within = diff <= budget
        ok &= within
        if args.format == "csv":
            print(",".join([name, _g15(p), _g15(x), format(s.value, ".17g"), format(q.value, ".17g"), f"{diff:.3e}", f"{budget:.3e}", "1" if within else "0"]))
        else:
            print(f"{name:9s} p={_g15(p):5s} x={_g15(x):5s} series={_g15(s.value):18s} quad={_g15(q.value):18s} diff={diff:.2e} budget={budget:.2e} {'ok' if within else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"eval": cmd_eval, "const": cmd_const, "check": cmd_check, "oracle-diff": cmd_oracle_diff}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GentrigError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
