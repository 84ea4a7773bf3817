"""
Two independent routes to the same integral
===========================================

The inverse functions are summed as hypergeometric series; the quadrature
oracle integrates the defining kernels directly.  Their gap should sit
inside the combined error budget.
"""

from gentrig import FnKind, IntegralSpec, arc_fn, arc_integral

tol = 1e-11
worst = 0.0
for kind in (FnKind.ARCSIN, FnKind.ARCCOS, FnKind.ARCTAN, FnKind.ARSINH, FnKind.ARTANH):
    for p in (1.25, 2.0, 10.0):
        for x in (0.05, 0.5, 0.95):
            s = arc_fn(kind, p, x, tol)
            q = arc_integral(IntegralSpec(kind.value.removesuffix("_p"), p, x), tol)
            budget = s.abs_err + q.abs_err + 1e-12
            worst = max(worst, abs(s.value - q.value) / budget)
            print(f"{kind.value:9s} p={p:<5} x={x:<5} series={s.value:.15f} quad={q.value:.15f} gap={abs(s.value - q.value):.1e}")

# anything below 1 means every gap is inside its budget
print(f"\nlargest gap / budget = {worst:.3f}")
