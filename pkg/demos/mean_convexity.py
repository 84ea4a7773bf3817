"""
Power-mean convexity sweeps
===========================

Each claim f(M_t(r, s)) <= M_t(f(r), f(s)) (or >=) becomes one record per
grid cell with a signed margin.  A negative margin beyond tolerance is a
counterexample.
"""

import collections

from gentrig.verify import GridSpec, check_arc_mean_convexity, check_forward_mean_convexity, check_pi_proposition

grid = GridSpec(p_values=(1.5, 2.0, 3.0), t_values=(0.0, 1.0, 2.0), x_values=(0.1, 0.3, 0.5, 0.7, 0.9))

# arc functions: every record passes
rep = check_arc_mean_convexity(grid)
print("arc functions    ", rep.summary())

# forward functions: sin, tan, tanh, sinh pass; the cos rows do not
rep = check_forward_mean_convexity(grid.with_t((1.0, 2.0)))
print("forward functions", rep.summary(), dict(collections.Counter(r.check_id for r in rep.failures())))
worst = min(rep.failures(), key=lambda r: r.margin)
print("  worst cos cell:", dict(worst.params), f"lhs={worst.lhs:.6f} rhs={worst.rhs:.6f}")
for note in rep.notes:
    print("  note:", note)

# pi_p under power means of (p, q): one failure at the harmonic mean
rep = check_pi_proposition((1.25, 1.5, 2.0, 5.0), t_values=(-1.0, 0.0, 0.5))
print("pi_p proposition ", rep.summary())
for r in rep.failures():
    print("  ", dict(r.params), f"margin={r.margin:.4f}")
