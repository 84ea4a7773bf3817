"""
Eigenfunctions of the one-dimensional p-Laplacian
=================================================

u(t) = sin_p(n pi_p t) solves -(|u'|^(p-2) u')' = lam |u|^(p-2) u on (0, 1)
with u(0) = u(1) = 0 and lam = (p - 1)(n pi_p)^p.
"""

from gentrig import eigenpair
from gentrig.verify import check_eigen_residual

for p in (1.5, 2.0, 3.0):
    for n in (1, 2):
        ep = eigenpair(n, p)
        rep = check_eigen_residual(n, p, h=1e-4)
        res = max(r.lhs for r in rep.select("eigen.residual").records)
        # the residual is measured relative to lam, away from the extrema of u
        print(f"p={p} n={n} lam={ep.lam:.10f} max relative residual={res:.1e} {rep.summary()}")

# a coarse look at the second mode for p = 3
ep = eigenpair(2, 3.0)
print("\nt     u(t)")
for k in range(11):
    t = k / 10
    print(f"{t:.1f}  {ep.u(t):+.6f}")
