"""
Generalized sines and their half period
=======================================

sin_p is the inverse of arcsin_p(x) = int_0^x (1 - t^p)^(-1/p) dt.  At p = 2
everything collapses to the classical functions; away from it the curves
flatten (large p) or sharpen (p close to 1).
"""

from gentrig import FnKind, arc_fn, fwd_fn, pi_p

# pi_p = 2 pi / (p sin(pi/p)) is the length of one hump of sin_p
for p in (1.25, 1.5, 2, 3, 5, 10):
    print(f"p={p:<5} pi_p={pi_p(p).value:.12f}")

# sample sin_p and cos_p across the first quarter period
p = 3.0
half = pi_p(p).value / 2
print(f"\nsin_3 and cos_3 on [0, pi_3/2 = {half:.6f}]")
for k in range(0, 11):
    x = half * k / 10
    s = fwd_fn(FnKind.SIN, p, x).value
    c = fwd_fn(FnKind.COS, p, x).value
    # the p-Pythagorean identity holds to rounding
    print(f"x={x:.4f}  sin={s:.10f}  cos={c:.10f}  sin^p+cos^p-1={s**p + c**p - 1:+.1e}")

# every value carries its own error estimate and the route that produced it
ev = arc_fn(FnKind.ARCTAN, 3.0, 5.0)
print(f"\narctan_3(5) = {ev.value:.15f} +- {ev.abs_err:.1e} via {ev.method.value}")
