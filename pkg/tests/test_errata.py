"""Counterexamples to claimed inequalities, and corrected closed forms.

Each one is pinned with an oracle that does not go through the library
(classical functions or mpmath at 30 digits), and then the harness is
shown to flag the same cells.
"""

import math

import mpmath
import pytest

from gentrig.errors import DivergenceError
from gentrig.hypergeom import gauss_2f1
from gentrig.ptrig import FnKind, arc_fn, arc_fn_pq, constant, lemma_fn
from gentrig.verify import GridSpec, check_monotone, check_pi_proposition, check_forward_mean_convexity

mpmath.mp.dps = 30


def mp_pi(p):
    p = mpmath.mpf(p)
    return 2 * mpmath.pi / (p * mpmath.sin(mpmath.pi / p))


def mp_arcsin(p, x):
    p = mpmath.mpf(p)
    return mpmath.quad(lambda t: (1 - t**p) ** (-1 / p), [0, x])


def test_cosine_mean_inequality_fails_classically():
    # claimed cos(M_1(r, s)) <= M_1(cos r, cos s); cos is concave on (0, pi/2)
    r, s = 0.3, 0.7
    assert math.cos((r + s) / 2) > (math.cos(r) + math.cos(s)) / 2
    rep = check_forward_mean_convexity(GridSpec(p_values=(2.0,), t_values=(1.0,), x_values=(r, s)))
    rec = next(x for x in rep.records if x.check_id == "thm2.cos" and x.param("r") == r and x.param("s") == s)
    assert not rec.passed
    assert rec.lhs == pytest.approx(math.cos(0.5), abs=1e-13)


def test_cosine_mean_inequality_fails_for_larger_orders():
    rep = check_forward_mean_convexity(GridSpec(p_values=(3.0, 10.0), t_values=(2.0, 5.0), x_values=(0.05, 0.95)))
    bad = {(x.param("p"), x.param("t")) for x in rep.records if x.check_id == "thm2.cos" and not x.passed}
    assert bad == {(3.0, 2.0), (10.0, 2.0), (10.0, 5.0)}
    # the sine rows on the same cells are fine
    assert all(x.passed for x in rep.records if x.check_id == "thm2.sin")


def test_sinh_with_inverse_on_right_fails_on_diagonal():
    # with arsinh on the right, even r = s breaks: sinh(x) > (sinh x + arsinh x)/2
    x = 0.5
    assert math.sinh(x) > (math.sinh(x) + math.asinh(x)) / 2
    # the symmetric reading holds with equality there
    assert math.sinh(x) == pytest.approx((math.sinh(x) + math.sinh(x)) / 2)


def test_h3_is_not_increasing():
    # at p = 2, m = 1: h3 = cos'(x) = -sin x, strictly decreasing
    xs = [0.2, 0.4, 0.6]
    vals = [lemma_fn("h3", 1.0, 2.0, x) for x in xs]
    assert vals == pytest.approx([-math.sin(x) for x in xs], abs=1e-13)
    rep = check_monotone("h3", {"p": 2.0, "m": 1.0}, xs)
    assert rep.failed == rep.total == 2


def test_pi_proposition_fails_at_harmonic_order():
    p, q, t = 1.25, 1.5, -1.0
    m = 2 / (1 / mpmath.mpf(p) + 1 / mpmath.mpf(q))
    lhs = mp_pi(m)
    rhs = 2 / (1 / mp_pi(p) + 1 / mp_pi(q))
    assert lhs - rhs > mpmath.mpf("0.02")
    rec = check_pi_proposition((p, q), t_values=(t,)).records
    bad = [x for x in rec if x.param("p") == p and x.param("q") == q]
    assert len(bad) == 1 and not bad[0].passed
    assert bad[0].margin == pytest.approx(float(rhs - lhs), rel=1e-10)


def test_pi_p_is_decreasing_in_p():
    # the proposition's argument leans on pi_p increasing; it decreases on (1, inf)
    vals = [mp_pi(p) for p in (1.25, 1.5, 2, 3, 5, 10)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_c_p_series_at_one_diverges(p):
    with pytest.raises(DivergenceError):
        gauss_2f1(1.0, 1.0 / p, 1.0 + 1.0 / p, 1.0)
    c = constant("c_p", p).value
    ref = float(mpmath.quad(lambda t: (1 + t**p) ** (-1 / mpmath.mpf(p)), [0, 1]))
    assert c == pytest.approx(ref, rel=1e-14)


def test_arcsin_pq_with_c_from_p_disagrees_with_integral():
    p, q, x = 1.5, 3.0, 0.8
    pm, qm = mpmath.mpf(p), mpmath.mpf(q)
    integral = mpmath.quad(lambda t: (1 - t**qm) ** (-1 / pm), [0, x])
    variant = x * mpmath.hyp2f1(1 / pm, 1 / qm, 1 + 1 / pm, x**q)
    fixed = x * mpmath.hyp2f1(1 / pm, 1 / qm, 1 + 1 / qm, x**q)
    assert abs(fixed - integral) < 1e-15
    assert abs(variant - integral) > 1e-3
    assert arc_fn_pq("arcsin_pq", p, q, x).value == pytest.approx(float(integral), rel=1e-14)
    assert arc_fn_pq("arcsin_pq", p, q, x, c_from_p=True).value == pytest.approx(float(variant), rel=1e-14)


@pytest.mark.parametrize("p", [1.5, 3.0])
def test_naive_arcsin_complement_is_wrong_off_p2(p):
    # pi_p/2 - arcsin_p((1-x^p)^(1/p)) is arcsin_p(x) only when p = 2
    x = mpmath.mpf("0.9")
    naive = mp_pi(p) / 2 - mp_arcsin(p, (1 - x**p) ** (1 / mpmath.mpf(p)))
    true = mp_arcsin(p, x)
    assert abs(naive - true) > 1e-3
    assert arc_fn(FnKind.ARCSIN, p, 0.9).value == pytest.approx(float(true), rel=1e-14)
    x2 = mpmath.mpf("0.9")
    assert abs(mpmath.pi / 2 - mpmath.asin(mpmath.sqrt(1 - x2**2)) - mpmath.asin(x2)) < 1e-25
