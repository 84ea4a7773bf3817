import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gentrig.errors import DomainError
from gentrig.hypergeom import Method
from gentrig.ptrig import (
    FnKind,
    arc_fn,
    arc_fn_deriv,
    arc_fn_pq,
    constant,
    eigenpair,
    fwd_fn,
    fwd_fn_deriv,
    lemma_fn,
    n_pq,
    pi_p,
    pi_pq,
)
from gentrig.quad_oracle import IntegralSpec, arc_integral

from conftest import P_GRID, X_GRID, classical_pi_p

mpmath.mp.dps = 30

INVERSE = [FnKind.ARCSIN, FnKind.ARCCOS, FnKind.ARCTAN, FnKind.ARSINH, FnKind.ARTANH]
FORWARD = [FnKind.SIN, FnKind.COS, FnKind.TAN, FnKind.SINH, FnKind.TANH]
CLASSICAL = {
    FnKind.ARCSIN: math.asin,
    FnKind.ARCCOS: math.acos,
    FnKind.ARCTAN: math.atan,
    FnKind.ARSINH: math.asinh,
    FnKind.ARTANH: math.atanh,
    FnKind.SIN: math.sin,
    FnKind.COS: math.cos,
    FnKind.TAN: math.tan,
    FnKind.SINH: math.sinh,
    FnKind.TANH: math.tanh,
}


def mp_arc(kind: FnKind, p: float, x: float) -> float:
    """High-precision integral oracle, independent of both library routes."""
    return float(mp_arc_mp(kind, p, x))


def mp_arc_mp(kind: FnKind, p, x):
    p = mpmath.mpf(p)
    x = mpmath.mpf(x)
    if kind is FnKind.ARCCOS:
        return mp_arc_mp(FnKind.ARCSIN, p, (1 - x**p) ** (1 / p))
    f = {
        FnKind.ARCSIN: lambda t: (1 - t**p) ** (-1 / p),
        FnKind.ARCTAN: lambda t: 1 / (1 + t**p),
        FnKind.ARSINH: lambda t: (1 + t**p) ** (-1 / p),
        FnKind.ARTANH: lambda t: 1 / (1 - t**p),
    }[kind]
    # breakpoints around the kernel's knee at t = 1 keep mpmath's quadrature honest for large p
    knots = [0] + [k for k in (mpmath.mpf("0.9"), 1, mpmath.mpf("1.1")) if k < x] + [x]
    return mpmath.quad(f, knots)


def fwd_grid(kind: FnKind, p: float):
    """Forward-function sample points: the unit grid scaled into the domain."""
    scale = classical_pi_p(p) / 2 if kind in (FnKind.SIN, FnKind.COS, FnKind.TAN) else 3.0
    return [x * scale for x in X_GRID]


# -------------------------------------------------------------------- constants


def test_pi_2_is_pi():
    ev = pi_p(2)
    assert ev.value == pytest.approx(math.pi, abs=4 * 2.3e-16 * math.pi)
    assert ev.method is Method.CLOSED_FORM


def test_pi_4_via_singular_quadrature():
    assert pi_p(4).value == pytest.approx(math.pi / math.sqrt(2), rel=1e-15)
    quad = 2 * arc_integral(IntegralSpec("arcsin", 4.0, 1.0), 1e-13).value
    assert abs(pi_p(4).value - quad) <= 1e-12


@pytest.mark.parametrize("p", P_GRID)
def test_pi_p_is_twice_arcsin_at_one(p):
    assert 2 * arc_fn(FnKind.ARCSIN, p, 1.0).value == pytest.approx(pi_p(p).value, rel=1e-14)


def test_domain_constants_at_p2():
    assert constant("a_p", 2).value == pytest.approx(math.pi / 2, rel=1e-15)
    assert abs(constant("b_p", 2).value - math.pi / 4) <= 1e-15
    assert abs(constant("c_p", 2).value - math.log(1 + math.sqrt(2))) <= 1e-15


@pytest.mark.parametrize("p", [1.5, 3.0, 7.0])
def test_domain_constants_against_integrals(p):
    b = arc_integral(IntegralSpec("arctan", p, 1.0)).value
    c = arc_integral(IntegralSpec("arsinh", p, 1.0)).value
    assert abs(constant("b_p", p).value - b) <= 1e-12
    assert abs(constant("c_p", p).value - c) <= 1e-12


def test_unknown_constant():
    with pytest.raises(ValueError):
        constant("d_p", 2)


@pytest.mark.parametrize("p", [1.0, 1.0 + 1e-10, 0.5, 1e6, math.inf, math.nan])
def test_exponent_range(p):
    with pytest.raises(DomainError):
        pi_p(p)


# -------------------------------------------------------------------- inverse functions


def test_arc_examples():
    assert abs(arc_fn(FnKind.ARCSIN, 2, 0.5).value - math.pi / 6) <= 1e-15
    assert abs(arc_fn(FnKind.ARCCOS, 2, 0.0).value - math.pi / 2) <= 1e-15
    assert abs(arc_fn(FnKind.ARCTAN, 2, 1.0).value - math.pi / 4) <= 1e-15
    assert arc_fn("arcsin_p", 2, 0.5).value == arc_fn(FnKind.ARCSIN, 2, 0.5).value


@pytest.mark.parametrize("kind", [k for k in INVERSE if k is not FnKind.ARCCOS])
@pytest.mark.parametrize("p", [1.3, 2.0, 7.0])
def test_arc_at_zero(kind, p):
    assert arc_fn(kind, p, 0.0).value == 0.0


@pytest.mark.parametrize("kind", INVERSE)
@pytest.mark.parametrize("p", P_GRID)
def test_arc_against_mpmath(kind, p):
    for x in (0.05, 0.3, 0.6, 0.75, 0.95):
        ev = arc_fn(kind, p, x)
        assert abs(ev.value - mp_arc(kind, p, x)) <= ev.abs_err


@pytest.mark.parametrize("kind", [FnKind.ARCTAN, FnKind.ARSINH])
@pytest.mark.parametrize("p", [1.25, 3.0, 10.0])
def test_arc_beyond_one(kind, p):
    for x in (1.0, 1.5, 4.0, 50.0):
        ev = arc_fn(kind, p, x)
        assert ev.value == pytest.approx(mp_arc(kind, p, x), rel=1e-13)


@pytest.mark.parametrize("p", P_GRID)
def test_arctan_tail_at_large_argument(p):
    x = 1e6
    gap = pi_p(p).value / 2 - arc_fn(FnKind.ARCTAN, p, x).value
    # int_x^inf dt/(1+t^p) = x^(1-p)/(p-1) (1 + O(x^-p))
    assert gap == pytest.approx(x ** (1 - p) / (p - 1), rel=1e-6, abs=1e-15)
    if x ** (1 - p) / (p - 1) <= 1e-4:
        assert abs(gap) <= 1e-4


@pytest.mark.parametrize(
    "kind,x",
    [
        (FnKind.ARCSIN, 1.01),
        (FnKind.ARCCOS, 2.0),
        (FnKind.ARTANH, 1.0),
        (FnKind.ARCSIN, -0.1),
        (FnKind.ARCTAN, math.inf),
        (FnKind.ARSINH, math.nan),
    ],
)
def test_arc_domain(kind, x):
    with pytest.raises(DomainError):
        arc_fn(kind, 2.0, x)


def test_artanh_near_pole_is_accepted():
    x = 1 - 1e-12
    ev = arc_fn(FnKind.ARTANH, 2.0, x)
    assert ev.value == pytest.approx(math.atanh(x), rel=1e-9)


def test_kind_mismatch():
    with pytest.raises(ValueError):
        arc_fn(FnKind.SIN, 2.0, 0.5)
    with pytest.raises(ValueError):
        fwd_fn(FnKind.ARCSIN, 2.0, 0.5)


# -------------------------------------------------------------------- p = 2 reduction


@pytest.mark.parametrize("kind", INVERSE)
def test_classical_reduction_inverse(kind):
    for x in X_GRID:
        assert abs(arc_fn(kind, 2.0, x).value - CLASSICAL[kind](x)) <= 1e-12


@pytest.mark.parametrize("kind", FORWARD)
def test_classical_reduction_forward(kind):
    for x in fwd_grid(kind, 2.0):
        assert abs(fwd_fn(kind, 2.0, x).value - CLASSICAL[kind](x)) <= 1e-12


def test_sine_example():
    assert abs(fwd_fn(FnKind.SIN, 2, 0.5235987756).value - 0.5) <= 1e-10


def test_tanh_saturates():
    y = fwd_fn(FnKind.TANH, 2, 20.0).value
    # 1 - tanh(20) is about 8.5e-18, below half an ulp of 1
    assert 0 <= 1 - y < 1e-8
    assert abs(y - math.tanh(20.0)) <= 1e-15


@pytest.mark.parametrize("p", [1.5, 3.0])
def test_tanh_far_tail_monotone(p):
    vals = [fwd_fn(FnKind.TANH, p, x).value for x in (5.0, 10.0, 15.0, 30.0)]
    assert all(a <= b <= 1.0 for a, b in zip(vals, vals[1:]))


# -------------------------------------------------------------------- forward functions


@pytest.mark.parametrize("p", [1.5, 3.0, 6.0])
def test_forward_against_mpmath_inversion(p):
    # invert the high-precision integral oracle with a root finder
    for kind in (FnKind.SIN, FnKind.TAN, FnKind.SINH, FnKind.TANH):
        inv = kind.partner
        for x in (0.2, 0.9):
            hi = 1 - 1e-9 if kind in (FnKind.SIN, FnKind.TANH) else 2.0
            y = float(mpmath.findroot(lambda v: mp_arc_mp(inv, p, v) - x, (1e-9, hi), solver="anderson"))
            assert fwd_fn(kind, p, x).value == pytest.approx(y, rel=1e-12)


def test_roundtrip_example():
    assert abs(fwd_fn(FnKind.SIN, 3, arc_fn(FnKind.ARCSIN, 3, 0.3).value).value - 0.3) <= 1e-13


def roundtrip_bound(outer_deriv: float, inner: float) -> float:
    """1e-10 plus what one rounding of the intermediate value costs after the outer map."""
    return 1e-10 + 4 * 2.2e-16 * abs(inner) * abs(outer_deriv)


@pytest.mark.parametrize("kind", FORWARD)
@pytest.mark.parametrize("p", P_GRID)
def test_roundtrip_both_ways(kind, p):
    inv = kind.partner
    for x in X_GRID:
        y = arc_fn(inv, p, x).value
        bound = roundtrip_bound(1 / arc_fn_deriv(inv, p, x), y)
        assert abs(fwd_fn(kind, p, y).value - x) <= bound
        y = fwd_fn(kind, p, x).value
        bound = roundtrip_bound(1 / fwd_fn_deriv(kind, p, x), y)
        assert abs(arc_fn(inv, p, y).value - x) <= bound


@pytest.mark.parametrize("kind", FORWARD)
@pytest.mark.parametrize("p", [1.5, 3.0])
def test_roundtrip_on_forward_domain(kind, p):
    inv = kind.partner
    for y in fwd_grid(kind, p):
        v = fwd_fn(kind, p, y).value
        assert abs(arc_fn(inv, p, v).value - y) <= roundtrip_bound(1 / fwd_fn_deriv(kind, p, y), v)


def test_cosine_roundtrip_is_conditioning_limited():
    # near x = 0, arccos_10 sits only ~x^9/9 below pi_p/2, so one ulp there moves cos_10 by ~1e-6
    x = 0.05
    y = arc_fn(FnKind.ARCCOS, 10.0, x)
    back = fwd_fn(FnKind.COS, 10.0, y.value)
    assert 1e-10 < abs(back.value - x) <= back.abs_err


@pytest.mark.parametrize("p", P_GRID)
def test_forward_endpoints(p):
    half = pi_p(p).value / 2
    assert fwd_fn(FnKind.SIN, p, half).value == 1.0
    assert fwd_fn(FnKind.COS, p, half).value == 0.0
    assert fwd_fn(FnKind.COS, p, 0.0).value == 1.0
    for kind in FORWARD:
        if kind is not FnKind.COS:
            assert fwd_fn(kind, p, 0.0).value == 0.0


@pytest.mark.parametrize("kind,x", [(FnKind.SIN, 1.6), (FnKind.COS, 1.6), (FnKind.TAN, math.pi / 2), (FnKind.SINH, -1.0)])
def test_forward_domain(kind, x):
    with pytest.raises(DomainError):
        fwd_fn(kind, 2.0, x)


@given(st.floats(1.05, 20.0), st.floats(0.0, 1.0))
def test_pythagorean_identity(p, frac):
    x = frac * pi_p(p).value / 2
    s = fwd_fn(FnKind.SIN, p, x).value
    c = fwd_fn(FnKind.COS, p, x).value
    assert abs(s**p + c**p - 1.0) <= 1e-10


@given(st.floats(1.05, 20.0), st.floats(0.01, 0.99))
def test_forward_values_in_range(p, frac):
    x = frac * pi_p(p).value / 2
    assert 0.0 < fwd_fn(FnKind.SIN, p, x).value <= 1.0
    assert fwd_fn(FnKind.SINH, p, x).value >= fwd_fn(FnKind.SIN, p, x).value
    assert fwd_fn(FnKind.TANH, p, x).value < 1.0


# -------------------------------------------------------------------- derivatives


def central(f, x, h=1e-5):
    return (f(x + h) - f(x - h)) / (2 * h)


def test_derivative_examples():
    assert arc_fn_deriv(FnKind.ARCSIN, 3.0, 0.0) == 1.0
    assert arc_fn_deriv(FnKind.ARCTAN, 2.0, 1.0) == 0.5
    assert fwd_fn_deriv(FnKind.SIN, 3.0, 0.0) == 1.0
    assert fwd_fn_deriv(FnKind.TAN, 2.0, 0.7853981634) == pytest.approx(2.0, rel=1e-9)


def test_derivative_endpoint_errors():
    with pytest.raises(DomainError):
        arc_fn_deriv(FnKind.ARCSIN, 2.0, 1.0)
    with pytest.raises(DomainError):
        arc_fn_deriv(FnKind.ARCCOS, 1.5, 0.0)


@pytest.mark.parametrize("kind", INVERSE)
@pytest.mark.parametrize("p", [1.5, 3.0])
def test_inverse_derivative_finite_difference(kind, p):
    for x in (0.2, 0.5, 0.8):
        fd = central(lambda v: arc_fn(kind, p, v).value, x)
        assert arc_fn_deriv(kind, p, x) == pytest.approx(fd, rel=1e-6)


@pytest.mark.parametrize("kind", FORWARD)
@pytest.mark.parametrize("p", [1.5, 3.0])
def test_forward_derivative_finite_difference(kind, p):
    for x in (0.2, 0.4, 0.8):
        fd = central(lambda v: fwd_fn(kind, p, v).value, x)
        assert fwd_fn_deriv(kind, p, x) == pytest.approx(fd, rel=1e-6)


@pytest.mark.parametrize("p", [1.5, 3.0])
def test_forward_derivative_is_reciprocal(p):
    for kind in FORWARD:
        x = 0.4
        y = fwd_fn(kind, p, x).value
        assert fwd_fn_deriv(kind, p, x) == pytest.approx(1 / arc_fn_deriv(kind.partner, p, y), rel=1e-12)


# -------------------------------------------------------------------- two-parameter family


def test_pq_reduces_to_one_parameter():
    assert arc_fn_pq("arcsin_pq", 3, 3, 0.4).value == pytest.approx(arc_fn(FnKind.ARCSIN, 3, 0.4).value, rel=1e-15)
    assert abs(arc_fn_pq("arcsin_pq", 2, 2, 0.5).value - math.pi / 6) <= 1e-15
    assert arc_fn_pq("arsinh_pq", 1.7, 4.2, 0.0).value == 0.0
    assert arc_fn_pq("arsinh_pq", 3, 3, 0.8).value == pytest.approx(arc_fn(FnKind.ARSINH, 3, 0.8).value, rel=1e-14)
    assert arc_fn_pq("arccos_pq", 3, 3, 0.4).value == pytest.approx(arc_fn(FnKind.ARCCOS, 3, 0.4).value, rel=1e-14)


@pytest.mark.parametrize("kind", ["arcsin_pq", "arsinh_pq"])
@pytest.mark.parametrize("p,q", [(1.5, 3.0), (3.0, 1.5), (2.0, 5.0)])
def test_pq_against_integrals(kind, p, q):
    for x in (0.1, 0.5, 0.8, 0.97, 1.0):
        ev = arc_fn_pq(kind, p, q, x)
        ref = arc_integral(IntegralSpec(kind, p, x, q), 1e-13)
        assert abs(ev.value - ref.value) <= ev.abs_err + ref.abs_err + 1e-12


@pytest.mark.parametrize("p,q", [(1.5, 3.0), (2.0, 5.0)])
def test_arccos_pq_against_integral(p, q):
    x = 0.6
    ref = arc_integral(IntegralSpec("arccos_pq", p, x, q), 1e-13).value
    assert abs(arc_fn_pq("arccos_pq", p, q, x).value - ref) <= 1e-12


def test_c_from_p_series_differs_when_p_ne_q():
    p, q, x = 1.5, 3.0, 0.8
    integral = arc_integral(IntegralSpec("arcsin_pq", p, x, q), 1e-13).value
    variant = arc_fn_pq("arcsin_pq", p, q, x, c_from_p=True).value
    default = arc_fn_pq("arcsin_pq", p, q, x).value
    assert abs(default - integral) <= 1e-12
    assert abs(variant - integral) > 1e-3
    assert arc_fn_pq("arcsin_pq", 3, 3, x, c_from_p=True).value == pytest.approx(arc_fn(FnKind.ARCSIN, 3, x).value, rel=1e-14)


def test_pi_pq():
    assert pi_pq(3, 3).value == pytest.approx(pi_p(3).value, rel=1e-13)
    assert pi_pq(1.5, 3).value / 2 == pytest.approx(arc_integral(IntegralSpec("arcsin_pq", 1.5, 1.0, 3.0), 1e-13).value, rel=1e-12)


def test_n_pq():
    assert n_pq(2, 2).value == pytest.approx(math.log(1 + math.sqrt(2)), rel=1e-15)
    for p in (1.5, 4.0):
        assert n_pq(p, p).value == pytest.approx(constant("c_p", p).value, rel=1e-15)
    ref = float(mpmath.quad(lambda t: (1 + t**3) ** -0.5, [0, 1]))
    assert n_pq(2, 3).value == pytest.approx(ref, rel=1e-14)


def test_pq_domain():
    with pytest.raises(DomainError):
        arc_fn_pq("arcsin_pq", 2, 3, 1.2)
    with pytest.raises(ValueError):
        arc_fn_pq("arctan_pq", 2, 3, 0.2)


# -------------------------------------------------------------------- eigenpairs


def test_eigenvalues():
    assert eigenpair(1, 2).lam == pytest.approx(math.pi**2, rel=1e-14)
    assert eigenpair(2, 2).lam == pytest.approx(4 * math.pi**2, rel=1e-14)
    pi3 = 2 * math.pi / (3 * math.sin(math.pi / 3))
    assert eigenpair(1, 3).lam == pytest.approx(2 * pi3**3, rel=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classical_eigenfunction(n):
    ep = eigenpair(n, 2.0)
    for t in (0.01, 0.23, 0.5, 0.77, 0.99):
        assert abs(ep.u(t) - math.sin(n * math.pi * t)) <= 1e-13
        assert abs(ep.du(t) - n * math.pi * math.cos(n * math.pi * t)) <= 1e-11


@pytest.mark.parametrize("p", [1.5, 3.0])
def test_eigenfunction_zeros_and_symmetry(p):
    ep = eigenpair(3, p)
    for t in (1 / 3, 2 / 3):
        assert abs(ep.u(t)) <= 1e-12
    assert ep.u(0.1) == pytest.approx(-ep.u(0.1 + 1 / 3), abs=1e-12)
    assert ep.u(1 / 6) == pytest.approx(1.0, abs=1e-12)


def test_eigenpair_rejects_bad_mode():
    for n in (0, -1, 1.5):
        with pytest.raises(ValueError):
            eigenpair(n, 2.0)


# -------------------------------------------------------------------- lemma functions


def test_lemma_examples():
    assert lemma_fn("f1", 0, 3, 0.5) == pytest.approx((1 - 0.125) ** (-1 / 3), rel=1e-15)
    assert round(lemma_fn("f1", 0, 3, 0.5), 10) == 1.0455159171
    assert lemma_fn("f3", 2.0, 3.0, 1e-6) == pytest.approx(1.0, abs=1e-10)
    expected = (math.tan(0.5) / 0.5) / math.cos(0.5) ** 2
    assert lemma_fn("h4", 2, 2, 0.5) == pytest.approx(expected, rel=1e-13)


def test_lemma_h3_uses_cos_ratio():
    x = 0.4
    assert lemma_fn("h3", 2, 2, x) == pytest.approx(math.cos(x) / x * -math.sin(x), rel=1e-13)


@pytest.mark.parametrize("family,m,x", [("f1", -1.5, 0.5), ("h1", 0.5, 0.5), ("f2", 0, 1.0), ("h2", 1, 0.0)])
def test_lemma_domain(family, m, x):
    with pytest.raises(DomainError):
        lemma_fn(family, m, 2.0, x)


def test_lemma_unknown_family():
    with pytest.raises(ValueError):
        lemma_fn("g1", 1, 2.0, 0.5)
