import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gentrig.errors import DomainError
from gentrig.means import power_mean

EPS = 2.220446049250313e-16
pos = st.floats(1e-6, 1e6)
orders = st.floats(-100, 100)


@pytest.mark.parametrize("t,x,y,expected", [(0, 4, 9, 6.0), (2, 1, 7, 5.0), (1, 3, 5, 4.0)])
def test_examples(t, x, y, expected):
    assert power_mean(t, x, y) == pytest.approx(expected, rel=4 * EPS)


def test_harmonic_mean():
    assert power_mean(-1, 2, 6) == pytest.approx(3.0, rel=4 * EPS)


@pytest.mark.parametrize("x,y", [(0, 1), (-1, 2), (1, 0)])
def test_nonpositive_rejected(x, y):
    with pytest.raises(DomainError):
        power_mean(1, x, y)


@pytest.mark.parametrize("t", [100.5, -101, math.inf, math.nan])
def test_order_guard(t):
    with pytest.raises(DomainError):
        power_mean(t, 1, 2)


def test_tiny_nonzero_order_uses_power_formula():
    # no silent switch to the geometric mean
    assert power_mean(1e-9, 4.0, 9.0) == pytest.approx(6.0, rel=1e-6)


def test_large_order_does_not_overflow():
    assert power_mean(100, 1e300, 1e299) == pytest.approx(1e300 * 0.5 ** 0.01, rel=1e-12)
    assert power_mean(-100, 1e-300, 1e-299) == pytest.approx(1e-300 * 0.5 ** -0.01, rel=1e-12)


@given(orders, pos, pos)
def test_symmetry(t, x, y):
    assert power_mean(t, x, y) == power_mean(t, y, x)


@given(orders, pos)
def test_idempotence(t, x):
    assert abs(power_mean(t, x, x) - x) <= 2 * EPS * x


@given(orders, pos, pos)
def test_internality(t, x, y):
    m = power_mean(t, x, y)
    assert min(x, y) * (1 - 2 * EPS) <= m <= max(x, y) * (1 + 2 * EPS)


@given(orders, orders, pos, pos)
def test_monotone_in_order(t1, t2, x, y):
    assume(t1 != t2)
    t1, t2 = sorted((t1, t2))
    lo, hi = power_mean(t1, x, y), power_mean(t2, x, y)
    assert lo <= hi + 1e-12 * max(lo, hi, 1.0)


@given(st.floats(-20, 20), st.floats(1e-3, 1e3), st.floats(1e-3, 1e3), st.sampled_from([0.5, 3.0]))
def test_homogeneity(t, x, y, c):
    lhs = power_mean(t, c * x, c * y)
    rhs = c * power_mean(t, x, y)
    # 4 ulps of slack for the scaled inputs, plus the conditioning of z**(1/t) when |t| is small
    ulps = 4 + (abs(1 / t) * 2 if t else 0)
    assert abs(lhs - rhs) <= ulps * EPS * rhs
