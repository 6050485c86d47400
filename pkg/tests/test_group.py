import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from afflorentz.group import IDENTITY, GroupPoint, group_inv, group_mul, left_translate, lie_exp, lie_log

coords = st.floats(-50, 50)
heights = st.floats(1e-3, 50)


def close(p, q, tol=1e-12):
    return abs(p.x - q[0]) <= tol * (1 + abs(q[0])) and abs(p.y - q[1]) <= tol * (1 + abs(q[1]))


def test_product_examples():
    assert close(group_mul((0, 1), (3, 2)), (3, 2))
    assert close(group_mul((1, 2), (3, 4)), (7, 8))
    assert close(group_mul((7, 8), group_inv((1, 2))), (3, 4))


def test_inverse_examples():
    assert close(group_inv((0, 1)), (0, 1))
    assert close(group_inv((1, 2)), (-0.5, 0.5))
    assert close(group_inv((-3, 0.25)), (12, 4))


def test_lie_exp_examples():
    assert close(lie_exp((1, 0), 5), (5, 1))
    assert close(lie_exp((0, 1), math.log(2)), (0, 2))
    assert close(lie_exp((1, 1), 1), (math.e - 1, math.e))


def test_left_translate_examples():
    assert close(left_translate(IDENTITY, (2, 3)), (2, 3))
    assert close(left_translate((1, 2), (0, 1)), (1, 2))
    assert close(left_translate(group_inv((1, 2)), (1, 2)), (0, 1))


def test_point_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        GroupPoint(0.0, -1.0)
    with pytest.raises(ValueError):
        GroupPoint(float("nan"), 1.0)


@given(coords, heights, coords, heights, coords, heights)
def test_associative(x1, y1, x2, y2, x3, y3):
    p, q, r = (x1, y1), (x2, y2), (x3, y3)
    lhs = group_mul(group_mul(p, q), r)
    rhs = group_mul(p, group_mul(q, r))
    assert lhs.x == pytest.approx(rhs.x, rel=1e-9, abs=1e-9)
    assert lhs.y == pytest.approx(rhs.y, rel=1e-12)


@given(coords, heights)
def test_inverse_both_sides(x, y):
    p = (x, y)
    for q in (group_mul(p, group_inv(p)), group_mul(group_inv(p), p)):
        assert q.x == pytest.approx(0.0, abs=1e-9 * (1 + abs(x)))
        assert q.y == pytest.approx(1.0, rel=1e-12)


def test_lie_exp_continuous_at_u2_zero():
    base = lie_exp((1.3, 0.0), 2.0)
    for u2 in (1e-4, 1e-7, 1e-10, -1e-10, -1e-7):
        q = lie_exp((1.3, u2), 2.0)
        assert abs(q.x - base.x) <= 10 * abs(u2)
        assert abs(q.y - 1.0) <= 10 * abs(u2)


def test_lie_exp_is_one_parameter_subgroup():
    v = (0.7, -0.4)
    for s, t in [(0.3, 1.1), (-2.0, 0.5)]:
        lhs = group_mul(lie_exp(v, s), lie_exp(v, t))
        assert close(lhs, tuple(lie_exp(v, s + t)), 1e-12)


def test_lie_exp_solves_frame_ode():
    # d/dt q = u1 X1 + u2 X2 = (y u1, y u2) at q(t); check by central differences
    v, t, h = (0.9, 0.6), 0.8, 1e-6
    q = lie_exp(v, t)
    qp, qm = lie_exp(v, t + h), lie_exp(v, t - h)
    vel = np.array([(qp.x - qm.x) / (2 * h), (qp.y - qm.y) / (2 * h)])
    assert np.allclose(vel, [q.y * v[0], q.y * v[1]], atol=1e-8)


@given(st.floats(-5, 5), st.floats(-3, 3))
def test_log_inverts_exp(u1, u2):
    q = lie_exp((u1, u2), 1.0)
    w = lie_log(q)
    assert w.u1 == pytest.approx(u1, abs=1e-9)
    assert w.u2 == pytest.approx(u2, abs=1e-12)
