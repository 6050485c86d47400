import math

import pytest

from afflorentz.errors import DegenerateMatrix, OrientationViolation
from afflorentz.problem import CurvSign, lambda1, lambda2, lorentz_form, make_problem, preset


def test_p1_constants():
    s = preset("P1")
    assert s.K == -1 and s.curv_sign is CurvSign.NEG
    assert (s.alpha, s.beta, s.gamma, s.delta) == (1, 0, 0, 1)
    assert (s.Delta, s.theta, s.lam, s.nu) == (1, 0, 1, 0)


def test_p2_constants():
    s = preset("P2")
    assert s.K == 1 and s.curv_sign is CurvSign.POS
    assert (s.alpha, s.beta, s.gamma, s.delta) == (0, -1, 1, 0)
    assert (s.Delta, s.theta, s.s1, s.lam, s.nu) == (1, 0, 1, 1, 0)


def test_p3_constants():
    s = preset("P3")
    assert s.K == 0 and s.curv_sign is CurvSign.ZERO
    assert (s.alpha, s.beta, s.gamma, s.delta) == (1, -1, 1, 1)
    assert (s.s1, s.f, s.g) == (1, -1, 0)


def test_degenerate_and_orientation():
    with pytest.raises(DegenerateMatrix):
        make_problem(1, 2, 2, 4)
    with pytest.raises(OrientationViolation):
        make_problem(0, 1, 1, 0)


def test_sign_flip_is_recorded():
    s = make_problem(-1, 0, 0, -1)
    assert s.time_reversed
    assert tuple(s.matrix) == (1, 0, 0, 1)
    assert s.K == -1


def test_curvature_formula_on_random_matrices(rng):
    for _ in range(200):
        a, b, c, d = rng.uniform(-2, 2, 4)
        det = a * d - b * c
        if det < 0.1:
            continue
        s = make_problem(a, b, c, d)
        assert s.K == pytest.approx((c * c - a * a) / det**2, rel=1e-12, abs=1e-15)


def test_wedge_functions():
    s = preset("P1")
    assert lambda1(s, (0, 1)) == 0
    assert lambda1(s, (3, 1)) == -3
    assert lambda2(s, (3, 1)) == 3
    assert lambda2(s, (0, 2)) == 1


def test_lorentz_form():
    assert lorentz_form(preset("P1"), (1, 0)) == -1
    assert lorentz_form(preset("P3"), (1, 1)) == -1
    for name in ("P1", "P2", "P3"):
        assert lorentz_form(preset(name), (0, 0)) == 0


def test_form_is_pullback_of_minkowski(rng):
    # g(u) = -(a u1 + b u2)^2 + (c u1 + d u2)^2: the time axis is the first row of A
    s = preset("P3")
    for _ in range(20):
        u1, u2 = rng.normal(size=2)
        assert lorentz_form(s, (u1, u2)) == pytest.approx(-u1 * u2)


def test_unknown_preset():
    with pytest.raises(ValueError):
        preset("P9")
