import numpy as np
import pytest

from afflorentz.errors import AffLorentzError
from afflorentz.problem import CurvSign, make_problem

SIGNS = {"neg": CurvSign.NEG, "pos": CurvSign.POS, "zero": CurvSign.ZERO}


def random_spec(rng, kind):
    """Random normalized problem of the requested curvature sign, det bounded away from 0."""
    while True:
        a, b, c, d = rng.uniform(-1.5, 1.5, 4)
        if kind == "zero":
            c = a * rng.choice([-1.0, 1.0])
        det = a * d - b * c
        if abs(det) < 0.3:
            continue
        if det < 0:
            c, d = -c, -d
        try:
            spec = make_problem(a, b, c, d)
        except AffLorentzError:
            continue
        if spec.curv_sign is SIGNS[kind]:
            return spec


def random_point(rng, xr=3.0, yr=(0.2, 3.0)):
    return (float(rng.uniform(-xr, xr)), float(rng.uniform(*yr)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
