"""Left-invariant Lorentzian problems on Aff+(R), encoded by a matrix A in GL+(2, R).

The Lorentzian form on the Lie algebra is g(u) = -(a u1 + b u2)^2 + (c u1 + d u2)^2,
the time orientation is a u1 + b u2 > 0, and all derived constants consumed by
the geodesic, distance and isometry code are computed once here.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DegenerateMatrix, FlatDegenerate, OrientationViolation
from .group import as_point

EPS_DET = 1e-14
EPS_K = 1e-12
EPS_FLAT = 1e-12


class CurvSign(str, enum.Enum):
    NEG = "Neg"
    ZERO = "Zero"
    POS = "Pos"


class ProblemMatrix(NamedTuple):
    a: float
    b: float
    c: float
    d: float

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class ProblemSpec:
    matrix: ProblemMatrix
    det: float
    alpha: float
    beta: float
    gamma: float
    delta: float
    K: float
    curv_sign: CurvSign
    # hyperbolic data, K != 0 only
    Delta: Optional[float]
    theta: Optional[float]
    lam: Optional[float]
    nu: Optional[float]
    # flat data, K == 0 only
    f: Optional[float]
    g: Optional[float]
    s1: int
    time_reversed: bool = False

    @property
    def a(self):
        return self.matrix.a

    @property
    def b(self):
        return self.matrix.b

    @property
    def c(self):
        return self.matrix.c

    @property
    def d(self):
        return self.matrix.d

    @property
    def gram(self):
        """Frame Gram entries (g11, g12, g22) = (g(X1), g(X1, X2), g(X2))."""
        a, b, c, d = self.matrix
        return c * c - a * a, c * d - a * b, d * d - b * b


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def make_problem(a, b, c, d) -> ProblemSpec:
    """Build a normalized problem from the rows (a, b), (c, d) of A.

    A matrix with a < 0 is replaced by -A (the substitution u -> -u, t -> -t);
    the flip is recorded in ``time_reversed``.
    """
    a, b, c, d = (float(v) for v in (a, b, c, d))
    det = a * d - b * c
    scale = max(abs(a), abs(b), abs(c), abs(d)) ** 2
    if scale == 0.0 or abs(det) <= EPS_DET * scale:
        raise DegenerateMatrix(f"det A = {det!r} is zero")
    if det < 0:
        raise OrientationViolation(f"det A = {det!r} < 0; A must lie in GL+(2, R)")
    time_reversed = a < 0
    if time_reversed:
        a, b, c, d = -a, -b, -c, -d

    alpha, beta, gamma, delta = d / det, -b / det, -c / det, a / det
    k_num = c * c - a * a
    K = k_num / det**2
    if abs(k_num) <= EPS_K * (a * a + c * c):
        sign = CurvSign.ZERO
    elif k_num < 0:
        sign = CurvSign.NEG
    else:
        sign = CurvSign.POS

    Delta = theta = lam = nu = f = g = None
    s1 = _sign(gamma)
    if sign is CurvSign.NEG:
        Delta = math.sqrt(delta * delta - gamma * gamma)
        theta = math.atanh(gamma / delta)
    elif sign is CurvSign.POS:
        Delta = math.sqrt(gamma * gamma - delta * delta)
        theta = math.atanh(delta / gamma)
    if Delta is not None:
        lam = (alpha * delta - beta * gamma) / Delta**2
        nu = (beta * delta - alpha * gamma) / Delta**2
    else:
        f = -(alpha - s1 * beta) / (2 * gamma)
        g = -(alpha + s1 * beta) / (2 * gamma)
        if abs(f) < EPS_FLAT:
            raise FlatDegenerate(f"flat structure with f = {f!r}; inverse formulas divide by f")

    return ProblemSpec(
        matrix=ProblemMatrix(a, b, c, d),
        det=det,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        delta=delta,
        K=K,
        curv_sign=sign,
        Delta=Delta,
        theta=theta,
        lam=lam,
        nu=nu,
        f=f,
        g=g,
        s1=s1,
        time_reversed=time_reversed,
    )


PRESET_MATRICES = {
    "P1": (1.0, 0.0, 0.0, 1.0),
    "P2": (0.0, 1.0, -1.0, 0.0),
    "P3": (0.5, 0.5, -0.5, 0.5),
}


def preset(name: str) -> ProblemSpec:
    try:
        return make_problem(*PRESET_MATRICES[name.upper()])
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; expected one of P1, P2, P3") from None


def l1(spec: ProblemSpec, v) -> float:
    a, b, c, d = spec.matrix
    u1, u2 = v
    return (c - a) * u1 + (d - b) * u2


def l2(spec: ProblemSpec, v) -> float:
    a, b, c, d = spec.matrix
    u1, u2 = v
    return (c + a) * u1 + (d + b) * u2


def lambda1(spec: ProblemSpec, q) -> float:
    x, y = as_point(q)
    a, b, c, d = spec.matrix
    return (c - a) * x + (d - b) * (y - 1.0)


def lambda2(spec: ProblemSpec, q) -> float:
    x, y = as_point(q)
    a, b, c, d = spec.matrix
    return (c + a) * x + (d + b) * (y - 1.0)


def lorentz_form(spec: ProblemSpec, v) -> float:
    a, b, c, d = spec.matrix
    u1, u2 = v
    return -((a * u1 + b * u2) ** 2) + (c * u1 + d * u2) ** 2


def lorentz_bilinear(spec: ProblemSpec, v, w) -> float:
    g11, g12, g22 = spec.gram
    return g11 * v[0] * w[0] + g12 * (v[0] * w[1] + v[1] * w[0]) + g22 * v[1] * w[1]
