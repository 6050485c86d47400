"""Killing fields, their brackets, and the isometric embedding of flat structures
into a Minkowski half-plane.

Vector fields are written in the global coordinates (x, y) as pairs of
coefficients of d/dx and d/dy. The bracket convention is
[V, W] = DW . V - DV . W, so that [X1~, X2~] = X1~ for the right-invariant pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import WrongCurvature
from .group import as_point
from .problem import CurvSign, ProblemSpec, lorentz_bilinear

FD_STEP = 1e-5


@dataclass(frozen=True)
class KillingField:
    tag: str  # "RightX1", "RightX2" or "Extra"
    evaluator: Callable
    jacobian: Callable  # q -> 2x2 array d(coeffs)/d(x, y)
    complete: bool = True

    def __call__(self, q):
        q = as_point(q)
        return np.asarray(self.evaluator(q.x, q.y), dtype=float)


def _extra_sign(spec):
    # X- and X+ share one formula with nu replaced by -nu for K > 0
    return 1.0 if spec.curv_sign is CurvSign.NEG else -1.0


def _extra_field(spec: ProblemSpec):
    if spec.curv_sign is CurvSign.ZERO:
        g = spec.g

        def ev(x, y):
            return (x + g * (y * y - 1.0), y * (1.0 - y))

        def jac(x, y):
            return np.array([[1.0, 2.0 * g * y], [0.0, 1.0 - 2.0 * y]])

        return ev, jac

    lam, nu = spec.lam, _extra_sign(spec) * spec.nu

    def ev(x, y):
        w = (x - nu * (y - 1.0)) / lam
        return (lam * (y * y + w * w - 1.0) + 2.0 * nu * w * y, 2.0 * w * y)

    def jac(x, y):
        w = (x - nu * (y - 1.0)) / lam
        return np.array([
            [2.0 * w + 2.0 * nu * y / lam, 2.0 * lam * y - 2.0 * nu * nu * y / lam],
            [2.0 * y / lam, 2.0 * w - 2.0 * nu * y / lam],
        ])

    return ev, jac


def killing_basis(spec: ProblemSpec) -> list:
    """[X1~, X2~, extra]: right-invariant fields plus the field tangent to spheres about Id."""
    right1 = KillingField("RightX1", lambda x, y: (1.0, 0.0), lambda x, y: np.zeros((2, 2)))
    right2 = KillingField("RightX2", lambda x, y: (x, y), lambda x, y: np.eye(2))
    ev, jac = _extra_field(spec)
    return [right1, right2, KillingField("Extra", ev, jac, complete=False)]


def lie_bracket(spec: ProblemSpec, F1: KillingField, F2: KillingField, q) -> np.ndarray:
    """[F1, F2] at q from the closed-form Jacobians."""
    q = as_point(q)
    return F2.jacobian(q.x, q.y) @ F1(q) - F1.jacobian(q.x, q.y) @ F2(q)


def bracket_table(spec: ProblemSpec) -> dict:
    """Expected brackets as coefficient triples over the basis (X1~, X2~, extra)."""
    if spec.curv_sign is CurvSign.ZERO:
        return {
            (0, 1): (1.0, 0.0, 0.0),
            (0, 2): (1.0, 0.0, 0.0),
            (1, 2): (2.0 * spec.g, -1.0, 1.0),
        }
    e = _extra_sign(spec)  # +1 for X-, -1 for X+
    lam, nu = spec.lam, spec.nu
    return {
        (0, 1): (1.0, 0.0, 0.0),
        (0, 2): (e * 2.0 * nu / lam, 2.0 / lam, 0.0),
        (1, 2): (2.0 * (lam * lam - nu * nu) / lam, -e * 2.0 * nu / lam, 1.0),
    }


def bracket_table_defect(spec: ProblemSpec, q) -> float:
    """Largest deviation between lie_bracket and the tabulated combination at q."""
    basis = killing_basis(spec)
    vals = [F(q) for F in basis]
    worst = 0.0
    for (i, j), coeffs in bracket_table(spec).items():
        expected = sum(c * v for c, v in zip(coeffs, vals))
        worst = max(worst, float(np.max(np.abs(lie_bracket(spec, basis[i], basis[j], q) - expected))))
    return worst


def probe_field() -> KillingField:
    """y^2 d/dx, which is not Killing for any structure; a negative control."""
    return KillingField(
        "Probe",
        lambda x, y: (y * y, 0.0),
        lambda x, y: np.array([[0.0, 2.0 * y], [0.0, 0.0]]),
        complete=False,
    )


def _frame(q):
    # left-invariant frame X1 = y d/dx, X2 = y d/dy as coordinate vectors
    return [np.array([q.y, 0.0]), np.array([0.0, q.y])]


def killing_residual(spec: ProblemSpec, F: KillingField, q, h: float = FD_STEP) -> float:
    """max over frame pairs (V, W) of |X g(V, W) - g([X, V], W) - g(V, [X, W])|.

    The derivative of F is taken by central differences, so the check does not
    trust F.jacobian. g(V, W) is constant for frame fields and its derivative
    along X is differenced too, for completeness.
    """
    q = as_point(q)
    x, y = q.x, q.y
    X = F(q)
    DX = np.column_stack([
        (np.asarray(F.evaluator(x + h, y)) - np.asarray(F.evaluator(x - h, y))) / (2 * h),
        (np.asarray(F.evaluator(x, y + h)) - np.asarray(F.evaluator(x, y - h))) / (2 * h),
    ])
    frame = _frame(q)
    # frame fields have Jacobians diag-free: d(y, 0) = [[0, 1], [0, 0]], d(0, y) = [[0, 0], [0, 1]]
    frame_jac = [np.array([[0.0, 1.0], [0.0, 0.0]]), np.array([[0.0, 0.0], [0.0, 1.0]])]
    brackets = [frame_jac[k] @ X - DX @ frame[k] for k in range(2)]
    # convert coordinate vectors back to frame coefficients
    to_frame = [b / y for b in brackets]
    basis = np.eye(2)
    worst = 0.0
    for i in range(2):
        for j in range(2):
            gvw = lorentz_bilinear(spec, basis[i], basis[j])
            xg = (gvw - gvw) / (2 * h)
            val = xg - lorentz_bilinear(spec, to_frame[i], basis[j]) - lorentz_bilinear(spec, basis[i], to_frame[j])
            worst = max(worst, abs(val))
    return worst


def flow_step(F: KillingField, q, h: float):
    """One RK4 step of the flow of F."""
    q = np.array(list(as_point(q)), dtype=float)
    f = lambda p: np.asarray(F.evaluator(p[0], p[1]), dtype=float)
    k1 = f(q)
    k2 = f(q + 0.5 * h * k1)
    k3 = f(q + 0.5 * h * k2)
    k4 = f(q + h * k3)
    out = q + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return float(out[0]), float(out[1])


# ---------------------------------------------------------------- flat embedding


class MinkowskiPoint(NamedTuple):
    xt: float  # timelike coordinate of -dxt^2 + dyt^2
    yt: float


def embed_flat(spec: ProblemSpec, q) -> MinkowskiPoint:
    """Isometry of a K = 0 structure onto a half-plane of the Minkowski plane."""
    if spec.curv_sign is not CurvSign.ZERO:
        raise WrongCurvature("embed_flat needs K = 0")
    q = as_point(q)
    gam, s1 = spec.gamma, spec.s1
    w = (q.x + spec.g * (q.y - 1.0)) / spec.f
    u = (q.y - 1.0) / (gam * q.y)
    return MinkowskiPoint(0.5 * (u - w / gam), 0.5 * s1 * (u + w / gam))


def half_plane_margin(spec: ProblemSpec, p: MinkowskiPoint) -> float:
    """Positive exactly when p lies in the image half-plane."""
    gam = spec.gamma
    return 1.0 / abs(gam) - math.copysign(1.0, gam) * (p.xt + spec.s1 * p.yt)


def in_half_plane(spec: ProblemSpec, p: MinkowskiPoint) -> bool:
    return half_plane_margin(spec, p) > 0


def minkowski_distance(p: MinkowskiPoint, q: MinkowskiPoint) -> float:
    """Time separation from p to q; 0 unless q - p is future timelike (dxt > |dyt|)."""
    dx, dy = q.xt - p.xt, q.yt - p.yt
    if dx > abs(dy):
        return math.sqrt((dx - dy) * (dx + dy))
    return 0.0
