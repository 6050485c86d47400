"""Inverse exponential map, Lorentzian distance and spheres centred at Id.

Every distance query goes through :func:`causal.classify`; the closed-form
inverse is only evaluated on the Interior stratum, where it is a diffeomorphism
onto its chart.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from .causal import Stratum, classify, point_B
from .errors import EmptySphere, NotInDomain
from .group import IDENTITY, GroupPoint, as_point, group_inv, group_mul
from .problem import CurvSign, ProblemSpec

EPS_CLAMP = 1e-12


class InverseResult(NamedTuple):
    psi0: float
    t1: float


def _w_coordinate(spec: ProblemSpec, x, y):
    # the affine coordinate in which geodesics and spheres become plain hyperbolas
    if spec.curv_sign is CurvSign.NEG:
        return (x - spec.nu * (y - 1.0)) / spec.lam
    if spec.curv_sign is CurvSign.POS:
        return (x + spec.nu * (y - 1.0)) / spec.lam
    return (x + spec.g * (y - 1.0)) / spec.f


def _nonneg(v: float) -> float:
    # tiny negative products appear at the edge of the chart from rounding
    if v < 0 and v > -EPS_CLAMP:
        return 0.0
    return v


def _inverse_unchecked(spec: ProblemSpec, x: float, y: float) -> InverseResult:
    w = _w_coordinate(spec, x, y)
    sign = spec.curv_sign
    if sign is CurvSign.NEG:
        # 2 w cos(rho) = P; tan(rho), tan(tau) then follow from the chart identities
        P = math.sqrt(_nonneg(((w + 1) ** 2 - y * y) * (y * y - (w - 1) ** 2)))
        rho = math.atan2(y * y - w * w - 1, P)
        tau = math.atan2(y * y + w * w - 1, P)
        psi0 = math.asinh((y * y - w * w - 1) / P) - spec.theta
        return InverseResult(psi0, (tau - rho) / spec.Delta)
    if sign is CurvSign.POS:
        aw = abs(w)
        prod = _nonneg((y * y - (1 + aw) ** 2) * (y * y - (1 - aw) ** 2))
        # r = 1/sinh(rho) = sinh|psi0 + theta|, zero on the straight line w = 0
        r = 2 * aw / math.sqrt(prod)
        s2 = -spec.s1 * ((w > 0) - (w < 0))
        mu0 = s2 * math.asinh(r)
        rho_minus_tau = math.log(y) + math.log((1 + math.sqrt(1 + r * r)) / (1 + math.sqrt(1 + (y * r) ** 2)))
        return InverseResult(mu0 - spec.theta, spec.s1 * rho_minus_tau / spec.Delta)
    rho = math.sqrt(_nonneg(w * y / (1 - y)))
    return InverseResult(-spec.s1 * math.log(rho), rho * (y - 1) / (y * spec.gamma))


def exp_inverse(spec: ProblemSpec, q1) -> InverseResult:
    """(psi0, t1) with exp_map(spec, psi0, t1) == q1, for q1 in the Interior stratum."""
    q1 = as_point(q1)
    cls = classify(spec, q1)
    if cls.tag is not Stratum.INTERIOR:
        raise NotInDomain(f"exp_inverse needs an Interior point, got {cls.tag.value}")
    return _inverse_unchecked(spec, q1.x, q1.y)


@dataclass(frozen=True)
class DistanceResult:
    distance: float  # math.inf in region E
    stratum: Stratum
    maximizer_exists: bool
    psi0: Optional[float] = None
    t1: Optional[float] = None

    def as_dict(self):
        return {
            "distance": self.distance,
            "stratum": self.stratum.value,
            "maximizerExists": self.maximizer_exists,
            "psi0": self.psi0,
            "t1": self.t1,
        }


def distance_info(spec: ProblemSpec, q0, q1) -> DistanceResult:
    qbar = group_mul(group_inv(q0), q1)
    cls = classify(spec, qbar)
    tag = cls.tag
    if tag is Stratum.OUTSIDE:
        return DistanceResult(0.0, tag, False)
    if tag is Stratum.LIGHT_BOUNDARY:
        return DistanceResult(0.0, tag, True)
    if tag is Stratum.INTERIOR:
        psi0, t1 = _inverse_unchecked(spec, qbar.x, qbar.y)
        return DistanceResult(t1, tag, True, psi0, t1)
    if tag is Stratum.FRONTIER_F:
        return DistanceResult(math.pi / spec.Delta, tag, False)
    return DistanceResult(math.inf, tag, False)


def distance(spec: ProblemSpec, q0, q1=None) -> float:
    """Lorentzian distance d(q0, q1); with one point, d(Id, q0)."""
    if q1 is None:
        q0, q1 = IDENTITY, q0
    return distance_info(spec, q0, q1).distance


def jacobian_exp(spec: ProblemSpec, rho: float, tau: float) -> float:
    """Closed-form determinant d(x, y)/d(tau, rho) of the K < 0 exponential map."""
    if spec.curv_sign is not CurvSign.NEG:
        raise ValueError("the chart (rho, tau) is defined for K < 0")
    return -spec.lam * math.cos(rho) * math.sin(rho - tau) / math.cos(tau) ** 2


# ---------------------------------------------------------------- spheres


@dataclass(frozen=True)
class SphereArc:
    spec: ProblemSpec
    R: float
    kind: str  # "hyperbola" or "ray" (the frontier F when R = pi / Delta)
    sigma: float
    u_min: float
    u_max: float
    points: list = field(default_factory=list)
    max_residual: float = 0.0

    def point(self, u: float) -> GroupPoint:
        return GroupPoint(*_sphere_xy(self.spec, self.kind, self.sigma, u))

    def residuals(self):
        return [abs(distance(self.spec, p) - self.R) for p in self.points]


def _sphere_xy(spec: ProblemSpec, kind: str, sigma: float, u: float):
    sign = spec.curv_sign
    if kind == "ray":
        bx, _ = point_B(spec)
        a, b, c, d = spec.matrix
        return bx + u * (d - b), u * (a - c)
    if sign is CurvSign.NEG:
        # w^2 - (y - cos s)^2 = sin^2 s
        w = math.sin(sigma) * math.cosh(u)
        y = math.cos(sigma) + math.sin(sigma) * math.sinh(u)
        return spec.lam * w + spec.nu * (y - 1.0), y
    if sign is CurvSign.POS:
        # (y - cosh s)^2 - w^2 = sinh^2 s, branch y > 1 when gamma > 0
        w = math.sinh(sigma) * math.sinh(u)
        y = math.cosh(sigma) + spec.s1 * math.sinh(sigma) * math.cosh(u)
        return spec.lam * w - spec.nu * (y - 1.0), y
    # (w + s^2) y = w
    y = 1.0 + math.exp(u) if spec.gamma > 0 else 1.0 / (1.0 + math.exp(u))
    w = sigma * sigma * y / (1.0 - y)
    return spec.f * w - spec.g * (y - 1.0), y


def _sphere_window(spec: ProblemSpec, kind: str, sigma: float):
    if kind == "ray":
        return 0.0, math.inf
    if spec.curv_sign is CurvSign.NEG:
        return -math.asinh(1.0 / math.tan(sigma)), math.inf
    if spec.curv_sign is CurvSign.POS and spec.s1 < 0:
        umax = math.acosh(1.0 / math.tanh(sigma))
        return -umax, umax
    return -math.inf, math.inf


def sphere(spec: ProblemSpec, R: float, n: int = 64, span: float = 3.0) -> SphereArc:
    """Sample n points of the sphere S(R) = {q : d(Id, q) = R}.

    The parameter u runs over the open window (max(u_min, -span), min(u_max, span))
    of the hyperbola branch; only Interior points are kept.
    """
    if not R > 0:
        raise ValueError("radius must be positive")
    sign = spec.curv_sign
    kind = "hyperbola"
    if sign is CurvSign.NEG:
        limit = math.pi / spec.Delta
        if abs(R - limit) <= 1e-12 * limit:
            kind = "ray"
        elif R > limit:
            raise EmptySphere(f"S(R) is empty for R = {R!r} > pi/Delta = {limit!r}")
        sigma = spec.Delta * R
    elif sign is CurvSign.POS:
        sigma = spec.Delta * R
    else:
        sigma = spec.gamma * R
    u_min, u_max = _sphere_window(spec, kind, sigma)
    lo, hi = max(u_min, -span), min(u_max, span)
    if kind == "ray":
        lo, hi = 0.0, span
    pts, worst = [], 0.0
    for u in np.linspace(lo, hi, n + 2)[1:-1]:
        x, y = _sphere_xy(spec, kind, sigma, float(u))
        if not y > 0:
            continue
        q = GroupPoint(x, y)
        expected = Stratum.FRONTIER_F if kind == "ray" else Stratum.INTERIOR
        if classify(spec, q).tag is not expected:
            continue
        pts.append(q)
        worst = max(worst, abs(distance(spec, q) - R))
    return SphereArc(spec, R, kind, sigma, u_min, u_max, pts, worst)
