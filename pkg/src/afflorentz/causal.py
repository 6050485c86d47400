"""Causal future/past and the stratification of J+ used by the distance function."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import AbsoluteIntersectionUndefined
from .group import IDENTITY, as_point, group_inv, group_mul
from .problem import CurvSign, ProblemSpec, lambda1, lambda2

EPS_STRATUM = 1e-9


class Stratum(str, enum.Enum):
    OUTSIDE = "Outside"
    LIGHT_BOUNDARY = "LightBoundary"
    INTERIOR = "Interior"
    FRONTIER_F = "FrontierF"
    REGION_E = "RegionE"


@dataclass(frozen=True)
class CausalClass:
    tag: Stratum
    lambda1: float
    lambda2: float
    lambda3: Optional[float] = None
    # which light ray for LightBoundary: "lambda1", "lambda2" or "both"
    branch: Optional[str] = None


def _tolerance(l1: float, l2: float) -> float:
    return EPS_STRATUM * (1.0 + abs(l1) + abs(l2))


def relative_lambdas(spec: ProblemSpec, q0, q1):
    """(lambda1, lambda2) of q0^{-1} q1, i.e. the wedge coordinates of q1 seen from q0."""
    qbar = group_mul(group_inv(q0), q1)
    return lambda1(spec, qbar), lambda2(spec, qbar)


def in_causal_future(spec: ProblemSpec, q0, q1) -> bool:
    l1, l2 = relative_lambdas(spec, q0, q1)
    tol = _tolerance(l1, l2)
    return l1 <= tol and l2 >= -tol


def in_causal_past(spec: ProblemSpec, q0, q1) -> bool:
    l1, l2 = relative_lambdas(spec, q0, q1)
    tol = _tolerance(l1, l2)
    return l1 >= -tol and l2 <= tol


def point_B(spec: ProblemSpec):
    """Intersection of the light line lambda2 = 0 with the absolute y = 0."""
    a, b, c, d = spec.matrix
    if abs(c + a) < 1e-12:
        raise AbsoluteIntersectionUndefined("c + a = 0: the line lambda2 = 0 is parallel to y = 0")
    return ((d + b) / (c + a), 0.0)


def lambda1_at_B(spec: ProblemSpec) -> float:
    # lambda1 is affine, so it extends to the closed half-plane
    a, b, c, d = spec.matrix
    bx, by = point_B(spec)
    return (c - a) * bx + (d - b) * (by - 1.0)


def lambda3(spec: ProblemSpec, q) -> float:
    return lambda1(spec, q) - lambda1_at_B(spec)


def classify(spec: ProblemSpec, q1, q0=IDENTITY) -> CausalClass:
    """Stratum of q1 in J+(q0): outside, on the light cone, in the interior, or on F / in E (K < 0)."""
    q1 = as_point(q1)
    qbar = group_mul(group_inv(q0), q1)
    l1, l2 = lambda1(spec, qbar), lambda2(spec, qbar)
    tol = _tolerance(l1, l2)
    l3 = lambda3(spec, qbar) if spec.curv_sign is CurvSign.NEG else None

    if l1 > tol or l2 < -tol:
        return CausalClass(Stratum.OUTSIDE, l1, l2, l3)
    on1, on2 = abs(l1) <= tol, abs(l2) <= tol
    if on1 or on2:
        branch = "both" if on1 and on2 else ("lambda1" if on1 else "lambda2")
        return CausalClass(Stratum.LIGHT_BOUNDARY, l1, l2, l3, branch)
    if l3 is None or l3 > tol:
        return CausalClass(Stratum.INTERIOR, l1, l2, l3)
    if l3 >= -tol:
        return CausalClass(Stratum.FRONTIER_F, l1, l2, l3)
    return CausalClass(Stratum.REGION_E, l1, l2, l3)


def is_globally_hyperbolic(spec: ProblemSpec) -> bool:
    return spec.curv_sign is not CurvSign.NEG
