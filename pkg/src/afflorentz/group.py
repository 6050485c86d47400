"""The group Aff+(R) of proper affine maps a -> y*a + x of the real line.

A point (x, y), y > 0, is the map a -> y*a + x. The product is composition,
so (x2, y2) . (x1, y1) = (x2 + y2*x1, y2*y1) and the identity is (0, 1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class GroupPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0) or not math.isfinite(self.x) or not math.isfinite(self.y):
            raise ValueError(f"not a point of Aff+(R): ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"GroupPoint({self.x!r}, {self.y!r})"


class TangentVector(NamedTuple):
    """Coefficients (u1, u2) in the left-invariant frame X1 = y d/dx, X2 = y d/dy."""

    u1: float
    u2: float


IDENTITY = GroupPoint(0.0, 1.0)


def as_point(q) -> GroupPoint:
    if isinstance(q, GroupPoint):
        return q
    x, y = q
    return GroupPoint(float(x), float(y))


def group_mul(p, q) -> GroupPoint:
    p, q = as_point(p), as_point(q)
    return GroupPoint(p.x + p.y * q.x, p.y * q.y)


def group_inv(p) -> GroupPoint:
    p = as_point(p)
    return GroupPoint(-p.x / p.y, 1.0 / p.y)


def left_translate(g, q) -> GroupPoint:
    return group_mul(g, q)


def _expm1_ratio(z: float) -> float:
    # (e^z - 1)/z, continuous through z = 0
    if z == 0.0:
        return 1.0
    return math.expm1(z) / z


def lie_exp(v, t: float = 1.0) -> GroupPoint:
    """Point at time t on the one-parameter subgroup with velocity u1*X1 + u2*X2."""
    u1, u2 = v
    z = u2 * t
    return GroupPoint(u1 * t * _expm1_ratio(z), math.exp(z))


def lie_log(q) -> TangentVector:
    """Inverse of lie_exp at t = 1 (every point lies on exactly one subgroup)."""
    q = as_point(q)
    z = math.log(q.y)
    if z == 0.0:
        return TangentVector(q.x, 0.0)
    return TangentVector(q.x / _expm1_ratio(z), z)
