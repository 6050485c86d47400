"""Closed-form extremals: timelike geodesics by initial angle psi0, lightlike rays.

An arclength-parametrized normal extremal from Id solves

    psi' = delta cosh(psi) + gamma sinh(psi),
    q'   = cosh(psi) Y1 + sinh(psi) Y2,     Y1 = alpha X1 + gamma X2, Y2 = beta X1 + delta X2,

with psi(0) = psi0 and q(0) = Id. Below, mu = psi + theta is the shifted angle
and sigma the rescaled time; the three curvature signs give trigonometric,
hyperbolic and rational solutions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import DomainExceeded, UnresolvedCase
from .group import GroupPoint, lie_exp
from .problem import CurvSign, ProblemSpec

# within K > 0, |psi0 + theta| below this is the straight-line case
EPS_STRAIGHT = 1e-12


class ChartParams(NamedTuple):
    rho: float
    tau: float
    s2: int = 0


class CompletenessReport(NamedTuple):
    future_complete: bool
    past_complete: bool


def domain_bounds(spec: ProblemSpec, psi0: float):
    """Maximal open interval (t_min, t_max) on which the extremal with angle psi0 lives."""
    sign = spec.curv_sign
    if sign is CurvSign.NEG:
        rho = math.atan(math.sinh(psi0 + spec.theta))
        return -(math.pi / 2 + rho) / spec.Delta, (math.pi / 2 - rho) / spec.Delta
    if sign is CurvSign.POS:
        mu0 = psi0 + spec.theta
        if abs(mu0) <= EPS_STRAIGHT:
            return -math.inf, math.inf
        rho = math.asinh(1.0 / math.sinh(abs(mu0)))
        if spec.gamma > 0:
            return -math.inf, rho / spec.Delta
        return -rho / spec.Delta, math.inf
    rho = math.exp(-spec.s1 * psi0)
    if spec.gamma > 0:
        return -math.inf, rho / spec.gamma
    return rho / spec.gamma, math.inf


def chart(spec: ProblemSpec, psi0: float, t: float) -> ChartParams:
    """Chart coordinates (rho, tau) of the point reached at time t; s2 = sign(psi0 + theta) for K > 0."""
    sign = spec.curv_sign
    if sign is CurvSign.NEG:
        rho = math.atan(math.sinh(psi0 + spec.theta))
        return ChartParams(rho, rho + spec.Delta * t)
    if sign is CurvSign.POS:
        mu0 = psi0 + spec.theta
        if abs(mu0) <= EPS_STRAIGHT:
            return ChartParams(math.inf, math.inf, 0)
        rho = math.asinh(1.0 / math.sinh(abs(mu0)))
        return ChartParams(rho, rho - spec.s1 * spec.Delta * t, 1 if mu0 > 0 else -1)
    rho = math.exp(-spec.s1 * psi0)
    return ChartParams(rho, rho - spec.gamma * t)


def closed_form(spec: ProblemSpec, psi0, t):
    """(x, y, psi) at time t; numpy-broadcasting, no domain checks."""
    psi0 = np.asarray(psi0, dtype=float)
    t = np.asarray(t, dtype=float)
    sign = spec.curv_sign
    if sign is CurvSign.NEG:
        rho = np.arctan(np.sinh(psi0 + spec.theta))
        sigma = spec.Delta * t
        tau = rho + sigma
        y = np.cos(rho) / np.cos(tau)
        x = spec.lam * np.sin(sigma) / np.cos(tau) + spec.nu * (y - 1.0)
        psi = np.arcsinh(np.tan(tau)) - spec.theta
        return x, y, psi
    if sign is CurvSign.POS:
        mu0 = psi0 + spec.theta
        sigma = spec.s1 * spec.Delta * t
        straight = np.abs(mu0) <= EPS_STRAIGHT
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            s2 = np.sign(mu0)
            rho = np.arcsinh(1.0 / np.sinh(np.abs(mu0)))
            tau = rho - sigma
            y = np.where(straight, np.exp(sigma), np.sinh(rho) / np.sinh(tau))
            x = np.where(
                straight,
                -spec.nu * np.expm1(sigma),
                spec.nu * (1.0 - y) - s2 * spec.lam * np.sinh(sigma) / np.sinh(tau),
            )
            psi = np.where(straight, -spec.theta, np.arcsinh(s2 / np.sinh(tau)) - spec.theta)
        return x, y, psi
    s1 = spec.s1
    rho = np.exp(-s1 * psi0)
    tau = rho - spec.gamma * t
    y = rho / tau
    x = rho * (spec.f * (tau - rho) + spec.g * (1.0 / rho - 1.0 / tau))
    psi = -s1 * np.log(tau)
    return x, y, psi


def _check_domain(spec, psi0, t):
    lo, hi = domain_bounds(spec, psi0)
    if not (lo < t < hi):
        raise DomainExceeded(f"t = {t!r} outside the maximal domain ({lo!r}, {hi!r}) for psi0 = {psi0!r}")


def exp_map(spec: ProblemSpec, psi0: float, t: float) -> GroupPoint:
    """Endpoint at time t of the arclength geodesic leaving Id with initial angle psi0."""
    if t == 0:
        return GroupPoint(0.0, 1.0)
    _check_domain(spec, psi0, t)
    x, y, _ = closed_form(spec, psi0, t)
    return GroupPoint(float(x), float(y))


def lightlike_curve(spec: ProblemSpec, sign: int, t: float) -> GroupPoint:
    """Lightlike one-parameter subgroup exp(t (Y1 + sign * Y2))."""
    s = 1 if sign > 0 else -1
    return lie_exp((spec.alpha + s * spec.beta, spec.gamma + s * spec.delta), t)


@dataclass(frozen=True)
class Geodesic:
    spec: ProblemSpec
    causal: str  # "Timelike" or "Lightlike"
    psi0: Optional[float] = None
    sign: Optional[int] = None
    t_min: float = -math.inf
    t_max: float = math.inf

    @classmethod
    def timelike(cls, spec: ProblemSpec, psi0: float) -> "Geodesic":
        lo, hi = domain_bounds(spec, psi0)
        return cls(spec, "Timelike", psi0=float(psi0), t_min=lo, t_max=hi)

    @classmethod
    def lightlike(cls, spec: ProblemSpec, sign: int) -> "Geodesic":
        return cls(spec, "Lightlike", sign=1 if sign > 0 else -1)

    def point(self, t: float) -> GroupPoint:
        if not (self.t_min < t < self.t_max):
            raise DomainExceeded(f"t = {t!r} outside ({self.t_min!r}, {self.t_max!r})")
        if self.causal == "Lightlike":
            return lightlike_curve(self.spec, self.sign, t)
        x, y, _ = closed_form(self.spec, self.psi0, t)
        return GroupPoint(float(x), float(y))

    __call__ = point

    def sample(self, t):
        """Arrays (x, y, psi) at the given times (timelike only), clipped to nothing."""
        t = np.asarray(t, dtype=float)
        if np.any((t <= self.t_min) | (t >= self.t_max)):
            raise DomainExceeded("sample times leave the maximal domain")
        return closed_form(self.spec, self.psi0, t)


def psi_of_t(geo: Geodesic, t: float) -> float:
    if geo.causal != "Timelike":
        raise ValueError("psi is defined only along timelike extremals")
    if not (geo.t_min < t < geo.t_max):
        raise DomainExceeded(f"t = {t!r} outside ({geo.t_min!r}, {geo.t_max!r})")
    if t == 0:
        return geo.psi0
    return float(closed_form(geo.spec, geo.psi0, t)[2])


def completeness_report(spec: ProblemSpec) -> CompletenessReport:
    if spec.curv_sign is CurvSign.NEG:
        return CompletenessReport(False, False)
    if spec.gamma > 0:
        return CompletenessReport(False, True)
    if spec.gamma < 0:
        return CompletenessReport(True, False)
    raise UnresolvedCase("K >= 0 with gamma = 0 is not covered")
