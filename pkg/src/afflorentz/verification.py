"""Oracle suite: compare every closed form against its independent check.

Used by ``afflorentz verify``. Each check yields a row (name, residual,
tolerance); a row passes when residual <= tolerance.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .connection import metric_defect, sectional_curvature_numeric, torsion_defect
from .geodesics import closed_form, domain_bounds, exp_map
from .isometry import (
    bracket_table_defect,
    embed_flat,
    half_plane_margin,
    killing_basis,
    killing_residual,
    minkowski_distance,
    probe_field,
)
from .oracles import brute_force_distance, finite_diff_jacobian, rk4_batch
from .problem import CurvSign, ProblemSpec
from .synthesis import distance, exp_inverse, jacobian_exp, sphere

GOLDEN = {
    "P1": ((1.0, math.sqrt(2.0)), math.pi / 4),
    "P2": ((0.0, 2.0), math.log(2.0)),
    "P3": ((1.0, 2.0), 1.0 / math.sqrt(2.0)),
}


class CheckRow(NamedTuple):
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)


def _psi_samples(spec, n, rng):
    return rng.uniform(-2.0, 2.0, n)


def run_suite(spec: ProblemSpec, name: str = "", full: bool = False, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    rows = []

    rows.append(CheckRow("curvature", abs(sectional_curvature_numeric(spec) - spec.K), 1e-10))
    rows.append(CheckRow("torsion-free", float(np.max(np.abs(torsion_defect(spec)))), 1e-12))
    rows.append(CheckRow("metric-compatible", metric_defect(spec), 1e-12))

    psi0 = _psi_samples(spec, 10, rng)
    t1 = np.array([0.9 * min(domain_bounds(spec, p)[1], 10.0) for p in psi0])
    state, _ = rk4_batch((spec.alpha, spec.beta, spec.gamma, spec.delta), psi0, t1, 10_000)
    x, y, _ = closed_form(spec, psi0, t1)
    rows.append(CheckRow("geodesic vs RK4", float(np.max(np.hypot(state[2] - x, state[3] - y))), 1e-8))

    worst = 0.0
    for p in _psi_samples(spec, 50, rng):
        t = rng.uniform(0.05, 0.9) * min(domain_bounds(spec, p)[1], 10.0)
        back = exp_inverse(spec, exp_map(spec, p, t))
        worst = max(worst, abs(back.psi0 - p), abs(back.t1 - t))
    rows.append(CheckRow("exp_inverse round trip", worst, 1e-9))

    if name in GOLDEN:
        target, value = GOLDEN[name]
        rows.append(CheckRow(f"golden distance {name}", abs(distance(spec, target) - value), 1e-10))

    radii = [0.2, 0.5]
    radii.append(0.9 * math.pi / spec.Delta if spec.curv_sign is CurvSign.NEG else 1.5)
    rows.append(CheckRow("sphere residual", max(sphere(spec, R, 32).max_residual for R in radii), 1e-8))

    basis = killing_basis(spec)
    pts = [(rng.uniform(-3, 3), rng.uniform(0.2, 3)) for _ in range(20)]
    rows.append(CheckRow("Killing residual", max(killing_residual(spec, F, q) for F in basis for q in pts), 1e-6))
    rows.append(CheckRow("bracket table", max(bracket_table_defect(spec, q) for q in pts), 1e-10))
    # the probe must fail; report its margin below the threshold as the residual
    probe = max(killing_residual(spec, probe_field(), q) for q in pts)
    rows.append(CheckRow("probe field is not Killing", max(0.0, 1e-2 - probe), 0.0))

    if spec.curv_sign is CurvSign.NEG:
        worst = 0.0
        for _ in range(20):
            rho = rng.uniform(-1.2, 1.2)
            tau = rng.uniform(rho + 0.05, min(rho + 0.9 * math.pi, math.pi / 2 - 0.05))
            if tau <= rho:
                continue
            worst = max(worst, abs(abs(finite_diff_jacobian(spec, rho, tau)) - abs(jacobian_exp(spec, rho, tau))))
        rows.append(CheckRow("Jacobian vs finite differences", worst, 1e-5))

    if spec.curv_sign is CurvSign.ZERO:
        worst, margin = 0.0, math.inf
        for _ in range(200):
            q0 = (rng.uniform(-3, 3), rng.uniform(0.2, 3))
            q1 = (rng.uniform(-3, 3), rng.uniform(0.2, 3))
            p0, p1 = embed_flat(spec, q0), embed_flat(spec, q1)
            worst = max(worst, abs(minkowski_distance(p0, p1) - distance(spec, q0, q1)))
            margin = min(margin, half_plane_margin(spec, p0))
        rows.append(CheckRow("embedding isometry", worst, 1e-9))
        rows.append(CheckRow("embedding inside half-plane", 0.0 if margin > 0 else -margin, 0.0))

    if full:
        targets = [exp_map(spec, p, rng.uniform(0.3, 0.8) * min(domain_bounds(spec, p)[1], 3.0))
                   for p in rng.uniform(-1.0, 1.0, 3)]
        worst = 0.0
        for q in targets:
            exact = distance(spec, q)
            bound = brute_force_distance(spec, q).value
            if bound > exact + 1e-6:
                worst = math.inf
            worst = max(worst, exact - bound)
        rows.append(CheckRow("brute-force lower bound gap", worst, 0.02))
    return rows
