"""Independent numerical checks: RK4 on the Hamiltonian system, polygonal path
maximization, and finite-difference Jacobians of the exponential map.

Nothing here calls the closed-form geodesic or distance formulas.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .causal import Stratum, classify
from .errors import BlowUp, NotInDomain, TargetUnreachable
from .group import as_point, lie_log
from .problem import CurvSign, ProblemSpec


@dataclass(frozen=True)
class IntegratedExtremal:
    t: np.ndarray
    psi: np.ndarray
    x: np.ndarray
    y: np.ndarray
    h1: np.ndarray
    h2: np.ndarray
    step: float

    @property
    def hamiltonian(self) -> np.ndarray:
        return (-self.h1**2 + self.h2**2) / 2


def _coeffs(spec):
    return spec.alpha, spec.beta, spec.gamma, spec.delta


def _field(state, alpha, beta, gamma, delta):
    # vertical part in (h1, h2), horizontal part in (x, y); control v = (-h1, h2)
    h1, h2, x, y = state
    v1, v2 = -h1, h2
    r = -delta * h1 + gamma * h2
    return np.array([
        -v2 * r,
        v1 * r,
        y * (alpha * v1 + beta * v2),
        y * (gamma * v1 + delta * v2),
    ])


def rk4_batch(coeffs, psi0, t1, steps: int, record_every: int = 0):
    """Fixed-step RK4 for many extremals at once.

    coeffs is (alpha, beta, gamma, delta), each scalar or array broadcasting
    against psi0 and t1. Returns the final state (h1, h2, x, y) and, when
    record_every > 0, the states at every record_every-th node.
    """
    psi0 = np.asarray(psi0, dtype=float)
    t1 = np.asarray(t1, dtype=float)
    shape = np.broadcast(psi0, t1, *coeffs).shape
    state = np.array([
        np.broadcast_to(-np.cosh(psi0), shape),
        np.broadcast_to(np.sinh(psi0), shape),
        np.zeros(shape),
        np.ones(shape),
    ])
    h = t1 / steps
    frames = [state.copy()] if record_every else None
    for n in range(1, steps + 1):
        k1 = _field(state, *coeffs)
        k2 = _field(state + 0.5 * h * k1, *coeffs)
        k3 = _field(state + 0.5 * h * k2, *coeffs)
        k4 = _field(state + h * k3, *coeffs)
        state = state + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        if record_every and n % record_every == 0:
            frames.append(state.copy())
    return state, frames


def integrate_extremal(spec: ProblemSpec, psi0: float, t1: float, steps: int = 10_000) -> IntegratedExtremal:
    if steps < 1000:
        raise ValueError("steps must be at least 1000")
    with np.errstate(over="ignore", invalid="ignore"):
        state, frames = rk4_batch(_coeffs(spec), psi0, t1, steps, record_every=1)
    traj = np.array(frames)
    h1, h2, x, y = traj.T
    psi = np.arcsinh(h2)
    if np.any(~np.isfinite(traj)) or np.any(y <= 0) or np.any(np.abs(psi) > 50):
        raise BlowUp(f"integration left the group before t1 = {t1!r}; t1 is too close to t_max")
    return IntegratedExtremal(np.linspace(0.0, t1, steps + 1), psi, x, y, h1, h2, t1 / steps)


# ---------------------------------------------------------------- path maximization


@dataclass(frozen=True)
class PathLowerBound:
    value: float
    vertices: np.ndarray  # polygon from Id to the target, shape (n + 1, 2)
    angles: np.ndarray  # control angle phi_k of each piece
    durations: np.ndarray  # arclength duration of each piece
    n_steps: int
    n_controls: int
    phi_max: float
    y_floor: float


def _linear_forms(spec):
    a, b, c, d = spec.matrix
    return np.array([c - a, d - b]), np.array([c + a, d + b])


def _log_mean_inv(y0, y1):
    # (ln y1 - ln y0) / (y1 - y0), the integral of 1/y along a straight segment
    r = y1 / y0
    z = np.log(r)
    small = np.abs(z) < 1e-8
    safe = np.where(small, 1.0, np.expm1(z))
    return np.where(small, (1 - z / 2 + z * z / 12) / y0, z / (y0 * safe))


def polygon_length(spec: ProblemSpec, vertices) -> float:
    """Lorentzian length of a polygon whose edges are future-directed causal.

    A straight edge in the (x, y) plane is a left-translated one-parameter
    subgroup, traversed with constant control; its length is
    sqrt(-l1(e) l2(e)) * (ln y1 - ln y0) / (y1 - y0) for edge vector e.
    """
    L1, L2 = _linear_forms(spec)
    V = np.asarray(vertices, dtype=float)
    e = np.diff(V, axis=0)
    p = -(e @ L1)
    q = e @ L2
    if np.any(p < -1e-12) or np.any(q < -1e-12):
        raise ValueError("polygon is not future-directed causal")
    return float(np.sum(np.sqrt(np.clip(p * q, 0, None)) * _log_mean_inv(V[:-1, 1], V[1:, 1])))


def _edge_controls(spec, vertices):
    L1, L2 = _linear_forms(spec)
    V = np.asarray(vertices)
    e = np.diff(V, axis=0)
    p, q = -(e @ L1), e @ L2
    with np.errstate(divide="ignore"):
        phi = 0.5 * np.log(q / p)
    dur = np.sqrt(np.clip(p * q, 0, None)) * _log_mean_inv(V[:-1, 1], V[1:, 1])
    return phi, dur


def _angle_direction(spec, phi):
    # direction in the plane of the frame velocity cosh(phi) Y1 + sinh(phi) Y2
    u1 = spec.alpha * np.cosh(phi) + spec.beta * np.sinh(phi)
    u2 = spec.gamma * np.cosh(phi) + spec.delta * np.sinh(phi)
    return np.stack([u1, u2], axis=-1)


def _two_piece_seed(spec, target, n_controls, phi_max, y_floor):
    """Exhaustive search over broken lines Id -> P -> target with both angles on the grid."""
    grid = np.linspace(-phi_max, phi_max, n_controls)
    D = _angle_direction(spec, grid)
    da = D[:, None, :]
    db = D[None, :, :]
    r = np.asarray(target) - np.array([0.0, 1.0])
    # solve s * da + u * db = r for every pair
    det = da[..., 0] * db[..., 1] - da[..., 1] * db[..., 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        s = (r[0] * db[..., 1] - r[1] * db[..., 0]) / det
        u = (da[..., 0] * r[1] - da[..., 1] * r[0]) / det
    ok = (np.abs(det) > 1e-12) & (s >= 0) & (u >= 0)
    best, best_v = -np.inf, None
    for i, j in zip(*np.nonzero(ok)):
        P = np.array([0.0, 1.0]) + s[i, j] * D[i]
        if P[1] < y_floor:
            continue
        V = np.array([[0.0, 1.0], P, target])
        val = polygon_length(spec, V)
        if val > best:
            best, best_v = val, V
    return best_v


def _floor_seed(spec, target, n_controls, phi_max, y_floor):
    """Best broken line Id -> P -> Q -> target with P, Q on the floor y = y_floor.

    The outer angles run over the grid; the middle piece is whatever joins P and Q
    and must itself be causal within the angle budget.
    """
    L1, L2 = _linear_forms(spec)
    k = math.exp(2 * phi_max)
    D = _angle_direction(spec, np.linspace(-phi_max, phi_max, n_controls))
    start = np.array([0.0, 1.0])
    down = D[D[:, 1] < 0]
    up = D[D[:, 1] > 0]
    if y_floor >= 1.0 or y_floor >= target[1] or len(down) == 0 or len(up) == 0:
        return None
    P = start + ((y_floor - 1.0) / down[:, 1])[:, None] * down
    Q = target - ((target[1] - y_floor) / up[:, 1])[:, None] * up
    e = Q[None, :, :] - P[:, None, :]
    p, q = -(e @ L1), e @ L2
    ok = (p >= 0) & (q >= 0) & (q <= k * p) & (p <= k * q)
    best, best_v = -np.inf, None
    for i, j in zip(*np.nonzero(ok)):
        V = np.array([start, P[i], Q[j], target])
        val = polygon_length(spec, V)
        if val > best:
            best, best_v = val, V
    return best_v


def _merge_short_edges(V, rel: float = 1e-6):
    # SLSQP likes to collapse surplus vertices onto a neighbour; such near-zero edges
    # carry no length but their rounding noise can make them acausal
    scale = np.max(np.abs(V[-1] - V[0])) + 1.0
    keep = [0]
    for i in range(1, len(V) - 1):
        if np.linalg.norm(V[i] - V[keep[-1]]) > rel * scale:
            keep.append(i)
    if len(keep) > 1 and np.linalg.norm(V[-1] - V[keep[-1]]) <= rel * scale:
        keep.pop()
    keep.append(len(V) - 1)
    return V[keep]


def _fit_vertices(V, n):
    # n + 1 vertices on the polygon V; exact subdivision keeps the path (and its length) unchanged
    m = len(V) - 1
    if m == n:
        return V
    if m < n and n % m != 0:
        # split the longest edges in half until the count matches
        V = list(V)
        while len(V) - 1 < n:
            seg = [np.linalg.norm(V[i + 1] - V[i]) for i in range(len(V) - 1)]
            i = int(np.argmax(seg))
            V.insert(i + 1, 0.5 * (V[i] + V[i + 1]))
        return np.array(V)
    if n % m == 0:
        r = n // m
        s = np.linspace(0.0, 1.0, r + 1)[:-1]
        pts = [V[i] + s_[None] * (V[i + 1] - V[i]) for i in range(m) for s_ in s[:, None]]
        return np.vstack([np.vstack(pts), V[-1]])
    return _resample(V, n)


def _resample(V, n):
    # place n + 1 vertices along the polygon V, evenly in arc length
    seg = np.linalg.norm(np.diff(V, axis=0), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    s = np.linspace(0.0, cum[-1], n + 1)
    return np.column_stack([np.interp(s, cum, V[:, 0]), np.interp(s, cum, V[:, 1])])


def brute_force_distance(
    spec: ProblemSpec,
    q1,
    n_steps: int = 16,
    n_controls: int = 64,
    phi_max: float = 6.0,
    y_floor: float = 1e-3,
    warm_start=None,
) -> PathLowerBound:
    """Lower bound on d(Id, q1) from the longest admissible polygon found.

    Each polygon edge is one piece of piecewise-constant arclength control with
    angle |phi_k| <= phi_max; vertices stay above y_floor. The endpoints are
    pinned, so every candidate hits q1 exactly and its length is a true lower
    bound. Seeds: the straight ray Id -> q1 and the best two-piece broken line
    over an angle grid of n_controls values; then all interior vertices are
    optimized jointly. A previous PathLowerBound (or vertex array) passed as
    warm_start is subdivided and used as one more seed, so a larger budget never
    returns a smaller bound than the run it was seeded from.
    """
    q1 = as_point(q1)
    cls = classify(spec, q1)
    if cls.tag not in (Stratum.INTERIOR, Stratum.REGION_E):
        raise NotInDomain(f"brute-force bound needs an Interior or RegionE target, got {cls.tag.value}")
    target = np.array([q1.x, q1.y])
    L1, L2 = _linear_forms(spec)
    k = math.exp(2 * phi_max)

    seeds = []
    u1, u2 = lie_log(q1)
    v1 = spec.matrix.a * u1 + spec.matrix.b * u2
    v2 = spec.matrix.c * u1 + spec.matrix.d * u2
    if v1 > abs(v2) and abs(math.atanh(v2 / v1)) <= phi_max:
        seeds.append(np.array([[0.0, 1.0], target]))
    two = _two_piece_seed(spec, target, n_controls, phi_max, y_floor)
    if two is not None:
        seeds.append(two)
    three = _floor_seed(spec, target, n_controls, phi_max, y_floor)
    if three is not None:
        seeds.append(three)
    if warm_start is not None:
        W = np.asarray(getattr(warm_start, "vertices", warm_start), dtype=float)
        if np.allclose(W[-1], target) and np.all(W[:, 1] >= y_floor):
            seeds.append(W)
    if not seeds:
        raise TargetUnreachable("no admissible polygon with the given angle budget reaches the target")

    n = n_steps
    start, end = np.array([0.0, 1.0]), target

    def unpack(z):
        return np.vstack([start, z.reshape(n - 1, 2), end])

    def objective(z):
        V = unpack(z)
        e = np.diff(V, axis=0)
        p = np.clip(-(e @ L1), 1e-300, None)
        q = np.clip(e @ L2, 1e-300, None)
        return -float(np.sum(np.sqrt(p * q) * _log_mean_inv(V[:-1, 1], V[1:, 1])))

    # edge cone constraints: e^{-2 phi_max} <= l2(e) / (-l1(e)) <= e^{2 phi_max}, all linear;
    # a small margin keeps SLSQP's slightly infeasible iterates causal
    margin = 1e-10

    def cone(z):
        e = np.diff(unpack(z), axis=0)
        p, q = -(e @ L1), e @ L2
        return np.concatenate([k * p - q, k * q - p, p, q]) - margin

    bounds = [(None, None), (y_floor, None)] * (n - 1)
    best = None
    for seed in seeds:
        z0 = _fit_vertices(seed, n)[1:-1].ravel()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            res = minimize(
                objective, z0, method="SLSQP", bounds=bounds,
                constraints=[{"type": "ineq", "fun": cone}],
                options={"maxiter": 500, "ftol": 1e-12},
            )
        for z in (res.x, z0):
            V = _fit_vertices(_merge_short_edges(unpack(z)), n)
            e = np.diff(V, axis=0)
            p, q = -(e @ L1), e @ L2
            # any causal polygon in the half-plane is a valid lower bound, whatever its angles
            if np.all(p >= 0) and np.all(q >= 0) and np.all(V[:, 1] > 0):
                val = polygon_length(spec, V)
                if best is None or val > best[0]:
                    best = (val, V)
    if best is None:
        raise TargetUnreachable("optimizer produced no admissible polygon")
    val, V = best
    phi, dur = _edge_controls(spec, V)
    return PathLowerBound(val, V, phi, dur, n_steps, n_controls, phi_max, y_floor)


# ---------------------------------------------------------------- Jacobian


def finite_diff_jacobian(spec: ProblemSpec, rho: float, tau: float, h: float = 1e-5) -> float:
    """Central-difference determinant of d(x, y)/d(tau, rho) for K < 0."""
    if spec.curv_sign is not CurvSign.NEG:
        raise ValueError("the chart (rho, tau) Jacobian is defined for K < 0")
    from .geodesics import exp_map

    def F(r, t):
        psi0 = math.asinh(math.tan(r)) - spec.theta
        q = exp_map(spec, psi0, (t - r) / spec.Delta)
        return np.array([q.x, q.y])

    d_tau = (F(rho, tau + h) - F(rho, tau - h)) / (2 * h)
    d_rho = (F(rho + h, tau) - F(rho - h, tau)) / (2 * h)
    return float(d_tau[0] * d_rho[1] - d_rho[0] * d_tau[1])
