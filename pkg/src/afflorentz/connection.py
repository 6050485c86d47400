"""Levi-Civita connection in the left-invariant frame and a numerical curvature check.

Every coefficient is constant because the metric is left-invariant, so the
curvature computation below is exact algebra on 2-vectors of frame coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .problem import ProblemSpec


@dataclass(frozen=True)
class ConnectionCoefficients:
    # D_{X_i} X_j = mu[i, j] X_1 + nu[i, j] X_2, zero-based indices
    mu: np.ndarray
    nu: np.ndarray

    def covariant(self, i: int, j: int) -> np.ndarray:
        return np.array([self.mu[i, j], self.nu[i, j]])


def levi_civita(spec: ProblemSpec) -> ConnectionCoefficients:
    g11, g12, g22 = spec.gram
    s = -1.0 / spec.det**2
    mu = s * np.array([[-g12 * g11, -g22 * g11], [-g12 * g12, -g22 * g12]])
    nu = s * np.array([[g11 * g11, g12 * g11], [g11 * g12, g12 * g12]])
    return ConnectionCoefficients(mu, nu)


def gram_matrix(spec: ProblemSpec) -> np.ndarray:
    g11, g12, g22 = spec.gram
    return np.array([[g11, g12], [g12, g22]])


def _cov(conn: ConnectionCoefficients, v, w) -> np.ndarray:
    # D_V W for constant-coefficient fields V, W
    out = np.zeros(2)
    for i in range(2):
        for j in range(2):
            out += v[i] * w[j] * conn.covariant(i, j)
    return out


def _bracket(v, w) -> np.ndarray:
    # [X1, X2] = -X1 extended bilinearly
    return np.array([-(v[0] * w[1] - v[1] * w[0]), 0.0])


def curvature_tensor(conn: ConnectionCoefficients, v, w, z) -> np.ndarray:
    """R_{VW} Z = D_{[V,W]} Z - D_V D_W Z + D_W D_V Z."""
    return _cov(conn, _bracket(v, w), z) - _cov(conn, v, _cov(conn, w, z)) + _cov(conn, w, _cov(conn, v, z))


def sectional_curvature_numeric(spec: ProblemSpec) -> float:
    conn = levi_civita(spec)
    G = gram_matrix(spec)
    e1, e2 = np.eye(2)
    R = curvature_tensor(conn, e1, e2, e1)
    Q = G[0, 0] * G[1, 1] - G[0, 1] ** 2
    return float(R @ G @ e2 / Q)


def torsion_defect(spec: ProblemSpec) -> np.ndarray:
    """D_{X2}X1 - D_{X1}X2 - [X2, X1]; zero for a torsion-free connection."""
    conn = levi_civita(spec)
    return conn.covariant(1, 0) - conn.covariant(0, 1) - np.array([1.0, 0.0])


def metric_defect(spec: ProblemSpec) -> float:
    conn = levi_civita(spec)
    G = gram_matrix(spec)
    worst = 0.0
    for i in range(2):
        for j in range(2):
            for k in range(2):
                val = conn.covariant(i, j) @ G[:, k] + conn.covariant(i, k) @ G[:, j]
                worst = max(worst, abs(val))
    return worst
