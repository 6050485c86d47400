"""Acceptance gate: the ten end-to-end criteria, each at its stated tolerance and
time budget. Every test prints one PASS/FAIL line, also when output is captured.

    pytest tests/test_acceptance.py -v
"""
import math
import time

import numpy as np
import pytest

from afflorentz.causal import Stratum, classify, is_globally_hyperbolic
from afflorentz.connection import sectional_curvature_numeric
from afflorentz.geodesics import closed_form, completeness_report, domain_bounds, exp_map, lightlike_curve
from afflorentz.isometry import (
    bracket_table_defect,
    embed_flat,
    in_half_plane,
    killing_basis,
    killing_residual,
    minkowski_distance,
    probe_field,
)
from afflorentz.oracles import brute_force_distance, rk4_batch
from afflorentz.problem import preset
from afflorentz.synthesis import distance, distance_info, exp_inverse, sphere

from conftest import random_point, random_spec

PRESETS = {name: preset(name) for name in ("P1", "P2", "P3")}


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


def test_criterion_01_curvature_golden(report):
    t0 = time.perf_counter()
    expected = {"P1": -1, "P2": 1, "P3": 0}
    exact = all(PRESETS[n].K == k for n, k in expected.items())
    numeric = max(abs(sectional_curvature_numeric(PRESETS[n]) - k) for n, k in expected.items())
    dt = time.perf_counter() - t0
    report(1, exact and numeric <= 1e-10 and dt < 1.0,
           f"K exact={exact}, numeric deviation {numeric:.1e} (tol 1e-10), {dt:.2f}s (< 1s)")


def test_criterion_02_closed_form_vs_ode(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    worst = {}
    for kind in ("neg", "pos", "zero"):
        specs = [random_spec(rng, kind) for _ in range(100)]
        coeffs = [np.repeat([getattr(s, c) for s in specs], 10) for c in ("alpha", "beta", "gamma", "delta")]
        psi0 = rng.uniform(-2.0, 2.0, 1000)
        t1 = np.array([0.9 * min(domain_bounds(specs[i // 10], p)[1], 10.0) for i, p in enumerate(psi0)])
        _, frames = rk4_batch(coeffs, psi0, t1, 10_000, record_every=500)
        frames = np.array(frames)  # (21, 4, 1000)
        frac = np.linspace(0.0, 1.0, frames.shape[0])
        err = 0.0
        for i, s in enumerate(specs):
            sl = slice(10 * i, 10 * i + 10)
            t = frac[:, None] * t1[None, sl]
            x, y, _ = closed_form(s, psi0[None, sl], t)
            err = max(err, float(np.max(np.hypot(frames[:, 2, sl] - x, frames[:, 3, sl] - y))))
        worst[kind] = err
    dt = time.perf_counter() - t0
    m = max(worst.values())
    report(2, m <= 1e-8 and dt < 60,
           "max endpoint error " + ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + f" (tol 1e-8), {dt:.1f}s (< 60s)")


def test_criterion_03_round_trip(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(3)
    worst = {}
    for kind in ("neg", "pos", "zero"):
        err = 0.0
        for i in range(1000):
            if i % 10 == 0:
                s = random_spec(rng, kind)
            psi0 = rng.uniform(-3.0, 3.0)
            t = rng.uniform(0.01, 0.9) * min(domain_bounds(s, psi0)[1], 10.0)
            back = exp_inverse(s, exp_map(s, psi0, t))
            err = max(err, abs(back.psi0 - psi0), abs(back.t1 - t))
        worst[kind] = err
    dt = time.perf_counter() - t0
    report(3, max(worst.values()) <= 1e-9 and dt < 10,
           "max (psi0, t) error " + ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + f" (tol 1e-9), {dt:.1f}s (< 10s)")


def test_criterion_04_golden_distances(report):
    d1 = distance(PRESETS["P1"], (1.0, math.sqrt(2.0)))
    d2 = distance(PRESETS["P2"], (0.0, 2.0))
    d3 = distance(PRESETS["P3"], (1.0, 2.0))
    flat = math.sqrt((1.0 - 0.0) * (2.0 - 1.0) / (1.0 * 2.0))
    errs = [abs(d1 - math.pi / 4), abs(d2 - math.log(2.0)), abs(d3 - 1 / math.sqrt(2.0)), abs(d3 - flat)]
    report(4, max(errs) <= 1e-10,
           f"|d - exact| = {errs[0]:.1e}, {errs[1]:.1e}, {errs[2]:.1e}; P3 vs flat identity {errs[3]:.1e} (tol 1e-10)")


def test_criterion_05_strata_distances(report):
    t0 = time.perf_counter()
    s = PRESETS["P1"]
    ts = np.linspace(0.05, 3.0, 25)
    light = [lightlike_curve(s, sgn, t) for sgn in (1, -1) for t in ts]
    light_ok = all(classify(s, q).tag is Stratum.LIGHT_BOUNDARY and distance(s, q) == 0 for q in light)
    frontier = [(1.0 + y, y) for y in np.linspace(0.05, 5.0, 25)]
    f_err = max(abs(distance(s, q) - math.pi) for q in frontier)
    f_ok = all(classify(s, q).tag is Stratum.FRONTIER_F for q in frontier)
    region_e = [(1.0 + y + dx, y) for y in (0.1, 1.0, 3.0) for dx in (0.1, 1.0, 5.0)]
    e_ok = all(distance_info(s, (0, 1), q).distance == math.inf for q in region_e)

    bounds, prev = [], None
    for k in range(4):
        prev = brute_force_distance(s, (4.0, 2.0), n_steps=8 * 2**k, phi_max=3.0 * 2**k,
                                    y_floor=1e-2 / 2**k, warm_start=prev)
        bounds.append(prev.value)
    increasing = all(b > a for a, b in zip(bounds, bounds[1:]))
    dt = time.perf_counter() - t0
    ok = light_ok and f_ok and f_err <= 1e-10 and e_ok and increasing and dt < 120
    report(5, ok,
           f"light cone d=0: {light_ok}; F d=pi err {f_err:.1e} (tol 1e-10); E inf: {e_ok}; "
           f"E bounds {', '.join(f'{b:.1f}' for b in bounds)} increasing={increasing}; {dt:.1f}s (< 120s)")


def _interior_targets(spec, rng, n):
    out = []
    while len(out) < n:
        psi0 = rng.uniform(-1.5, 1.5)
        t = rng.uniform(0.2, 0.8) * min(domain_bounds(spec, psi0)[1], 3.0)
        q = exp_map(spec, psi0, t)
        cls = classify(spec, q)
        # keep away from the light cone and from F, where the bound converges slowly
        margin = min(-cls.lambda1, cls.lambda2, cls.lambda3 if cls.lambda3 is not None else math.inf)
        if cls.tag is Stratum.INTERIOR and margin > 0.05:
            out.append(q)
    return out


@pytest.mark.slow
def test_criterion_06_brute_force_agreement(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    gaps, excess = {}, 0.0
    for name, s in PRESETS.items():
        g = 0.0
        for q in _interior_targets(s, rng, 20):
            exact = distance(s, q)
            bound = brute_force_distance(s, q).value
            g = max(g, exact - bound)
            excess = max(excess, bound - exact)
        gaps[name] = g
    dt = time.perf_counter() - t0
    ok = max(gaps.values()) <= 0.02 and excess <= 1e-6 and dt < 600
    report(6, ok,
           "max gap " + ", ".join(f"{k} {v:.1e}" for k, v in gaps.items())
           + f" (tol 0.02); max excess {excess:.1e} (tol 1e-6); {dt:.1f}s (< 600s)")


def test_criterion_07_sphere_round_trip(report):
    rng = np.random.default_rng(7)
    specs = list(PRESETS.values()) + [random_spec(rng, k) for k in ("neg", "pos", "zero") for _ in range(5)]
    worst, count = 0.0, 0
    for s in specs:
        radii = [0.2, 0.5, 0.9 * math.pi / s.Delta if s.K < 0 else 1.5]
        for R in radii:
            arc = sphere(s, R, n=64)
            res = arc.residuals()
            count += len(res)
            worst = max(worst, max(res))
    report(7, worst <= 1e-8 and count > 0, f"{count} sphere points, max |d - R| {worst:.1e} (tol 1e-8)")


def test_criterion_08_killing_suite(report):
    rng = np.random.default_rng(8)
    resid, brackets = 0.0, 0.0
    for s in PRESETS.values():
        basis = killing_basis(s)
        for _ in range(100):
            q = random_point(rng)
            resid = max(resid, max(killing_residual(s, F, q) for F in basis))
            brackets = max(brackets, bracket_table_defect(s, q))
    probe = max(killing_residual(PRESETS["P1"], probe_field(), random_point(rng)) for _ in range(20))
    report(8, resid <= 1e-6 and brackets <= 1e-10 and probe > 1e-2,
           f"Killing residual {resid:.1e} (tol 1e-6); bracket tables {brackets:.1e} (tol 1e-10); "
           f"probe residual {probe:.2f} (> 1e-2)")


def test_criterion_09_embedding_isometry(report):
    rng = np.random.default_rng(9)
    s = PRESETS["P3"]
    worst, pairs = 0.0, 0
    inside = True
    while pairs < 1000:
        p, q = random_point(rng), random_point(rng)
        if classify(s, q, p).tag is not Stratum.INTERIOR:
            continue
        ip, iq = embed_flat(s, p), embed_flat(s, q)
        worst = max(worst, abs(minkowski_distance(ip, iq) - distance(s, p, q)))
        inside &= in_half_plane(s, ip) and in_half_plane(s, iq)
        pairs += 1
    mismatches = 0
    for _ in range(1000):
        p, q = random_point(rng), random_point(rng)
        ip, iq = embed_flat(s, p), embed_flat(s, q)
        mismatches += (distance(s, p, q) != 0) != (minkowski_distance(ip, iq) != 0)
        inside &= in_half_plane(s, ip) and in_half_plane(s, iq)
    report(9, worst <= 1e-9 and mismatches == 0 and inside,
           f"max |d~ - d| {worst:.1e} on {pairs} interior pairs (tol 1e-9); zero-set mismatches {mismatches}/1000; "
           f"all images in half-plane: {inside}")


def test_criterion_10_completeness_and_hyperbolicity(report):
    hyp = {n: is_globally_hyperbolic(s) for n, s in PRESETS.items()}
    comp = {n: tuple(completeness_report(s)) for n, s in PRESETS.items()}
    ok = hyp == {"P1": False, "P2": True, "P3": True} and comp == {
        "P1": (False, False), "P2": (False, True), "P3": (False, True)}
    report(10, ok, f"globally hyperbolic {hyp}; (future, past) complete {comp}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
