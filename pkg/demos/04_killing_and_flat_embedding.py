"""Killing fields and the isometric picture of a flat structure inside Minkowski space.

Run: python3 demos/04_killing_and_flat_embedding.py
"""
import numpy as np

from afflorentz import distance, embed_flat, killing_basis, killing_residual, minkowski_distance, preset
from afflorentz.isometry import bracket_table_defect, half_plane_margin, probe_field

rng = np.random.default_rng(0)
for name in ("P1", "P2", "P3"):
    s = preset(name)
    pts = [(rng.uniform(-2, 2), rng.uniform(0.3, 2)) for _ in range(50)]
    res = {F.tag: max(killing_residual(s, F, q) for q in pts) for F in killing_basis(s)}
    probe = max(killing_residual(s, probe_field(), q) for q in pts)
    table = max(bracket_table_defect(s, q) for q in pts)
    print(f"{name}: residuals {', '.join(f'{k} {v:.0e}' for k, v in res.items())}; "
          f"bracket table {table:.0e}; y^2 d/dx gives {probe:.2f}")

# P3 is flat: its image is a half-plane of the Minkowski plane, distances intact.
s = preset("P3")
for p, q in [((0, 1), (1, 2)), ((0.5, 0.5), (3, 1)), ((0, 1), (-1, 2))]:
    ip, iq = embed_flat(s, p), embed_flat(s, q)
    print(f"P3  {p} -> ({ip.xt:+.3f}, {ip.yt:+.3f}) margin {half_plane_margin(s, ip):.3f};  "
          f"d = {distance(s, p, q):.6f}, Minkowski d = {minkowski_distance(ip, iq):.6f}")
