"""Lower bounds on the distance from explicit admissible polygons.

The polygons never use the closed forms, so agreement below is independent
evidence; beyond the frontier ray of P1 the bounds grow without limit.

Run: python3 demos/05_path_search_lower_bounds.py
"""
import math

from afflorentz import brute_force_distance, distance, preset

for name, q in (("P1", (1, math.sqrt(2))), ("P2", (0, 2)), ("P3", (1, 2)), ("P1", (0.5, 1.2))):
    s = preset(name)
    b = brute_force_distance(s, q)
    print(f"{name} target {q}: polygon bound {b.value:.6f}, closed form {distance(s, q):.6f}")

s, prev = preset("P1"), None
print("\nP1 target (4, 2), doubling the search budget:")
for k in range(4):
    prev = brute_force_distance(s, (4, 2), n_steps=8 * 2**k, phi_max=3.0 * 2**k, y_floor=1e-2 / 2**k, warm_start=prev)
    print(f"   n_steps={prev.n_steps:<3} phi_max={prev.phi_max:<5} y_floor={prev.y_floor:<9.3g} bound {prev.value:9.2f}")
