"""Lorentzian distance on each stratum and spheres about Id; SVG pictures via the CLI.

Run: python3 demos/03_distance_and_spheres.py [output-dir]
"""
import math
import sys
from pathlib import Path

from afflorentz import distance_info, preset, sphere
from afflorentz.cli import run

s = preset("P1")
for q in [(1, math.sqrt(2)), (1, 2), (3, 2), (4, 2), (-1, 2)]:
    r = distance_info(s, (0, 1), q)
    print(f"P1  d(Id, {q!s:<22}) = {r.distance:<10.6g} {r.stratum.value:<14} maximizer: {r.maximizer_exists}")

print()
for name, radii in (("P1", [0.5, 2.0, math.pi]), ("P2", [0.5, 1.5]), ("P3", [0.5, 1.5])):
    for R in radii:
        arc = sphere(preset(name), R, n=50)
        print(f"{name}  S({R:.4g}): {arc.kind}, {len(arc.points)} samples, max |d - R| = {arc.max_residual:.1e}")

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
for name, R in (("P1", 1.0), ("P2", 1.0), ("P3", 1.0)):
    path = out / f"sphere_{name}.svg"
    run(["sphere", "--preset", name, "--radius", str(R), "--samples", "200", "--format", "svg", "--out", str(path)])
    print("wrote", path)
