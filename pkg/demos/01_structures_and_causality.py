"""Three model structures and their causal future of the identity.

Run: python3 demos/01_structures_and_causality.py
"""
import math

from afflorentz import Stratum, classify, is_globally_hyperbolic, preset
from afflorentz.causal import point_B
from afflorentz.connection import sectional_curvature_numeric

for name in ("P1", "P2", "P3"):
    s = preset(name)
    print(f"{name}: A = {tuple(s.matrix)}, K = {s.K:+g} ({s.curv_sign.value}), "
          f"numeric K = {sectional_curvature_numeric(s):+.3g}, globally hyperbolic: {is_globally_hyperbolic(s)}")

# For P1 the future of Id is the wedge x >= |y - 1|. Inside it the ray x = y + 1
# from B = (1, 0) splits off a region from which no geodesic ever comes back.
s = preset("P1")
print("\nP1, B =", point_B(s))
for q in [(1, math.sqrt(2)), (1, 2), (3, 2), (4, 2), (-1, 2)]:
    c = classify(s, q)
    note = {Stratum.FRONTIER_F: "  <- on the frontier ray", Stratum.REGION_E: "  <- beyond it"}.get(c.tag, "")
    print(f"  {q!s:<28} {c.tag.value:<14} lambda1={c.lambda1:+.3f} lambda2={c.lambda2:+.3f}{note}")
