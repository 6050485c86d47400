"""Timelike geodesics from Id: closed forms, maximal domains, and an RK4 cross-check.

Run: python3 demos/02_geodesics.py
"""
import numpy as np

from afflorentz import Geodesic, completeness_report, preset
from afflorentz.oracles import integrate_extremal

for name in ("P1", "P2", "P3"):
    s = preset(name)
    rep = completeness_report(s)
    print(f"{name}: future complete {rep.future_complete}, past complete {rep.past_complete}")
    for psi0 in (-1.0, 0.0, 1.0):
        geo = Geodesic.timelike(s, psi0)
        t1 = 0.9 * min(geo.t_max, 3.0)
        q = geo.point(t1)
        ext = integrate_extremal(s, psi0, t1)
        gap = np.hypot(ext.x[-1] - q.x, ext.y[-1] - q.y)
        print(f"   psi0={psi0:+.1f}  domain ({geo.t_min:+.3f}, {geo.t_max:+.3f})  "
              f"q({t1:.3f}) = ({q.x:+.5f}, {q.y:.5f})  RK4 gap {gap:.1e}  |H| drift "
              f"{np.ptp(np.abs(ext.hamiltonian)):.1e}")

# Near t_max on P1 the curve runs off to infinity or into the absolute y = 0.
geo = Geodesic.timelike(preset("P1"), 0.3)
print("\nP1, psi0 = 0.3, approaching t_max:")
for k in (2, 6, 10, 14):
    t = geo.t_max * (1 - 2.0**-k)
    q = geo.point(t)
    print(f"   t = t_max(1 - 2^-{k:<2}) -> ({q.x:.4g}, {q.y:.4g})")
