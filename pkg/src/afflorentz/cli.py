"""Command-line front end.

    afflorentz curvature --preset P3
    afflorentz distance --preset P1 --to 1,1.41421356237 --format json
    afflorentz geodesic --matrix 1,0,0,1 --psi0 0.3 --samples 50 --format svg --out g.svg

Exit codes: 0 success, 2 usage error, 3 domain error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .causal import classify, point_B
from .errors import AbsoluteIntersectionUndefined, AffLorentzError
from .geodesics import Geodesic, completeness_report
from .group import GroupPoint
from .isometry import embed_flat, half_plane_margin, killing_basis, killing_residual
from .problem import CurvSign, make_problem, preset
from .synthesis import distance_info, sphere
from .verification import run_suite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- serialization


def _num(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    v = float(v)
    if math.isnan(v):
        return '"nan"'
    if math.isinf(v):
        return '"inf"' if v > 0 else '"-inf"'
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return format(v, ".17g")


def to_json(obj, indent: int = 0) -> str:
    """JSON with 17 significant digits and infinities written as strings."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}{to_json(str(k))}: {to_json(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + to_json(v, indent + 1) for v in obj) + "\n" + end + "]"
    return _num(obj)


def to_csv(doc) -> str:
    rows = doc.get("rows") if isinstance(doc, dict) else None
    if rows:
        cols = list(rows[0].keys())
        lines = [",".join(cols)]
        lines += [",".join(_csv_cell(r[c]) for c in cols) for r in rows]
        return "\n".join(lines) + "\n"
    lines = ["key,value"]
    for k, v in doc.items():
        if isinstance(v, (list, tuple)):
            v = " ".join(_csv_cell(e) for e in v)
        lines.append(f"{k},{_csv_cell(v)}")
    return "\n".join(lines) + "\n"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return _num(v).strip('"')


# ---------------------------------------------------------------- SVG


def _svg_plot(spec, curves, points=(), title=""):
    """Upper half-plane picture with the absolute y = 0, the light cone at Id,
    and for K < 0 the frontier ray F with the region E shaded."""
    xs = [0.0] + [p[0] for c in curves for p in c] + [p[0] for p in points]
    ys = [1.0] + [p[1] for c in curves for p in c] + [p[1] for p in points]
    x0, x1 = min(xs), max(xs)
    y1 = max(ys)
    span = max(x1 - x0, y1, 1.0)
    x0, x1 = x0 - 0.15 * span, x1 + 0.15 * span
    y0, y1 = -0.1 * span, y1 + 0.15 * span
    W = H = 600.0
    sx = W / (x1 - x0)
    sy = H / (y1 - y0)

    def P(x, y):
        return f"{(x - x0) * sx:.3f},{(y1 - y) * sy:.3f}"

    far = 10 * span
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W:.0f}" height="{H:.0f}" viewBox="0 0 {W:.0f} {H:.0f}">',
        f"<title>{title}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    a, b, c, d = spec.matrix
    if spec.curv_sign is CurvSign.NEG:
        try:
            bx, _ = point_B(spec)
            fdir = np.array([d - b, a - c])
            fdir = fdir / np.linalg.norm(fdir)
            Fe = (bx + far * fdir[0], far * fdir[1])
            # E lies between F and the absolute, on the side where lambda3 < 0
            Le = (bx - math.copysign(far, c - a), 0.0)
            out.append(f'<polygon class="region-E" points="{P(bx, 0)} {P(*Fe)} {P(*Le)}" fill="#f4d7d7" stroke="none"/>')
            out.append(f'<line class="frontier-F" x1="{P(bx, 0).split(",")[0]}" y1="{P(bx, 0).split(",")[1]}" '
                       f'x2="{P(*Fe).split(",")[0]}" y2="{P(*Fe).split(",")[1]}" stroke="#b03030" stroke-width="2"/>')
        except AbsoluteIntersectionUndefined:
            pass
    # light cone: the two lightlike subgroups through Id are straight rays
    for s in (1, -1):
        u = np.array([spec.alpha + s * spec.beta, spec.gamma + s * spec.delta])
        u = u / np.linalg.norm(u)
        tmax = far if u[1] >= 0 else min(far, 1.0 / -u[1] * (1 - 1e-9))
        e = (u[0] * tmax, 1.0 + u[1] * tmax)
        out.append(f'<line class="light-cone" x1="{P(0, 1).split(",")[0]}" y1="{P(0, 1).split(",")[1]}" '
                   f'x2="{P(*e).split(",")[0]}" y2="{P(*e).split(",")[1]}" stroke="#d08000" stroke-dasharray="6,4"/>')
    out.append(f'<line class="absolute" x1="0" y1="{(y1 - 0) * sy:.3f}" x2="{W:.0f}" y2="{(y1 - 0) * sy:.3f}" stroke="black"/>')
    for curve in curves:
        if len(curve) > 1:
            out.append('<polyline fill="none" stroke="#2050c0" stroke-width="1.5" points="'
                       + " ".join(P(*p) for p in curve) + '"/>')
    for p in points:
        xy = P(*p).split(",")
        out.append(f'<circle cx="{xy[0]}" cy="{xy[1]}" r="2" fill="#2050c0"/>')
    xy = P(0, 1).split(",")
    out.append(f'<circle class="identity" cx="{xy[0]}" cy="{xy[1]}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- argument parsing


def _pair(text: str, flag: str):
    try:
        parts = [float(s) for s in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: expected two comma-separated decimals, got {text!r}") from None
    if len(parts) != 2:
        raise UsageError(f"{flag}: expected two comma-separated decimals, got {text!r}")
    return parts


def _point(text: str, flag: str) -> GroupPoint:
    x, y = _pair(text, flag)
    if not y > 0:
        raise UsageError(f"{flag}: y must be positive, got {y!r}")
    return GroupPoint(x, y)


def _spec(args):
    if args.preset and args.matrix:
        raise UsageError("--preset and --matrix are mutually exclusive")
    if args.preset:
        return preset(args.preset)
    if args.matrix:
        try:
            vals = [float(s) for s in args.matrix.split(",")]
        except ValueError:
            raise UsageError(f"--matrix: expected a,b,c,d decimals, got {args.matrix!r}") from None
        if len(vals) != 4:
            raise UsageError(f"--matrix: expected four values a,b,c,d, got {args.matrix!r}")
        return make_problem(*vals)
    raise UsageError("one of --preset or --matrix is required")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--preset", choices=["P1", "P2", "P3"])
    common.add_argument("--matrix", help="a,b,c,d entries of A, row by row")
    common.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    common.add_argument("--out", help="write output to this path instead of stdout")

    p = _Parser(prog="afflorentz", description="Left-invariant Lorentzian structures on Aff+(R).")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("curvature", parents=[common], help="curvature value and sign")
    s = sub.add_parser("classify", parents=[common], help="causal stratum of a point")
    s.add_argument("--to", required=True)
    s.add_argument("--from", dest="from_", default=None)
    s = sub.add_parser("distance", parents=[common], help="Lorentzian distance")
    s.add_argument("--to", required=True)
    s.add_argument("--from", dest="from_", default=None)
    s = sub.add_parser("geodesic", parents=[common], help="sample a timelike geodesic from Id")
    s.add_argument("--psi0", type=float, required=True)
    s.add_argument("--tmax", type=float, default=None)
    s.add_argument("--samples", type=int, default=100)
    s = sub.add_parser("sphere", parents=[common], help="sample the sphere S(R) about Id")
    s.add_argument("--radius", type=float, required=True)
    s.add_argument("--samples", type=int, default=64)
    s = sub.add_parser("killing", parents=[common], help="Killing fields and residuals at a point")
    s.add_argument("--at", required=True)
    s = sub.add_parser("embed", parents=[common], help="Minkowski image of a point (K = 0)")
    s.add_argument("--point", required=True)
    s = sub.add_parser("verify", parents=[common], help="run the oracle suite")
    s.add_argument("--full", action="store_true", help="include the brute-force path search")
    return p


# ---------------------------------------------------------------- commands


def _cmd_curvature(spec, args):
    doc = {"K": spec.K, "sign": spec.curv_sign.value}
    rep = completeness_report(spec)
    doc["futureComplete"], doc["pastComplete"] = rep.future_complete, rep.past_complete
    doc["timeReversed"] = spec.time_reversed
    return doc


def _cmd_classify(spec, args):
    q0 = _point(args.from_, "--from") if args.from_ else GroupPoint(0.0, 1.0)
    q1 = _point(args.to, "--to")
    cls = classify(spec, q1, q0)
    doc = {"stratum": cls.tag.value, "lambda1": cls.lambda1, "lambda2": cls.lambda2}
    if cls.lambda3 is not None:
        doc["lambda3"] = cls.lambda3
    if cls.branch is not None:
        doc["branch"] = cls.branch
    return doc


def _cmd_distance(spec, args):
    q0 = _point(args.from_, "--from") if args.from_ else GroupPoint(0.0, 1.0)
    q1 = _point(args.to, "--to")
    return {k: v for k, v in distance_info(spec, q0, q1).as_dict().items() if v is not None}


def _cmd_geodesic(spec, args):
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    geo = Geodesic.timelike(spec, args.psi0)
    limit = 0.999 * geo.t_max if math.isfinite(geo.t_max) else 5.0
    tmax = limit if args.tmax is None else min(args.tmax, limit)
    if not tmax > 0:
        raise UsageError("--tmax must be positive")
    t = np.linspace(0.0, tmax, args.samples)
    x, y, psi = geo.sample(t)
    rows = [{"t": float(a), "x": float(b), "y": float(c), "psi": float(d)} for a, b, c, d in zip(t, x, y, psi)]
    return {"psi0": args.psi0, "tMax": geo.t_max, "rows": rows, "_curves": [list(zip(x, y))]}


def _cmd_sphere(spec, args):
    arc = sphere(spec, args.radius, n=args.samples)
    rows = [{"x": q.x, "y": q.y} for q in arc.points]
    return {"R": args.radius, "kind": arc.kind, "maxResidual": arc.max_residual, "rows": rows,
            "_curves": [[(q.x, q.y) for q in arc.points]]}


def _cmd_killing(spec, args):
    q = _point(args.at, "--at")
    fields = []
    for F in killing_basis(spec):
        v = F(q)
        fields.append({"tag": F.tag, "dx": float(v[0]), "dy": float(v[1]), "complete": F.complete,
                       "residual": killing_residual(spec, F, q)})
    return {"at": [q.x, q.y], "rows": fields}


def _cmd_embed(spec, args):
    q = _point(args.point, "--point")
    p = embed_flat(spec, q)
    return {"xt": p.xt, "yt": p.yt, "margin": half_plane_margin(spec, p)}


def _cmd_verify(spec, args):
    name = args.preset.upper() if args.preset else ""
    rows = run_suite(spec, name, full=args.full)
    return {"passed": all(r.passed for r in rows),
            "rows": [{"check": r.name, "residual": r.residual, "tolerance": r.tolerance, "pass": r.passed}
                     for r in rows]}


COMMANDS = {
    "curvature": _cmd_curvature,
    "classify": _cmd_classify,
    "distance": _cmd_distance,
    "geodesic": _cmd_geodesic,
    "sphere": _cmd_sphere,
    "killing": _cmd_killing,
    "embed": _cmd_embed,
    "verify": _cmd_verify,
}


def _verify_table(doc, color: bool) -> str:
    lines = []
    for r in doc["rows"]:
        mark = "PASS" if r["pass"] else "FAIL"
        if color:
            mark = ("\033[32m" if r["pass"] else "\033[31m") + mark + "\033[0m"
        lines.append(f"{mark}  {r['check']:<34} residual={r['residual']:.3e}  tol={r['tolerance']:.0e}")
    return "\n".join(lines) + "\n"


def render(doc, fmt: str, spec, command: str, color: bool = False) -> str:
    curves = doc.pop("_curves", None)
    if fmt == "svg":
        if curves is None:
            raise UsageError("--format svg is available for geodesic and sphere only")
        if command == "sphere":
            return _svg_plot(spec, [], curves[0], title=f"S({doc['R']})")
        return _svg_plot(spec, curves, title=f"geodesic psi0={doc['psi0']}")
    if fmt == "csv":
        return to_csv(doc)
    if command == "verify" and color:
        return _verify_table(doc, color) + to_json(doc) + "\n"
    return to_json(doc) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        spec = _spec(args)
        doc = COMMANDS[args.command](spec, args)
        color = args.out is None and "NO_COLOR" not in os.environ and stdout.isatty()
        text = render(doc, args.format, spec, args.command, color)
    except UsageError as e:
        print(f"afflorentz: usage error: {e}", file=stderr)
        return EXIT_USAGE
    except AffLorentzError as e:
        print(f"afflorentz: {type(e).__name__}: {e}", file=stderr)
        return EXIT_DOMAIN
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if args.command == "verify" and not doc["passed"]:
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
