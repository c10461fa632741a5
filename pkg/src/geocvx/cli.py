"""Command-line frontend: verification suites, figure plots, hull and
dilation data commands. JSON reports, hand-emitted SVG, exit codes 0/1/2."""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import List, Optional, Sequence

from . import _svg, verify
from . import hyperbolic as hy
from . import spherical as sp
from .convexity import (
    DilatedRegion,
    GeodesicPolygon,
    dilate_region,
    hull,
    points_from_json,
    region_from_json,
    region_to_json,
    _point_to_json,
)
from .numerics import Tolerances

SUITES = (
    "theorem1",
    "theorem2",
    "lemma3",
    "lemma4",
    "counterexamples",
    "proof-consistency",
    "conjecture",
)


class UsageError(ValueError):
    pass


def _atomic_write(path: str, data: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".geocvx-")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(data: str, out: Optional[str], also_stdout: bool = False) -> None:
    if out:
        _atomic_write(out, data)
        if also_stdout:
            sys.stdout.write(data)
    else:
        sys.stdout.write(data)


def _default_seed() -> int:
    env = os.environ.get("GEOCVX_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"GEOCVX_SEED must be an integer, got {env!r}") from exc
    return verify.DEFAULT_SEED


def _parse_range(text: str, flag: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{flag} expects 'lo,hi', got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise UsageError(f"{flag} expects numbers, got {text!r}") from exc
    if not lo <= hi:
        raise UsageError(f"{flag} expects lo <= hi, got {text!r}")
    return lo, hi


def _parse_dilate(text: str):
    """--dilate 'c,k' with a real center, or 're,im,k'."""
    parts = text.split(",")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"--dilate expects numbers, got {text!r}") from exc
    if len(vals) == 2:
        return complex(vals[0], 0.0), vals[1]
    if len(vals) == 3:
        return complex(vals[0], vals[1]), vals[2]
    raise UsageError(f"--dilate expects 'center,k' or 're,im,k', got {text!r}")


def _parse_center(text: str) -> complex:
    parts = text.split(",")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"--center expects numbers, got {text!r}") from exc
    if len(vals) == 1:
        return complex(vals[0], 0.0)
    if len(vals) == 2:
        return complex(vals[0], vals[1])
    raise UsageError(f"--center expects 're' or 're,im', got {text!r}")


def _tolerances(args) -> Tolerances:
    kw = {}
    for name in ("eq_abs", "margin", "fd_step", "fd_tol"):
        v = getattr(args, name, None)
        if v is not None:
            kw[name] = v
    return Tolerances(**kw)


def _load_json_file(path: str) -> dict:
    try:
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError as exc:
        raise UsageError(f"input file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc


def _radial_mapping(model: str, center: complex, k: float):
    if model == "hyperbolic":
        return hy.HDilation(c=center, k=k)
    return sp.SDilation(c=center, k=k)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    tol = _tolerances(args)
    seed = args.seed if args.seed is not None else _default_seed()
    suite = args.suite
    if suite == "theorem1":
        rep = verify.run_theorem1_suite(
            polygons=args.polygons,
            trials=args.trials,
            samples_per_segment=args.samples_per_segment,
            seed=seed,
            k_range=_parse_range(args.k_range, "--k-range") if args.k_range else (1.0, 5.0),
            tolerances=tol,
        )
    elif suite == "theorem2":
        rep = verify.run_theorem2_suite(
            polygons=args.polygons,
            trials=args.trials,
            samples_per_segment=args.samples_per_segment,
            seed=seed,
            k_range=_parse_range(args.k_range, "--k-range") if args.k_range else (0.2, 1.0),
            tolerances=tol,
        )
    elif suite in ("lemma3", "lemma4"):
        rep = verify.run_lemma_suite(
            "hyp" if suite == "lemma3" else "sph",
            tuples=args.tuples,
            seed=seed,
            tolerances=tol,
        )
    elif suite == "counterexamples":
        if args.case:
            case = verify.run_counterexample(args.case, seed=seed, tolerances=tol)
            payload = _dump_json(case)
            _emit(payload, args.out, args.json)
            return 0 if case["verdict"] == "violation" else 1
        rep = verify.run_counterexamples(seed=seed, tolerances=tol)
    elif suite == "proof-consistency":
        rep = verify.run_proof_consistency(samples=args.samples, seed=seed, tolerances=tol)
    elif suite == "conjecture":
        rep = verify.run_conjecture_scan(
            args.model,
            polygons=args.polygons,
            trials=args.trials,
            seed=seed,
            k1_range=_parse_range(args.k1_range, "--k1-range") if args.k1_range else None,
            k2_range=_parse_range(args.k2_range, "--k2-range") if args.k2_range else None,
            tolerances=tol,
        )
    else:  # pragma: no cover
        raise UsageError(f"unknown suite {suite!r}")
    _emit(_dump_json(rep.to_json_dict()), args.out, args.json)
    return 0 if rep.verdict in ("pass", "recorded") else 1


# ---------------------------------------------------------------------------
# plot
# ---------------------------------------------------------------------------


def _sample_edge(model: str, a, b, n: int = 256) -> List[complex]:
    pts = []
    for i in range(n + 1):
        t = i / n
        if model == "hyperbolic":
            p = hy.h_segment_point(a, b, t)
        else:
            p = sp.s_segment_point(a, b, t)
        pts.append(p)
    return _svg.infinity_safe(pts)


def _polygon_outline(poly: GeodesicPolygon, n: int = 256) -> List[List[complex]]:
    verts = poly.vertices
    if len(verts) == 1:
        return []
    edges = []
    count = len(verts) if len(verts) > 2 else 1
    for i in range(count):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        edges.append(_sample_edge(poly.model, a, b, n))
    return edges


def _mapped_outline(region: DilatedRegion, n: int = 256) -> List[List[complex]]:
    if not isinstance(region.base, GeodesicPolygon):
        return []
    out = []
    for edge in _polygon_outline(region.base, n):
        pts = []
        for p in edge:
            try:
                pts.append(region.mapping.apply(p))
            except (sp.SphericalRangeError, sp.AntipodalPointsError, hy.DiskDomainError):
                continue
        out.append(_svg.infinity_safe(pts))
    return out


def _witness_geometry(model: str, witness: dict) -> dict:
    def pt(key):
        v = witness[key]
        if v == "inf":
            return None
        return complex(v[0], v[1])

    u, v, p = pt("u"), pt("v"), pt("point")
    seg = []
    if u is not None and v is not None:
        a = u if model == "hyperbolic" else sp.SPoint(u)
        b = v if model == "hyperbolic" else sp.SPoint(v)
        seg = _sample_edge(model, a, b, 256)
    return {"u": u, "v": v, "point": p, "segment": seg}


def cmd_plot(args) -> int:
    tol = _tolerances(args)
    seed = args.seed if args.seed is not None else _default_seed()
    size = args.size

    if args.target == "figure1":
        case = verify.run_counterexample("s-contract-beyond-hemisphere", seed=seed, tolerances=tol)
        region = region_from_json(case["region"], tol)
        base = region.base
        image_hull = hull(
            "spherical", [region.mapping.apply(v) for v in base.vertices], tolerances=tol
        )
        wit = _witness_geometry("spherical", case["witness"])
        everything: List[complex] = []
        base_edges = _polygon_outline(base)
        image_edges = _mapped_outline(region)
        hull_edges = _polygon_outline(image_hull)
        for group in (base_edges, image_edges, hull_edges):
            for e in group:
                everything.extend(e)
        canvas = _svg.SvgCanvas(size=size, extent=_svg.content_extent(everything))
        # stereographic image of the hemisphere about the origin, per caption
        canvas.circle(0j, 1.0, _svg.COLOR_AXIS_CIRCLE, width=1.0, dash=_svg.DOTTED)
        for e in base_edges:
            canvas.polyline(e, _svg.COLOR_BASE, width=1.5)
        for e in image_edges:
            canvas.polyline(e, _svg.COLOR_IMAGE, width=1.5)
        for e in hull_edges:
            canvas.polyline(e, _svg.COLOR_HULL, width=1.5, dash=_svg.DASHED)
        if wit["segment"]:
            canvas.polyline(wit["segment"], _svg.COLOR_WITNESS, width=1.0, dash=_svg.DOTTED)
        for key in ("u", "v", "point"):
            if wit[key] is not None:
                canvas.marker(wit[key], _svg.COLOR_WITNESS)
        _atomic_write(args.out, canvas.render())
        return 0

    if args.target == "region":
        if not args.input:
            raise UsageError("plot region requires --input")
        obj = _load_json_file(args.input)
        model, pts = points_from_json(obj)
        poly = hull(model, pts, tolerances=tol)
        edges = _polygon_outline(poly)
        everything = [p for e in edges for p in e]
        mapped = []
        if args.dilate:
            center, k = _parse_dilate(args.dilate)
            region = dilate_region(poly, _radial_mapping(model, center, k), tol)
            mapped = _mapped_outline(region)
            everything += [p for e in mapped for p in e]
        canvas = _svg.SvgCanvas(size=size, extent=_svg.content_extent(everything))
        dash = _svg.DOTTED if model == "spherical" else ""
        canvas.circle(0j, 1.0, _svg.COLOR_AXIS_CIRCLE, width=1.0, dash=dash)
        for e in edges:
            canvas.polyline(e, _svg.COLOR_BASE, width=1.5)
        for e in mapped:
            canvas.polyline(e, _svg.COLOR_IMAGE, width=1.5)
        _atomic_write(args.out, canvas.render())
        return 0

    if args.target == "suite-witness":
        if not args.report:
            raise UsageError("plot suite-witness requires --report")
        rep = _load_json_file(args.report)
        run = None
        for r in rep.get("runs", []):
            if isinstance(r, dict) and r.get("report", {}).get("verdict") == "violation":
                run = r
                break
            if isinstance(r, dict) and r.get("verdict") == "violation":
                run = {"region": r["region"], "report": {"witness": r["witness"]}}
                break
        if run is None:
            sys.stderr.write("report contains no violation to draw\n")
            return 1
        region = region_from_json(run["region"], tol)
        model = region.model
        wit = _witness_geometry(model, run["report"]["witness"])
        edges = []
        if isinstance(region, DilatedRegion):
            edges = _mapped_outline(region)
            base_edges = _polygon_outline(region.base) if isinstance(region.base, GeodesicPolygon) else []
        elif isinstance(region, GeodesicPolygon):
            edges = _polygon_outline(region)
            base_edges = []
        else:
            base_edges = []
        everything = [p for e in edges + base_edges for p in e] + wit["segment"]
        canvas = _svg.SvgCanvas(size=size, extent=_svg.content_extent(everything))
        dash = _svg.DOTTED if model == "spherical" else ""
        canvas.circle(0j, 1.0, _svg.COLOR_AXIS_CIRCLE, width=1.0, dash=dash)
        for e in base_edges:
            canvas.polyline(e, _svg.COLOR_BASE, width=1.0)
        for e in edges:
            canvas.polyline(e, _svg.COLOR_IMAGE, width=1.5)
        if wit["segment"]:
            canvas.polyline(wit["segment"], _svg.COLOR_WITNESS, width=1.0, dash=_svg.DOTTED)
        for key in ("u", "v", "point"):
            if wit[key] is not None:
                canvas.marker(wit[key], _svg.COLOR_WITNESS)
        _atomic_write(args.out, canvas.render())
        return 0

    raise UsageError(f"unknown plot target {args.target!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# hull / dilate data commands
# ---------------------------------------------------------------------------


def cmd_hull(args) -> int:
    tol = _tolerances(args)
    obj = _load_json_file(args.input)
    model, pts = points_from_json(obj)
    poly = hull(model, pts, tolerances=tol)
    _emit(_dump_json(region_to_json(poly)), args.out, args.json)
    return 0


def cmd_dilate(args) -> int:
    tol = _tolerances(args)
    obj = _load_json_file(args.input)
    model, pts = points_from_json(obj)
    center = _parse_center(args.center)
    mapping = _radial_mapping(model, center, args.k)
    images = [mapping.apply(p) for p in pts]
    payload = {
        "model": model,
        "dilation": {"type": "radial", "model": model, "center": [center.real, center.imag], "k": args.k},
        "points": [_point_to_json(model, p) for p in pts],
        "images": [_point_to_json(model, p) for p in images],
    }
    _emit(_dump_json(payload), args.out, args.json)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="geocvx",
        description="Constant-curvature convexity toolkit: verification suites, "
        "figure plots, hulls and dilations.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(q, with_seed=True):
        if with_seed:
            q.add_argument("--seed", type=int, default=None, help="RNG seed (default: GEOCVX_SEED or 1729)")
        q.add_argument("--out", default=None, help="output path (default: stdout)")
        q.add_argument("--json", action="store_true", help="echo JSON to stdout even with --out")
        q.add_argument("--eq-abs", dest="eq_abs", type=float, default=None)
        q.add_argument("--margin", dest="margin", type=float, default=None)
        q.add_argument("--fd-step", dest="fd_step", type=float, default=None)
        q.add_argument("--fd-tol", dest="fd_tol", type=float, default=None)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--polygons", type=int, default=200)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--samples-per-segment", dest="samples_per_segment", type=int, default=8)
    v.add_argument("--samples", type=int, default=10000, help="proof-consistency sample count")
    v.add_argument("--tuples", type=int, default=200, help="lemma parameter tuples")
    v.add_argument("--case", default=None, help="single counterexample id")
    v.add_argument("--k-range", dest="k_range", default=None, help="dilation factor range 'lo,hi'")
    v.add_argument("--k1-range", dest="k1_range", default=None)
    v.add_argument("--k2-range", dest="k2_range", default=None)
    v.add_argument("--model", choices=("hyperbolic", "spherical"), default="hyperbolic")
    add_common(v)
    v.set_defaults(fn=cmd_verify)

    pl = sub.add_parser("plot", help="render an SVG figure")
    pl.add_argument("target", choices=("figure1", "region", "suite-witness"))
    pl.add_argument("--input", default=None, help="point-list JSON for 'region'")
    pl.add_argument("--report", default=None, help="suite report JSON for 'suite-witness'")
    pl.add_argument("--dilate", default=None, help="overlay dilation 'center,k' or 're,im,k'")
    pl.add_argument("--size", type=int, default=800, help="canvas pixels")
    add_common(pl)
    pl.set_defaults(fn=cmd_plot)

    h = sub.add_parser("hull", help="geodesic convex hull of a point list")
    h.add_argument("--input", required=True)
    add_common(h, with_seed=False)
    h.set_defaults(fn=cmd_hull)

    d = sub.add_parser("dilate", help="radial dilation of a point list")
    d.add_argument("--input", required=True)
    d.add_argument("--k", type=float, required=True)
    d.add_argument("--center", default="0,0", help="dilation center 're,im'")
    add_common(d, with_seed=False)
    d.set_defaults(fn=cmd_dilate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "plot" and not args.out:
        sys.stderr.write("plot requires --out PATH for the SVG file\n")
        return 2
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except Exception as exc:  # unexpected failure: report, do not traceback-spam
        sys.stderr.write(f"unexpected error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
