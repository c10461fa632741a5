"""Geodesic set machinery for both geometries.

Sets are geodesic polygons (finite hulls, straightened through the Klein or
gnomonic chart), membership oracles, or dilated pullback regions. The
randomized convexity checker samples point pairs from a region and tests
whether geodesic segments stay inside.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from scipy.optimize import linprog

from . import hyperbolic as hy
from . import spherical as sp
from .models import (
    gnomonic_to_stereo,
    klein_to_poincare,
    poincare_to_klein,
    stereo_to_gnomonic,
)
from .numerics import DEFAULT_TOLERANCES, SeedLike, Tolerances, as_seed, rng_stream

MODELS = ("hyperbolic", "spherical")

# conservative extent caps: sampling and bisection never cross these
_HYP_MAX_DIST = 2.0 * math.atanh(1.0 - 1e-9)
_SPH_MAX_DIST = math.pi - 1e-9


class HemisphereError(ValueError):
    """Spherical points do not fit in one hemisphere; their hull is the whole sphere."""


class SamplingError(RuntimeError):
    """Rejection sampling acceptance rate collapsed; the region is degenerate."""


def _check_model(model: str) -> str:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    return model


def _origin(model: str):
    return 0j if model == "hyperbolic" else sp.SPoint(0)


def _dist(model: str, u, v) -> float:
    return hy.h_dist(u, v) if model == "hyperbolic" else sp.s_dist(u, v)


def _segment(model: str, u, v, t: float):
    return (
        hy.h_segment_point(u, v, t)
        if model == "hyperbolic"
        else sp.s_segment_point(u, v, t)
    )


def _polar(model: str, anchor, angle: float, distance: float):
    """Point at a geodesic distance from anchor in a chart direction; None if
    it would land outside the representable domain."""
    if model == "hyperbolic":
        if distance >= _HYP_MAX_DIST:
            return None
        p = math.tanh(distance / 2.0) * cmath.exp(1j * angle)
        q = hy.h_translate(anchor, p)
        if abs(q) >= 1.0 - hy.BOUNDARY_GUARD:
            return None
        return q
    if distance >= _SPH_MAX_DIST:
        return None
    p = math.tan(distance / 2.0) * cmath.exp(1j * angle)
    return sp.s_translate(anchor, p)


_PULLBACK_ERRORS = (sp.SphericalRangeError, sp.AntipodalPointsError, hy.DiskDomainError)


class Region:
    """Base of the region variants: knows its model, an interior anchor point,
    and a geodesic bounding radius about that anchor."""

    kind = "region"

    model: str
    center: object
    bounding_radius: float
    notes: Tuple[str, ...] = ()
    tolerances: Tolerances = DEFAULT_TOLERANCES

    def contains(self, p) -> bool:
        raise NotImplementedError

    def _inside(self, p) -> bool:
        """Membership with pullback domain errors counted as outside."""
        try:
            return self.contains(p)
        except _PULLBACK_ERRORS:
            return False


def _hemisphere_center(points: Sequence[sp.SPoint]) -> sp.SPoint:
    """Center of an open hemisphere containing all points, by LP on the sphere.

    Accepts closed-hemisphere configurations up to 1e-9 slack; the caller
    nudges boundary points inward afterwards.
    """
    vecs = [sp.to_sphere_vector(p) for p in points]
    n = len(vecs)
    # maximize t subject to m . p_i >= t, |m_j| <= 1
    c = [0.0, 0.0, 0.0, -1.0]
    a_ub = [[-x, -y, -z, 1.0] for (x, y, z) in vecs]
    b_ub = [0.0] * n
    bounds = [(-1.0, 1.0)] * 3 + [(None, None)]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if not res.success:
        raise HemisphereError("hemisphere search failed to converge")
    m = res.x[:3]
    norm = math.sqrt(sum(v * v for v in m))
    if norm < 1e-9:
        # margin-zero optimum can park m at the origin; recenter along the
        # vertex mass while keeping every margin non-negative
        s = [sum(v[i] for v in vecs) for i in range(3)]
        res = linprog(
            [-s[0], -s[1], -s[2]],
            A_ub=[[-x, -y, -z] for (x, y, z) in vecs],
            b_ub=[0.0] * n,
            bounds=[(-1.0, 1.0)] * 3,
            method="highs",
        )
        m = res.x if res.success else None
        norm = math.sqrt(sum(v * v for v in m)) if m is not None else 0.0
        if norm < 1e-9:
            raise HemisphereError(
                "points are not contained in a single hemisphere; "
                "their spherical hull is the whole sphere"
            )
    m = [v / norm for v in m]
    worst = min(x * mx + y * my + z * mz for (x, y, z), (mx, my, mz) in zip(vecs, [m] * n))
    if worst < -1e-9:
        raise HemisphereError(
            "points are not contained in a single hemisphere; "
            "their spherical hull is the whole sphere"
        )
    return sp.from_sphere_vector(*m)


def _convex_hull_indices(chart: Sequence[complex], eq_abs: float) -> List[int]:
    """Andrew monotone chain with a scale-free collinearity tolerance.

    Returns indices into `chart`, counterclockwise, starting at the
    lexicographically smallest point; collinear interior points are dropped.
    """
    seen = {}
    for i, w in enumerate(chart):
        seen.setdefault((w.real, w.imag), i)
    idx = sorted(seen.values(), key=lambda i: (chart[i].real, chart[i].imag))
    if len(idx) <= 2:
        return idx

    def turns_right(o: complex, a: complex, b: complex) -> bool:
        da, db = a - o, b - o
        cross = da.real * db.imag - da.imag * db.real
        return cross <= eq_abs * abs(da) * abs(db)

    lower: List[int] = []
    for i in idx:
        while len(lower) > 1 and turns_right(chart[lower[-2]], chart[lower[-1]], chart[i]):
            lower.pop()
        lower.append(i)
    upper: List[int] = []
    for i in reversed(idx):
        while len(upper) > 1 and turns_right(chart[upper[-2]], chart[upper[-1]], chart[i]):
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


class GeodesicPolygon(Region):
    """Geodesic convex hull of finitely many points, one per model.

    Membership is a point-in-convex-polygon test in the straightening chart
    (Klein for the disk, gnomonic about a fitted hemisphere center for the
    sphere) with an eq_abs boundary band counted as inside.
    """

    kind = "polygon"

    def __init__(
        self,
        model: str,
        points: Iterable,
        center=None,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> None:
        self.model = _check_model(model)
        self.tolerances = tolerances
        pts = list(points)
        if not pts:
            raise ValueError("polygon needs at least one point")
        if model == "hyperbolic":
            pts = [hy.as_disk_point(p) for p in pts]
            self.hemisphere_center = None
            self._neg_m = None
            chart = [poincare_to_klein(p) for p in pts]
            self.perturbed = ()
        else:
            pts = [sp.as_spoint(p) for p in pts]
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    if sp.s_dist(pts[i], pts[j]) >= math.pi - 1e-12:
                        raise ValueError(
                            f"vertices {i} and {j} are antipodal; no hull exists"
                        )
            m = _hemisphere_center(pts)
            self.hemisphere_center = m
            self._neg_m = -complex(m)
            shifted = [sp.s_translate(self._neg_m, p) for p in pts]
            perturbed = []
            flat: List[complex] = []
            for i, w in enumerate(shifted):
                if w.is_infinity:
                    raise HemisphereError("point antipodal to the hemisphere center")
                z = w.value
                if abs(z) >= 1.0 - 1e-9:
                    z = z / abs(z) * (1.0 - 1e-9)
                    perturbed.append(i)
                flat.append(z)
            self.perturbed = tuple(perturbed)
            chart = [stereo_to_gnomonic(z) for z in flat]

        order = _convex_hull_indices(chart, tolerances.eq_abs)
        self.vertices = tuple(pts[i] for i in order)
        self._chart_vertices = tuple(chart[i] for i in order)
        self._edges = self._build_edges(self._chart_vertices)
        if center is None:
            mean = sum(self._chart_vertices) / len(self._chart_vertices)
            if model == "hyperbolic":
                center = klein_to_poincare(mean)
            else:
                center = sp.s_translate(complex(self.hemisphere_center), gnomonic_to_stereo(mean))
        self.center = center
        if not self.contains(center):
            raise ValueError("polygon center must lie inside the hull")
        self.bounding_radius = min(
            self.max_distance_from(center) + 1e-9,
            _HYP_MAX_DIST if model == "hyperbolic" else _SPH_MAX_DIST,
        )

    @staticmethod
    def _build_edges(chart: Sequence[complex]):
        n = len(chart)
        if n < 3:
            return ()
        edges = []
        for i in range(n):
            a, b = chart[i], chart[(i + 1) % n]
            dx, dy = b.real - a.real, b.imag - a.imag
            ln = math.hypot(dx, dy)
            nx, ny = -dy / ln, dx / ln  # inward for counterclockwise order
            edges.append((nx, ny, nx * a.real + ny * a.imag))
        return tuple(edges)

    def _to_chart(self, p) -> Optional[complex]:
        if self.model == "hyperbolic":
            z = complex(p)
            if abs(z) >= 1.0 - hy.BOUNDARY_GUARD:
                return None
            return poincare_to_klein(z)
        w = sp.s_translate(self._neg_m, p)
        z = w.value
        if z is None:
            return None
        m2 = z.real * z.real + z.imag * z.imag
        if m2 >= 1.0:
            return None
        return 2.0 * z / (1.0 - m2)

    def contains(self, p) -> bool:
        w = self._to_chart(p)
        if w is None:
            return False
        band = self.tolerances.eq_abs
        cv = self._chart_vertices
        if len(cv) == 1:
            return abs(w - cv[0]) <= band
        if len(cv) == 2:
            a, b = cv
            ab = b - a
            t = ((w - a).real * ab.real + (w - a).imag * ab.imag) / (abs(ab) ** 2)
            t = min(1.0, max(0.0, t))
            return abs(w - (a + t * ab)) <= band
        x, y = w.real, w.imag
        for nx, ny, off in self._edges:
            if nx * x + ny * y < off - band:
                return False
        return True

    def max_distance_from(self, q) -> float:
        """Exact maximum geodesic distance from q to the hull."""
        if self.model == "hyperbolic":
            # hyperbolic balls are convex, so vertices dominate
            return max(hy.h_dist(q, v) for v in self.vertices)
        best = max(sp.s_dist(q, v) for v in self.vertices)
        n = len(self.vertices)
        if n < 2:
            return best
        qv = sp.to_sphere_vector(q)
        for i in range(n if n > 2 else 1):
            a = sp.to_sphere_vector(self.vertices[i])
            b = sp.to_sphere_vector(self.vertices[(i + 1) % n])
            best = max(best, _arc_max_distance(qv, a, b))
        return best


def _arc_max_distance(q, a, b) -> float:
    """Max spherical distance from unit vector q to the shorter arc a-b."""
    nx = a[1] * b[2] - a[2] * b[1]
    ny = a[2] * b[0] - a[0] * b[2]
    nz = a[0] * b[1] - a[1] * b[0]
    nn = math.sqrt(nx * nx + ny * ny + nz * nz)
    if nn == 0.0:
        return 0.0
    nx, ny, nz = nx / nn, ny / nn, nz / nn
    dot_qn = q[0] * nx + q[1] * ny + q[2] * nz
    px, py, pz = q[0] - dot_qn * nx, q[1] - dot_qn * ny, q[2] - dot_qn * nz
    pn = math.sqrt(px * px + py * py + pz * pz)
    if pn < 1e-15:
        return math.pi / 2.0  # q is a pole of the great circle
    # farthest circle point from q
    fx, fy, fz = -px / pn, -py / pn, -pz / pn
    mx, my, mz = a[0] + b[0], a[1] + b[1], a[2] + b[2]
    mn = math.sqrt(mx * mx + my * my + mz * mz)
    cos_half = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + 1.0) / 2.0  # cos^2(delta/2)
    on_arc = mn > 0 and (fx * mx + fy * my + fz * mz) / mn >= math.sqrt(max(cos_half, 0.0)) - 1e-12
    if on_arc:
        return math.pi / 2.0 + math.asin(min(1.0, pn))
    da = math.acos(max(-1.0, min(1.0, q[0] * a[0] + q[1] * a[1] + q[2] * a[2])))
    db = math.acos(max(-1.0, min(1.0, q[0] * b[0] + q[1] * b[1] + q[2] * b[2])))
    return max(da, db)


def hull(
    model: str,
    points: Iterable,
    center=None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> GeodesicPolygon:
    """Geodesic convex hull: straighten, take the Euclidean hull, map back."""
    return GeodesicPolygon(model, points, center=center, tolerances=tolerances)


class OracleRegion(Region):
    """Region given by a membership predicate plus a bounding radius."""

    kind = "oracle"

    def __init__(
        self,
        model: str,
        fn: Callable,
        center,
        bounding_radius: float,
        name: Optional[str] = None,
        params: Optional[dict] = None,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> None:
        self.model = _check_model(model)
        self.fn = fn
        self.center = center
        self.bounding_radius = min(
            bounding_radius, _HYP_MAX_DIST if model == "hyperbolic" else _SPH_MAX_DIST
        )
        self.name = name
        self.params = dict(params) if params else {}
        self.tolerances = tolerances

    def contains(self, p) -> bool:
        if self.model == "hyperbolic" and abs(complex(p)) >= 1.0 - hy.BOUNDARY_GUARD:
            return False
        return bool(self.fn(p))


class DilatedRegion(Region):
    """Image of a base region under a dilation-like map.

    Membership is exact via the inverse-map pullback: x is in the image iff
    the pullback of x lies in the base.
    """

    kind = "dilated"

    def __init__(self, base: Region, mapping, notes: Tuple[str, ...] = ()) -> None:
        self.base = base
        self.mapping = mapping
        if mapping.model != base.model:
            raise ValueError(
                f"dilation model {mapping.model!r} does not match region model {base.model!r}"
            )
        self.model = base.model
        self.notes = tuple(notes)
        self.tolerances = base.tolerances
        self._inv = mapping.inverse()
        self.center = mapping.apply(base.center)
        d_center = _dist(self.model, mapping.center, base.center)
        reach = mapping.distance_bound(d_center + base.bounding_radius)
        self.bounding_radius = min(
            reach + mapping.distance_bound(d_center),
            _HYP_MAX_DIST if self.model == "hyperbolic" else _SPH_MAX_DIST,
        )

    def contains(self, p) -> bool:
        try:
            pulled = self._inv.apply(p)
        except sp.AntipodalPointsError:
            # the exact antipode of the center is never reached: the forward
            # map is restricted to k * d < pi strictly
            return False
        return self.base.contains(pulled)


@dataclass(frozen=True)
class ChartScaling:
    """Euclidean scaling z -> k z performed in the straightening chart.

    Chart-straight geodesics make this a convexity-preserving map for every
    k > 0, which gives the checker a flat-geometry sanity baseline.
    """

    model: str
    k: float

    def __post_init__(self) -> None:
        _check_model(self.model)
        if not (self.k > 0 and math.isfinite(self.k)):
            raise ValueError(f"scaling factor must be positive, got {self.k!r}")

    @property
    def center(self):
        return _origin(self.model)

    def apply(self, p):
        if self.model == "hyperbolic":
            w = self.k * poincare_to_klein(hy.as_disk_point(p))
            if abs(w) >= 1.0:
                raise hy.DiskDomainError("chart scaling leaves the Klein disk")
            return klein_to_poincare(w)
        z = sp.as_spoint(p).value
        if z is None or abs(z) >= 1.0:
            raise sp.SphericalRangeError(
                "chart scaling is defined on the open hemisphere about the origin"
            )
        return sp.SPoint(gnomonic_to_stereo(self.k * stereo_to_gnomonic(z)))

    def inverse(self) -> "ChartScaling":
        return ChartScaling(model=self.model, k=1.0 / self.k)

    def distance_bound(self, d: float) -> float:
        if self.model == "hyperbolic":
            m = self.k * math.tanh(d)
            return _HYP_MAX_DIST if m >= 1.0 - 1e-12 else math.atanh(m)
        if d >= math.pi / 2:
            return math.pi / 2
        return math.atan(self.k * math.tan(d))


def dilate_region(region: Region, mapping, tolerances: Optional[Tolerances] = None) -> DilatedRegion:
    """Dilated region with exact pullback membership.

    Hypothesis violations (center outside the region, spherical contraction of
    a set leaking out of the hemisphere) are recorded as notes, not errors:
    counterexample studies need to construct exactly those.
    """
    tol = tolerances or region.tolerances
    notes = []
    if not region._inside(mapping.center):
        notes.append("dilation center is not contained in the region")
    k = getattr(mapping, "k", None)
    if region.model == "spherical" and k is not None and k <= 1.0:
        c = mapping.center
        if isinstance(region, GeodesicPolygon):
            reach = region.max_distance_from(c)
        else:
            reach = _dist("spherical", c, region.center) + region.bounding_radius
        if reach > math.pi / 2 + tol.eq_abs:
            notes.append(
                "region is not contained in the closed hemisphere about the "
                f"dilation center (reach {reach:.6f} > pi/2)"
            )
    return DilatedRegion(region, mapping, notes=tuple(notes))


@dataclass(frozen=True)
class Witness:
    """A convexity violation: segment point of (u, v) at parameter t escapes
    the region by `margin`."""

    u: object
    v: object
    t: float
    point: object
    margin: float


@dataclass(frozen=True)
class ConvexityReport:
    verdict: str  # "no-violation-found" | "violation"
    trials: int
    samples_per_segment: int
    seed: int
    witness: Optional[Witness] = None
    violating_trial: Optional[int] = None
    acceptance_rate: float = 1.0
    warnings: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        d = {
            "verdict": self.verdict,
            "trials": self.trials,
            "samples_per_segment": self.samples_per_segment,
            "seed": self.seed,
            "acceptance_rate": self.acceptance_rate,
            "warnings": list(self.warnings),
            "violating_trial": self.violating_trial,
            "witness": None,
        }
        if self.witness is not None:
            d["witness"] = {
                "u": _point_payload(self.witness.u),
                "v": _point_payload(self.witness.v),
                "t": self.witness.t,
                "point": _point_payload(self.witness.point),
                "margin": self.witness.margin,
            }
        return d


def _point_payload(p):
    if isinstance(p, sp.SPoint):
        if p.is_infinity:
            return "inf"
        p = p.value
    p = complex(p)
    return [p.real, p.imag]


def escape_margin(region: Region, p, tolerances: Optional[Tolerances] = None) -> float:
    """Distance from p to the region boundary along the geodesic toward the
    region's anchor; 0 if p is inside."""
    model = region.model
    if region._inside(p):
        return 0.0
    anchor = region.center
    if not region._inside(anchor):
        return _dist(model, p, anchor)
    try:
        lo, hi = 0.0, 1.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if region._inside(_segment(model, p, anchor, mid)):
                hi = mid
            else:
                lo = mid
        return _dist(model, p, _segment(model, p, anchor, hi))
    except sp.AntipodalPointsError:
        # p is the anchor's antipode; fall back to the depth past the bound
        return max(_dist(model, p, anchor) - region.bounding_radius, 0.0)


def _salient_pairs(region: Region) -> List[Tuple]:
    """Extreme-point pairs probed before random sampling.

    Segments between images of hull vertices are the hardest cases for a
    dilated polygon; probing them first lets the checker exhibit thin
    violations that rejection sampling would need huge trial counts to hit.
    """
    if isinstance(region, DilatedRegion) and isinstance(region.base, GeodesicPolygon):
        pts = []
        for v in region.base.vertices:
            try:
                pts.append(region.mapping.apply(v))
            except _PULLBACK_ERRORS:
                continue
    elif isinstance(region, GeodesicPolygon):
        pts = list(region.vertices)
    else:
        return []
    return [(pts[i], pts[j]) for i in range(len(pts)) for j in range(i + 1, len(pts))]


def check_convex(
    region: Region,
    trials: int,
    samples_per_segment: int,
    seed: SeedLike,
    tolerances: Optional[Tolerances] = None,
) -> ConvexityReport:
    """Randomized geodesic convexity check.

    Probes segments between the region's extreme points first, then draws
    `trials` point pairs from the region by rejection sampling inside its
    bounding ball, walks `samples_per_segment` interior points of each
    geodesic segment, and reports the first point escaping by more than the
    margin tolerance. Deterministic for a fixed seed; extreme-point probes
    report violating_trial = -1.
    """
    tol = tolerances or region.tolerances
    seed = as_seed(seed)
    rng = rng_stream(seed, 0)
    model = region.model
    anchor = region.center
    radius = region.bounding_radius
    state = {"attempts": 0, "accepted": 0}

    def draw():
        while True:
            state["attempts"] += 1
            d = rng.uniform(0.0, radius)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            p = _polar(model, anchor, phi, d)
            if p is not None and region._inside(p):
                state["accepted"] += 1
                return p
            if state["attempts"] >= 2000 and state["accepted"] < 1e-4 * state["attempts"]:
                raise SamplingError(
                    f"acceptance rate {state['accepted']}/{state['attempts']} "
                    "below 1e-4; region is too thin to sample"
                )

    captured: List[str] = []
    witness = None
    violating_trial = None

    def probe_segment(u, v, trial_index):
        nonlocal witness, violating_trial
        for j in range(1, samples_per_segment + 1):
            t = j / (samples_per_segment + 1.0)
            try:
                pt = _segment(model, u, v, t)
            except sp.AntipodalPointsError:
                captured.append(f"trial {trial_index}: sampled an antipodal pair; skipped")
                return False
            if not region._inside(pt):
                m = escape_margin(region, pt, tol)
                if m > tol.margin:
                    witness = Witness(u=u, v=v, t=t, point=pt, margin=m)
                    violating_trial = trial_index
                    return True
        return False

    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always", sp.NearAntipodalWarning)
        for u, v in _salient_pairs(region):
            if u == v:
                continue
            if probe_segment(u, v, -1):
                break
        if witness is None:
            for trial in range(trials):
                u = draw()
                v = draw()
                if u == v:
                    continue
                if probe_segment(u, v, trial):
                    break
        captured.extend(str(w.message) for w in rec)
    rate = state["accepted"] / state["attempts"] if state["attempts"] else 1.0
    return ConvexityReport(
        verdict="violation" if witness else "no-violation-found",
        trials=trials,
        samples_per_segment=samples_per_segment,
        seed=seed.value,
        witness=witness,
        violating_trial=violating_trial,
        acceptance_rate=rate,
        warnings=tuple(captured),
    )


def radial_farthest(
    region: Region,
    lam: float,
    resolution: int = 256,
    tolerances: Optional[Tolerances] = None,
) -> float:
    """Largest modulus along the ray exp(i lam) still inside the region.

    Coarse scan over `resolution` steps followed by bisection to 1e-12 on the
    modulus; assumes the region is star-shaped about the origin.
    """
    model = region.model
    origin = _origin(model)
    if not region._inside(origin):
        raise ValueError("radial_farthest requires a region containing the origin")
    cap = min(
        _dist(model, origin, region.center) + region.bounding_radius,
        _HYP_MAX_DIST if model == "hyperbolic" else _SPH_MAX_DIST,
    )

    def ray_point(d: float):
        if model == "hyperbolic":
            return math.tanh(d / 2.0) * cmath.exp(1j * lam)
        return sp.SPoint(math.tan(d / 2.0) * cmath.exp(1j * lam))

    def modulus(d: float) -> float:
        return math.tanh(d / 2.0) if model == "hyperbolic" else math.tan(d / 2.0)

    last_in = 0.0
    first_out = None
    for j in range(1, resolution + 1):
        d = cap * j / resolution
        if region._inside(ray_point(d)):
            last_in = d
        else:
            first_out = d
            break
    if first_out is None:
        return modulus(cap)
    lo, hi = last_in, first_out
    while modulus(hi) - modulus(lo) > 1e-12:
        mid = 0.5 * (lo + hi)
        if region._inside(ray_point(mid)):
            lo = mid
        else:
            hi = mid
    return modulus(lo)


def random_convex_polygon(
    model: str,
    rng,
    max_vertices: int = 8,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> GeodesicPolygon:
    """Random geodesic polygon about the origin, origin guaranteed inside.

    Radii stay below 2.5 (hyperbolic) and pi/2 - 0.05 (spherical): large
    enough for strong curvature effects, clear of conditioning cliffs.
    """
    _check_model(model)
    n = int(rng.integers(3, max_vertices + 1))
    cap = 2.5 if model == "hyperbolic" else math.pi / 2 - 0.05
    pts = []
    for _ in range(n):
        d = rng.uniform(0.0, cap)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        pts.append(_polar(model, _origin(model), phi, d))
    poly = GeodesicPolygon(model, pts, tolerances=tolerances)
    origin = _origin(model)
    if not poly._inside(origin):
        poly = GeodesicPolygon(model, pts + [origin], tolerances=tolerances)
    return GeodesicPolygon(model, poly.vertices, center=origin, tolerances=tolerances)


def translate_polygon(poly: GeodesicPolygon, c) -> GeodesicPolygon:
    """Move a polygon by the isometry taking 0 to c; hulls commute with it."""
    if poly.model == "hyperbolic":
        verts = [hy.h_translate(c, v) for v in poly.vertices]
        center = hy.h_translate(c, poly.center)
    else:
        verts = [sp.s_translate(c, v) for v in poly.vertices]
        center = sp.s_translate(c, poly.center)
    return GeodesicPolygon(poly.model, verts, center=center, tolerances=poly.tolerances)


# ---------------------------------------------------------------------------
# JSON interface
# ---------------------------------------------------------------------------

_ORACLE_BUILDERS = {}


def _register_oracle(name):
    def deco(builder):
        _ORACLE_BUILDERS[name] = builder
        return builder

    return deco


@_register_oracle("hyperbolic-half-plane")
def _half_plane_oracle(params: dict) -> Callable:
    bc = complex(params["boundary_center"][0], params["boundary_center"][1])
    br = float(params["boundary_radius"])
    return lambda z: abs(complex(z) - bc) >= br - 1e-12


def _point_to_json(model: str, p):
    if model == "spherical":
        p = sp.as_spoint(p)
        if p.is_infinity:
            return "inf"
        p = p.value
    p = complex(p)
    return [p.real, p.imag]


def _point_from_json(model: str, obj, path: str):
    if model == "spherical" and obj == "inf":
        return sp.INF
    if not (isinstance(obj, (list, tuple)) and len(obj) == 2) or not all(
        isinstance(x, (int, float)) for x in obj
    ):
        raise ValueError(f"{path}: expected [re, im]" + (' or "inf"' if model == "spherical" else ""))
    z = complex(obj[0], obj[1])
    return sp.SPoint(z) if model == "spherical" else z


def points_to_json(model: str, points: Iterable) -> dict:
    _check_model(model)
    return {"model": model, "points": [_point_to_json(model, p) for p in points]}


def points_from_json(obj: dict) -> Tuple[str, list]:
    if not isinstance(obj, dict):
        raise ValueError("top level: expected an object")
    model = obj.get("model")
    if model not in MODELS:
        raise ValueError(f'model: expected one of {MODELS}, got {model!r}')
    raw = obj.get("points")
    if not isinstance(raw, list) or not raw:
        raise ValueError("points: expected a non-empty array")
    return model, [_point_from_json(model, p, f"points[{i}]") for i, p in enumerate(raw)]


def region_to_json(region: Region) -> dict:
    if isinstance(region, GeodesicPolygon):
        return {
            "kind": "polygon",
            "model": region.model,
            "vertices": [_point_to_json(region.model, v) for v in region.vertices],
            "center": _point_to_json(region.model, region.center),
        }
    if isinstance(region, OracleRegion):
        if region.name is None:
            raise ValueError("only named oracle regions can be serialized")
        return {
            "kind": "oracle",
            "model": region.model,
            "name": region.name,
            "params": region.params,
            "center": _point_to_json(region.model, region.center),
            "bounding_radius": region.bounding_radius,
        }
    if isinstance(region, DilatedRegion):
        m = region.mapping
        if isinstance(m, ChartScaling):
            dil = {"type": "chart-scaling", "model": m.model, "k": m.k}
        elif hasattr(m, "k1"):
            dil = {
                "type": "asymmetric",
                "model": m.model,
                "center": _point_to_json(m.model, m.center),
                "k1": m.k1,
                "k2": m.k2,
            }
        else:
            dil = {
                "type": "radial",
                "model": m.model,
                "center": _point_to_json(m.model, m.center),
                "k": m.k,
            }
        return {"kind": "dilated", "base": region_to_json(region.base), "dilation": dil}
    raise ValueError(f"cannot serialize region of kind {region.kind!r}")


def region_from_json(obj: dict, tolerances: Tolerances = DEFAULT_TOLERANCES) -> Region:
    if not isinstance(obj, dict):
        raise ValueError("region: expected an object")
    kind = obj.get("kind")
    if kind == "polygon":
        model = obj.get("model")
        if model not in MODELS:
            raise ValueError(f"model: expected one of {MODELS}, got {model!r}")
        verts = obj.get("vertices")
        if not isinstance(verts, list) or not verts:
            raise ValueError("vertices: expected a non-empty array")
        pts = [_point_from_json(model, v, f"vertices[{i}]") for i, v in enumerate(verts)]
        center = None
        if obj.get("center") is not None:
            center = _point_from_json(model, obj["center"], "center")
        return GeodesicPolygon(model, pts, center=center, tolerances=tolerances)
    if kind == "oracle":
        model = obj.get("model")
        name = obj.get("name")
        if name not in _ORACLE_BUILDERS:
            raise ValueError(f"name: unknown oracle {name!r}")
        fn = _ORACLE_BUILDERS[name](obj.get("params") or {})
        center = _point_from_json(model, obj["center"], "center")
        return OracleRegion(
            model,
            fn,
            center=center,
            bounding_radius=float(obj["bounding_radius"]),
            name=name,
            params=obj.get("params") or {},
            tolerances=tolerances,
        )
    if kind == "dilated":
        base = region_from_json(obj.get("base"), tolerances)
        dil = obj.get("dilation")
        if not isinstance(dil, dict):
            raise ValueError("dilation: expected an object")
        dtype = dil.get("type", "radial")
        if dtype == "chart-scaling":
            mapping = ChartScaling(model=dil["model"], k=float(dil["k"]))
        elif dtype == "asymmetric":
            from .verify import AsymmetricDilation

            center = _point_from_json(dil["model"], dil["center"], "dilation.center")
            mapping = AsymmetricDilation(
                model=dil["model"],
                k1=float(dil["k1"]),
                k2=float(dil["k2"]),
                center=center,
            )
        elif dtype == "radial":
            center = _point_from_json(dil["model"], dil["center"], "dilation.center")
            if dil["model"] == "hyperbolic":
                mapping = hy.HDilation(c=complex(center), k=float(dil["k"]))
            else:
                mapping = sp.SDilation(c=complex(center), k=float(dil["k"]))
        else:
            raise ValueError(f"dilation.type: unknown type {dtype!r}")
        return dilate_region(base, mapping, tolerances)
    raise ValueError(f"kind: expected polygon, oracle, or dilated, got {kind!r}")
