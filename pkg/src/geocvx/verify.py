"""Executable reproduction of the dilation-convexity results.

Randomized suites for both dilation theorems, deterministic constructions of
the four hypothesis-necessity counterexamples, internal consistency checks of
the proof machinery, and an exploratory scan of the asymmetric-dilation
conjecture (clearly flagged as an interpretation, never a proof).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import List, Optional, Tuple

from . import hyperbolic as hy
from . import spherical as sp
from .convexity import (
    DilatedRegion,
    GeodesicPolygon,
    OracleRegion,
    check_convex,
    dilate_region,
    escape_margin,
    hull,
    random_convex_polygon,
    region_to_json,
    translate_polygon,
    _point_to_json,
)
from .models import poincare_to_klein
from .numerics import DEFAULT_TOLERANCES, SeedLike, Tolerances, as_seed, rng_stream, second_fd

DEFAULT_SEED = 1729

COUNTEREXAMPLE_CASES = (
    "h-contract-halfplane",
    "dilate-outside-point",
    "s-expand-long-geodesic",
    "s-contract-beyond-hemisphere",
)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass(frozen=True)
class AsymmetricDilation:
    """Axis-dependent radial dilation.

    On the Euclidean plane this is the diagonal scaling (k1 x, k2 y) written
    in polar form. Off the plane the same recipe is applied to geodesic polar
    coordinates about the center: one reasonable lift of the conjecture,
    labeled `geodesic-polar` in every report so other lifts can coexist.
    """

    model: str
    k1: float
    k2: float
    center: complex = 0j

    interpretation = "geodesic-polar"

    def __post_init__(self) -> None:
        if self.model not in ("euclidean", "hyperbolic", "spherical"):
            raise ValueError(f"unknown model {self.model!r}")
        if not (self.k1 > 0 and self.k2 > 0):
            raise ValueError("scale factors must be positive")
        object.__setattr__(self, "center", complex(self.center))

    def _polar_map(self, r: float, theta: float) -> Tuple[float, float]:
        rp = r * math.sqrt(
            self.k1**2 * math.cos(theta) ** 2 + self.k2**2 * math.sin(theta) ** 2
        )
        # atan2 keeps the image angle in the quadrant of theta
        tp = math.atan2(self.k2 * math.sin(theta), self.k1 * math.cos(theta))
        return rp, tp

    def apply(self, z):
        if self.model == "euclidean":
            w = complex(z) - self.center
            if w == 0:
                return self.center
            rp, tp = self._polar_map(abs(w), cmath.phase(w))
            return self.center + rp * cmath.exp(1j * tp)
        if self.model == "hyperbolic":
            w = hy.h_translate(-self.center, z)
            if w == 0:
                return self.center
            d = 2.0 * math.atanh(abs(w))
            dp, tp = self._polar_map(d, cmath.phase(w))
            return hy.h_translate(self.center, math.tanh(dp / 2.0) * cmath.exp(1j * tp))
        w = sp.s_translate(-self.center, z)
        if w.is_infinity:
            raise sp.AntipodalPointsError(
                "the antipode of the center has no polar angle; its image is ambiguous"
            )
        w = w.value
        if w == 0:
            return sp.SPoint(self.center)
        d = 2.0 * math.atan(abs(w))
        dp, tp = self._polar_map(d, cmath.phase(w))
        if dp >= math.pi:
            raise sp.SphericalRangeError(
                f"asymmetric dilation sends a point at distance {d!r} to or past the antipode"
            )
        return sp.s_translate(self.center, math.tan(dp / 2.0) * cmath.exp(1j * tp))

    def inverse(self) -> "AsymmetricDilation":
        return AsymmetricDilation(
            model=self.model, k1=1.0 / self.k1, k2=1.0 / self.k2, center=self.center
        )

    def distance_bound(self, d: float) -> float:
        b = max(self.k1, self.k2) * d
        return min(b, math.pi) if self.model == "spherical" else b


def asym_dilate(a: AsymmetricDilation, z):
    """Module-level alias of AsymmetricDilation.apply."""
    return a.apply(z)


@dataclass
class SuiteReport:
    suite: str
    seed: int
    params: dict
    runs: List[dict]
    verdict: str
    worst_margin: float
    timestamp: str = field(default_factory=_now)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "params": self.params,
            "runs": self.runs,
            "verdict": self.verdict,
            "worst_margin": self.worst_margin,
            "timestamp": self.timestamp,
        }


def _run_theorem_suite(
    suite: str,
    model: str,
    polygons: int,
    trials: int,
    samples_per_segment: int,
    seed: SeedLike,
    k_range: Tuple[float, float],
    center_spread: float,
    tolerances: Tolerances,
) -> SuiteReport:
    seed = as_seed(seed)
    runs = []
    worst = 0.0
    violations = 0
    for i in range(polygons):
        rng = rng_stream(seed, i + 1)
        poly0 = random_convex_polygon(model, rng, tolerances=tolerances)
        d = rng.uniform(0.0, center_spread)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        if model == "hyperbolic":
            c = math.tanh(d / 2.0) * cmath.exp(1j * phi)
            mapping_cls = hy.HDilation
        else:
            c = math.tan(d / 2.0) * cmath.exp(1j * phi)
            mapping_cls = sp.SDilation
        poly = translate_polygon(poly0, c)
        k = rng.uniform(*k_range)
        region = dilate_region(poly, mapping_cls(c=c, k=k), tolerances)
        checker_seed = int(rng.integers(0, 2**63))
        rep = check_convex(region, trials, samples_per_segment, checker_seed, tolerances)
        if rep.witness is not None:
            violations += 1
            worst = max(worst, rep.witness.margin)
        runs.append(
            {
                "polygon": i,
                "k": k,
                "center": _point_to_json(model, c),
                "checker_seed": checker_seed,
                "region": region_to_json(region),
                "report": rep.to_dict(),
            }
        )
    return SuiteReport(
        suite=suite,
        seed=seed.value,
        params={
            "model": model,
            "polygons": polygons,
            "trials": trials,
            "samples_per_segment": samples_per_segment,
            "k_range": list(k_range),
            "violations": violations,
        },
        runs=runs,
        verdict="pass" if violations == 0 else "fail",
        worst_margin=worst,
    )


def run_theorem1_suite(
    polygons: int = 200,
    trials: int = 1000,
    samples_per_segment: int = 8,
    seed: SeedLike = DEFAULT_SEED,
    k_range: Tuple[float, float] = (1.0, 5.0),
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SuiteReport:
    """Random h-convex polygons about random centers, expanded by k in k_range.

    With the default expansion range the expectation is zero violations;
    passing a contraction range is the deliberate hypothesis-violation mode
    and is expected to fail.
    """
    return _run_theorem_suite(
        "theorem1",
        "hyperbolic",
        polygons,
        trials,
        samples_per_segment,
        seed,
        k_range,
        center_spread=1.5,
        tolerances=tolerances,
    )


def run_theorem2_suite(
    polygons: int = 200,
    trials: int = 1000,
    samples_per_segment: int = 8,
    seed: SeedLike = DEFAULT_SEED,
    k_range: Tuple[float, float] = (0.2, 1.0),
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SuiteReport:
    """Random hemisphere-contained s-convex polygons contracted about their
    center; zero violations expected for k <= 1."""
    return _run_theorem_suite(
        "theorem2",
        "spherical",
        polygons,
        trials,
        samples_per_segment,
        seed,
        k_range,
        center_spread=1.5,
        tolerances=tolerances,
    )


# ---------------------------------------------------------------------------
# Counterexamples
# ---------------------------------------------------------------------------


def _klein_collinearity_residual(points) -> float:
    """Perpendicular offset of the middle point from the straightened line
    through the outer two."""
    a, m, b = (poincare_to_klein(p) for p in points)
    chord = b - a
    return abs((m - a).real * chord.imag - (m - a).imag * chord.real) / abs(chord)


def _witness_payload(model: str, u, v, t: float, point, margin: float) -> dict:
    return {
        "u": _point_to_json(model, u),
        "v": _point_to_json(model, v),
        "t": t,
        "point": _point_to_json(model, point),
        "margin": margin,
    }


def _case_h_contract_halfplane(tol: Tolerances) -> dict:
    # closed half-plane bounded by the geodesic |z - 1.25| = 0.75 (origin
    # side), contracted by k = 1/2 about 0
    bc, br, k = 1.25, 0.75, 0.5
    base = OracleRegion(
        model="hyperbolic",
        fn=lambda z: abs(complex(z) - bc) >= br - 1e-12,
        center=0j,
        bounding_radius=2.0 * math.atanh(1.0 - 1e-9),
        name="hyperbolic-half-plane",
        params={"boundary_center": [bc, 0.0], "boundary_radius": br},
        tolerances=tol,
    )
    mapping = hy.HDilation(c=0, k=k)
    region = dilate_region(base, mapping, tol)
    # boundary points of the geodesic near its ideal endpoints
    psi = 2.35
    u0 = bc + br * cmath.exp(1j * psi)
    v0 = u0.conjugate()
    u, v = mapping.apply(u0), mapping.apply(v0)
    t = 0.5
    point = hy.h_segment_point(u, v, t)
    margin = escape_margin(region, point, tol)
    return {
        "case": "h-contract-halfplane",
        "params": {"boundary_center": [bc, 0.0], "boundary_radius": br, "k": k, "psi": psi},
        "region": region_to_json(region),
        "witness": _witness_payload("hyperbolic", u, v, t, point, margin),
        "diagnostics": {
            "boundary_points_inside": bool(region._inside(u) and region._inside(v)),
        },
        "verdict": "violation" if margin > tol.margin else "no-violation-found",
    }


def _case_dilate_outside_point(tol: Tolerances) -> dict:
    # geodesic segment dilated about a point off its carrier: the image is
    # not a geodesic, so the segment between the image endpoints escapes
    seg_a, seg_b = -0.6 + 0j, 0.6 + 0j
    c, k = 0.4j, 2.0
    base = GeodesicPolygon("hyperbolic", [seg_a, seg_b], tolerances=tol)
    mapping = hy.HDilation(c=c, k=k)
    region = dilate_region(base, mapping, tol)
    samples = [hy.h_segment_point(seg_a, seg_b, t) for t in (0.0, 0.5, 1.0)]
    images = [mapping.apply(p) for p in samples]
    residual = _klein_collinearity_residual(images)
    on_segment = hy.HDilation(c=0, k=k)
    control = _klein_collinearity_residual([on_segment.apply(p) for p in samples])
    u, v = images[0], images[2]
    t = 0.5
    point = hy.h_segment_point(u, v, t)
    margin = escape_margin(region, point, tol)
    return {
        "case": "dilate-outside-point",
        "params": {"segment": [[seg_a.real, seg_a.imag], [seg_b.real, seg_b.imag]], "center": [0.0, 0.4], "k": k},
        "region": region_to_json(region),
        "witness": _witness_payload("hyperbolic", u, v, t, point, margin),
        "diagnostics": {
            "collinearity_residual": residual,
            "residual_with_center_on_segment": control,
        },
        "verdict": "violation" if margin > tol.margin and residual > 1e-3 else "no-violation-found",
    }


def _case_s_expand_long_geodesic(tol: Tolerances) -> dict:
    # geodesic through 0 of length 0.98 pi, expanded by k = 1.05: the image
    # holds an antipodal pair, and only the whole sphere is s-convex with one
    half_length = 0.49 * math.pi
    k = 1.05
    e1 = math.tan(half_length / 2.0) + 0j
    e2 = -e1
    base = GeodesicPolygon("spherical", [e1, e2], center=sp.SPoint(0), tolerances=tol)
    mapping = sp.SDilation(c=0, k=k)
    region = dilate_region(base, mapping, tol)
    u = mapping.apply(e1)
    v = mapping.apply(e2)
    pair_b = sp.antipode(u)
    pair_inside = region._inside(u) and region._inside(pair_b)
    pair_dist = sp.s_dist(u, pair_b)
    t = 0.47  # off-center: the exact midpoint of this segment is infinity
    point = sp.s_segment_point(u, v, t)
    margin = escape_margin(region, point, tol)
    antipodal_flag = pair_inside and pair_dist >= math.pi - 1e-6
    return {
        "case": "s-expand-long-geodesic",
        "params": {"length": 2 * half_length, "k": k},
        "region": region_to_json(region),
        "witness": _witness_payload("spherical", u, v, t, point, margin),
        "diagnostics": {
            "antipodal_pair": [_point_to_json("spherical", u), _point_to_json("spherical", pair_b)],
            "antipodal_pair_distance": pair_dist,
            "antipodal_pair_inside": pair_inside,
        },
        "verdict": "violation" if margin > tol.margin and antipodal_flag else "no-violation-found",
    }


def _case_s_contract_beyond_hemisphere(tol: Tolerances) -> dict:
    # the plotted configuration: hull of {0, tan(0.45 pi) e^{i pi/6},
    # tan(0.45 pi) e^{i pi/3}} contracted by 0.9 about 0
    t_mod = math.tan(0.45 * math.pi)
    v1 = t_mod * cmath.exp(1j * math.pi / 6.0)
    v2 = t_mod * cmath.exp(1j * math.pi / 3.0)
    k = 0.9
    base = hull("spherical", [0, v1, v2], tolerances=tol)
    mapping = sp.SDilation(c=0, k=k)
    region = dilate_region(base, mapping, tol)
    u = mapping.apply(v1)
    v = mapping.apply(v2)
    t = 0.5
    point = sp.s_segment_point(u, v, t)
    margin = escape_margin(region, point, tol)
    return {
        "case": "s-contract-beyond-hemisphere",
        "params": {
            "hull_points": [[0.0, 0.0], [v1.real, v1.imag], [v2.real, v2.imag]],
            "k": k,
        },
        "region": region_to_json(region),
        "witness": _witness_payload("spherical", u, v, t, point, margin),
        "diagnostics": {
            "hemisphere_note_present": any("hemisphere" in n for n in region.notes),
        },
        "verdict": "violation" if margin > tol.margin else "no-violation-found",
    }


_CASE_BUILDERS = {
    "h-contract-halfplane": _case_h_contract_halfplane,
    "dilate-outside-point": _case_dilate_outside_point,
    "s-expand-long-geodesic": _case_s_expand_long_geodesic,
    "s-contract-beyond-hemisphere": _case_s_contract_beyond_hemisphere,
}


def run_counterexample(
    case: str, seed: SeedLike = DEFAULT_SEED, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> dict:
    """Build one hypothesis-necessity counterexample and its violation witness.

    Constructions are deterministic; the seed is recorded for report parity.
    """
    if case not in _CASE_BUILDERS:
        raise ValueError(f"unknown case {case!r}; expected one of {COUNTEREXAMPLE_CASES}")
    rep = _CASE_BUILDERS[case](tolerances)
    rep["seed"] = as_seed(seed).value
    return rep


def run_counterexamples(
    seed: SeedLike = DEFAULT_SEED, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SuiteReport:
    runs = [run_counterexample(c, seed, tolerances) for c in COUNTEREXAMPLE_CASES]
    margins = [r["witness"]["margin"] for r in runs]
    ok = all(r["verdict"] == "violation" and r["witness"]["margin"] > 1e-3 for r in runs)
    return SuiteReport(
        suite="counterexamples",
        seed=as_seed(seed).value,
        params={"cases": list(COUNTEREXAMPLE_CASES)},
        runs=runs,
        verdict="pass" if ok else "fail",
        worst_margin=min(margins),
    )


# ---------------------------------------------------------------------------
# Proof-internal consistency
# ---------------------------------------------------------------------------


def _hyp_consistency(samples: int, seed, tol: Tolerances) -> dict:
    rng = rng_stream(seed, 1)
    worst_geo = worst_s1 = worst_ineq = worst_curv = 0.0
    h = tol.fd_step
    for _ in range(samples):
        g1, g2 = rng.uniform(0.05, 2.5), rng.uniform(0.05, 2.5)
        t1 = rng.uniform(0.0, math.pi - 0.2)
        t2 = t1 + rng.uniform(0.1, math.pi - 0.1 - t1)
        lam = t1 + rng.uniform(0.05, 0.95) * (t2 - t1)
        s = rng.uniform(0.02, 1.0)
        rc = hy.RadialComparison(gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=lam, s=s)
        x1 = math.tanh(g1 * s) * cmath.exp(1j * t1)
        x2 = math.tanh(g2 * s) * cmath.exp(1j * t2)
        geo = hy.h_ray_arc_intersect(hy.h_geodesic_through(x1, x2), lam)
        cf = hy.h_rho_closed_form(rc)
        worst_geo = max(worst_geo, abs(math.atanh(geo) - cf))

        rc1 = hy.RadialComparison(gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=lam, s=1.0)
        worst_s1 = max(worst_s1, abs(hy.h_rho_closed_form(rc1) - hy.h_r_closed_form(rc1)))

        worst_ineq = max(worst_ineq, hy.h_r_closed_form(rc) - cf)

        def rho_of_s(sv: float) -> float:
            return hy.h_rho_closed_form(
                hy.RadialComparison(gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=lam, s=sv)
            )

        s_fd = max(s, 2.0 * h)
        worst_curv = max(worst_curv, second_fd(rho_of_s, s_fd, h))

    # endpoint limit: the ray at lam -> theta1 recovers the first endpoint
    g1, g2, t1, t2 = 0.7, 1.1, 0.3, 1.8
    rc = hy.RadialComparison(
        gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=t1 + 1e-9 * (t2 - t1), s=1.0
    )
    endpoint = max(
        abs(hy.h_rho_closed_form(rc) - g1), abs(hy.h_r_closed_form(rc) - g1)
    )
    return {
        "geometry": "hyperbolic",
        "samples": samples,
        "worst_closed_vs_geometric": worst_geo,
        "worst_s1_equality": worst_s1,
        "worst_inequality_deficit": worst_ineq,
        "worst_curvature_sign": worst_curv,
        "curvature_kind": "concave",
        "endpoint_limit_error": endpoint,
    }


def _sph_consistency(samples: int, seed, tol: Tolerances) -> dict:
    rng = rng_stream(seed, 2)
    worst_geo = worst_s1 = worst_ineq = 0.0
    worst_curv = 0.0
    h = tol.fd_step
    for _ in range(samples):
        g1 = rng.uniform(0.05, math.pi / 4 - 0.05)
        g2 = rng.uniform(0.05, math.pi / 4 - 0.05)
        sstar = (math.pi / 4.0) / max(g1, g2)
        s = rng.uniform(1.0, sstar)
        t1 = rng.uniform(0.0, math.pi - 0.2)
        t2 = t1 + rng.uniform(0.1, math.pi - 0.1 - t1)
        lam = t1 + rng.uniform(0.05, 0.95) * (t2 - t1)
        rc = sp.SRadialComparison(gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=lam, s=s)
        x1 = math.tan(g1 * s) * cmath.exp(1j * t1)
        x2 = math.tan(g2 * s) * cmath.exp(1j * t2)
        geo = sp.s_ray_arc_intersect(sp.s_geodesic_through(x1, x2), lam)
        cf = sp.s_rho_closed_form(rc)
        worst_geo = max(worst_geo, abs(math.atan(geo) - cf))

        rc1 = sp.SRadialComparison(gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=lam, s=1.0)
        worst_s1 = max(worst_s1, abs(sp.s_rho_closed_form(rc1) - sp.s_r_closed_form(rc1)))

        worst_ineq = max(worst_ineq, sp.s_r_closed_form(rc) - cf)

        def rho_of_s(sv: float) -> float:
            sd = math.sin(t2 - t1)
            den = (
                (1.0 / math.tan(2.0 * g1 * sv)) * math.sin(t2 - lam)
                + (1.0 / math.tan(2.0 * g2 * sv)) * math.sin(lam - t1)
            )
            den = max(den, 0.0)
            return math.pi / 4.0 if den == 0.0 else 0.5 * math.atan(sd / den)

        s_fd = min(max(s, 2.0 * h), sstar - 2.0 * h)
        worst_curv = min(worst_curv, second_fd(rho_of_s, s_fd, h))

    g1, g2, t1, t2 = 0.4, 0.6, 0.3, 1.8
    rc = sp.SRadialComparison(
        gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=t1 + 1e-9 * (t2 - t1), s=1.0
    )
    endpoint = max(
        abs(sp.s_rho_closed_form(rc) - g1), abs(sp.s_r_closed_form(rc) - g1)
    )
    return {
        "geometry": "spherical",
        "samples": samples,
        "worst_closed_vs_geometric": worst_geo,
        "worst_s1_equality": worst_s1,
        "worst_inequality_deficit": worst_ineq,
        "worst_curvature_sign": worst_curv,
        "curvature_kind": "convex",
        "endpoint_limit_error": endpoint,
    }


def run_proof_consistency(
    samples: int = 10000,
    seed: SeedLike = DEFAULT_SEED,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SuiteReport:
    """Randomized agreement checks between the geometric construction and the
    closed forms, the s = 1 anchors, curvature signs in s, and the radial
    inequality, per geometry."""
    seed = as_seed(seed)
    hyp = _hyp_consistency(samples, seed, tolerances)
    sph = _sph_consistency(samples, seed, tolerances)
    ok = (
        hyp["worst_closed_vs_geometric"] <= 1e-10
        and hyp["worst_s1_equality"] <= 1e-12
        and hyp["worst_inequality_deficit"] <= 1e-12
        and hyp["worst_curvature_sign"] <= tolerances.fd_tol
        and hyp["endpoint_limit_error"] <= 1e-6
        and sph["worst_closed_vs_geometric"] <= 1e-10
        and sph["worst_s1_equality"] <= 1e-12
        and sph["worst_inequality_deficit"] <= 1e-12
        and sph["worst_curvature_sign"] >= -tolerances.fd_tol
        and sph["endpoint_limit_error"] <= 1e-6
    )
    return SuiteReport(
        suite="proof-consistency",
        seed=seed.value,
        params={"samples": samples},
        runs=[hyp, sph],
        verdict="pass" if ok else "fail",
        worst_margin=max(hyp["worst_inequality_deficit"], sph["worst_inequality_deficit"]),
    )


# ---------------------------------------------------------------------------
# Lemma certification suites
# ---------------------------------------------------------------------------


def run_lemma_suite(
    kind: str,
    tuples: int = 200,
    boundary_tuples: int = 20,
    seed: SeedLike = DEFAULT_SEED,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SuiteReport:
    """Curvature certification over random parameter tuples plus the exact
    k1 + k2 = 1 boundary family.

    Random sums stay >= 1.05 and boundary rates <= 0.3 so the profile values
    stay small enough for the fd_tol budget; see the lemmas module notes.
    """
    from .lemmas import LemmaParams, certify_curvature

    if kind not in ("hyp", "sph"):
        raise ValueError(f"kind must be 'hyp' or 'sph', got {kind!r}")
    seed = as_seed(seed)
    rng = rng_stream(seed, 0)
    runs = []
    worst = 0.0 if kind == "hyp" else 0.0
    all_ok = True
    for i in range(tuples):
        total = rng.uniform(1.05, 4.0)
        k1 = rng.uniform(0.05, total - 0.05)
        p = LemmaParams(
            k1=k1, k2=total - k1, u1=rng.uniform(0.05, 3.0), u2=rng.uniform(0.05, 3.0)
        )
        rep = certify_curvature(kind, p, tolerances=tolerances)
        all_ok = all_ok and rep.passed
        worst = max(worst, rep.worst_value) if kind == "hyp" else min(worst, rep.worst_value)
        runs.append({"family": "random", **rep.to_dict()})
    for i in range(boundary_tuples):
        k1 = rng.uniform(0.05, 0.95)
        p = LemmaParams(
            k1=k1, k2=1.0 - k1, u1=rng.uniform(0.05, 0.3), u2=rng.uniform(0.05, 0.3)
        )
        rep = certify_curvature(kind, p, tolerances=tolerances)
        all_ok = all_ok and rep.passed
        worst = max(worst, rep.worst_value) if kind == "hyp" else min(worst, rep.worst_value)
        runs.append({"family": "boundary", **rep.to_dict()})
    return SuiteReport(
        suite="lemma3" if kind == "hyp" else "lemma4",
        seed=seed.value,
        params={
            "tuples": tuples,
            "boundary_tuples": boundary_tuples,
            "fd_step": tolerances.fd_step,
            "fd_tol": tolerances.fd_tol,
        },
        runs=runs,
        verdict="pass" if all_ok else "fail",
        worst_margin=worst,
    )


# ---------------------------------------------------------------------------
# Conjecture scan
# ---------------------------------------------------------------------------


def run_conjecture_scan(
    model: str,
    polygons: int = 100,
    trials: int = 500,
    samples_per_segment: int = 8,
    seed: SeedLike = DEFAULT_SEED,
    k1_range: Optional[Tuple[float, float]] = None,
    k2_range: Optional[Tuple[float, float]] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SuiteReport:
    """Convexity scan under asymmetric dilation of random convex polygons.

    Within the conjectured hypotheses (both factors >= 1 hyperbolic, <= 1
    spherical) a violation would be a potential counterexample; outside them
    outcomes are recorded without expectation. Never claims a proof.
    """
    if model == "hyperbolic":
        k1_range = k1_range or (1.0, 3.0)
        k2_range = k2_range or (1.0, 3.0)
        respected = min(k1_range[0], k2_range[0]) >= 1.0
    elif model == "spherical":
        k1_range = k1_range or (0.2, 1.0)
        k2_range = k2_range or (0.2, 1.0)
        respected = max(k1_range[1], k2_range[1]) <= 1.0
    else:
        raise ValueError(f"conjecture scan supports hyperbolic or spherical, got {model!r}")
    seed = as_seed(seed)
    runs = []
    worst = 0.0
    violations = 0
    for i in range(polygons):
        rng = rng_stream(seed, i + 1)
        poly = random_convex_polygon(model, rng, tolerances=tolerances)
        k1 = rng.uniform(*k1_range)
        k2 = rng.uniform(*k2_range)
        mapping = AsymmetricDilation(model=model, k1=k1, k2=k2, center=0j)
        region = dilate_region(poly, mapping, tolerances)
        checker_seed = int(rng.integers(0, 2**63))
        rep = check_convex(region, trials, samples_per_segment, checker_seed, tolerances)
        if rep.witness is not None:
            violations += 1
            worst = max(worst, rep.witness.margin)
        runs.append(
            {
                "polygon": i,
                "k1": k1,
                "k2": k2,
                "checker_seed": checker_seed,
                "region": region_to_json(region),
                "report": rep.to_dict(),
            }
        )
    if not respected:
        verdict = "recorded"
    else:
        verdict = "pass" if violations == 0 else "fail"
    return SuiteReport(
        suite="conjecture",
        seed=seed.value,
        params={
            "model": model,
            "polygons": polygons,
            "trials": trials,
            "k1_range": list(k1_range),
            "k2_range": list(k2_range),
            "interpretation": AsymmetricDilation.interpretation,
            "hypothesis_respected": respected,
            "violations": violations,
            "note": "experimental scan; supports or probes the conjecture, proves nothing",
        },
        runs=runs,
        verdict=verdict,
        worst_margin=worst,
    )
