import cmath
import math

import pytest

from geocvx.convexity import (
    ChartScaling,
    ConvexityReport,
    GeodesicPolygon,
    HemisphereError,
    OracleRegion,
    SamplingError,
    check_convex,
    dilate_region,
    escape_margin,
    hull,
    points_from_json,
    points_to_json,
    radial_farthest,
    random_convex_polygon,
    region_from_json,
    region_to_json,
    translate_polygon,
)
from geocvx.hyperbolic import HDilation, h_dist, h_geodesic_through, h_ray_arc_intersect, h_segment_point
from geocvx.models import poincare_to_klein
from geocvx.numerics import rng_stream
from geocvx.spherical import INF, SDilation, SPoint, s_dist, s_segment_point


class TestHullHyperbolic:
    def test_triangle_keeps_all_vertices(self):
        p = hull("hyperbolic", [0.5, 0.5j, -0.3 - 0.1j])
        assert len(p.vertices) == 3
        assert set(p.vertices) == {0.5 + 0j, 0.5j, -0.3 - 0.1j}

    def test_collinear_keeps_extremes(self):
        pts = [h_segment_point(-0.5, 0.6, t) for t in (0.0, 0.3, 0.55, 1.0)]
        p = hull("hyperbolic", pts)
        assert len(p.vertices) == 2
        assert set(p.vertices) == {pts[0], pts[-1]}

    def test_interior_point_dropped(self):
        p = hull("hyperbolic", [0.5, 0.5j, -0.5, -0.5j, 0.01 + 0.01j])
        assert len(p.vertices) == 4

    def test_single_point(self):
        p = hull("hyperbolic", [0.2 + 0.1j])
        assert p.vertices == (0.2 + 0.1j,)
        assert p.contains(0.2 + 0.1j)
        assert not p.contains(0.3)

    def test_idempotent(self):
        rng = rng_stream(41, 0)
        for _ in range(20):
            pts = [
                math.tanh(rng.uniform(0, 2.5) / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
                for _ in range(8)
            ]
            p = hull("hyperbolic", pts)
            q = hull("hyperbolic", list(p.vertices))
            assert set(p.vertices) == set(q.vertices)

    def test_ccw_order(self):
        p = hull("hyperbolic", [0.5, 0.5j, -0.5, -0.5j])
        ws = [poincare_to_klein(v) for v in p.vertices]
        area2 = sum(
            ws[i].real * ws[(i + 1) % 4].imag - ws[(i + 1) % 4].real * ws[i].imag
            for i in range(4)
        )
        assert area2 > 0

    def test_brute_force_agreement(self):
        # a point is a hull vertex iff no triangle of the others contains it
        def brute_vertices(chart):
            n = len(chart)
            out = []
            for i in range(n):
                others = [chart[j] for j in range(n) if j != i]
                covered = False
                for a in range(len(others)):
                    for b in range(a + 1, len(others)):
                        for c in range(b + 1, len(others)):
                            if _tri_contains(others[a], others[b], others[c], chart[i]):
                                covered = True
                if not covered:
                    out.append(i)
            return set(out)

        def _tri_contains(a, b, c, p):
            def cross(o, x, y):
                return (x.real - o.real) * (y.imag - o.imag) - (x.imag - o.imag) * (
                    y.real - o.real
                )

            d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
            neg = (d1 < 0) or (d2 < 0) or (d3 < 0)
            pos = (d1 > 0) or (d2 > 0) or (d3 > 0)
            return not (neg and pos)

        rng = rng_stream(42, 0)
        for _ in range(100):
            n = int(rng.integers(3, 9))
            pts = [
                math.tanh(rng.uniform(0, 2.5) / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
                for _ in range(n)
            ]
            p = hull("hyperbolic", pts)
            chart = [poincare_to_klein(z) for z in pts]
            expect = {pts[i] for i in brute_vertices(chart)}
            assert set(p.vertices) == expect


class TestHullSpherical:
    def test_far_triangle(self):
        t = math.tan(0.45 * math.pi)
        pts = [0, t * cmath.exp(1j * math.pi / 6), t * cmath.exp(1j * math.pi / 3)]
        p = hull("spherical", pts)
        assert len(p.vertices) == 3

    def test_no_common_hemisphere(self):
        # regular tetrahedron directions: no open hemisphere contains all four
        r = math.sqrt(2)
        pts = [0, r, r * cmath.exp(2j * math.pi / 3), r * cmath.exp(4j * math.pi / 3)]
        with pytest.raises(HemisphereError):
            hull("spherical", pts)

    def test_collinear_on_great_circle(self):
        pts = [complex(s_segment_point(-0.4, 0.5, t)) for t in (0.0, 0.5, 1.0)]
        p = hull("spherical", pts)
        assert len(p.vertices) == 2

    def test_antipodal_vertices_rejected(self):
        with pytest.raises(ValueError):
            hull("spherical", [1.0, -1.0, 0.5j])

    def test_equator_points_perturbed(self):
        # vertices exactly at distance pi/2 from the hemisphere center
        pts = [0, 1.0, 1.0j]
        p = hull("spherical", pts)
        assert len(p.vertices) == 3


class TestContains:
    def test_own_vertices(self):
        p = hull("hyperbolic", [0.5, 0.5j, -0.3])
        for v in p.vertices:
            assert p.contains(v)

    def test_far_point_outside(self):
        p = hull("hyperbolic", [0.5, 0.5j, -0.3])
        assert not p.contains(-0.9j)
        assert not p.contains(0.95)

    def test_geodesic_midpoints_inside(self):
        p = hull("hyperbolic", [0.5, 0.5j, -0.3])
        for t in (0.25, 0.5, 0.75):
            assert p.contains(h_segment_point(0.5, 0.5j, t))

    def test_spherical_contains(self):
        p = hull("spherical", [0.5, 0.5j, -0.2 - 0.2j])
        assert p.contains(0)
        assert not p.contains(INF)
        assert not p.contains(5 + 5j)


class TestDilateRegion:
    def test_identity_factor_same_membership(self):
        poly = hull("hyperbolic", [0.4, 0.5j, -0.3 - 0.2j, 0.1])
        reg = dilate_region(poly, HDilation(c=0.1, k=1.0))
        rng = rng_stream(43, 0)
        for _ in range(300):
            z = math.tanh(rng.uniform(0, 2.0) / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            assert reg.contains(z) == poly.contains(z)

    def test_vertex_images_inside(self):
        poly = hull("hyperbolic", [0.4, 0.5j, -0.3 - 0.2j, 0.0])
        d = HDilation(c=0, k=2.0)
        reg = dilate_region(poly, d)
        for v in poly.vertices:
            assert reg.contains(d.apply(v))

    def test_pullback_exactness(self):
        poly = hull("hyperbolic", [0.4, 0.5j, -0.3 - 0.2j, 0.0])
        d = HDilation(c=0.05 + 0.05j, k=1.7)
        reg = dilate_region(poly, d)
        rng = rng_stream(44, 0)
        for _ in range(200):
            z = math.tanh(rng.uniform(0, 1.5) / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            assert reg.contains(d.apply(z)) == poly.contains(z)

    def test_center_not_in_region_warns_not_raises(self):
        poly = hull("hyperbolic", [0.4, 0.5, 0.45 + 0.1j])
        reg = dilate_region(poly, HDilation(c=-0.5, k=2.0))
        assert any("center" in n for n in reg.notes)

    def test_spherical_hemisphere_note(self):
        t = math.tan(0.45 * math.pi)
        poly = hull("spherical", [0, t * cmath.exp(1j * math.pi / 6), t * cmath.exp(1j * math.pi / 3)])
        reg = dilate_region(poly, SDilation(c=0, k=0.9))
        assert any("hemisphere" in n for n in reg.notes)
        # a well-behaved contraction carries no such note
        small = hull("spherical", [0, 0.3, 0.3j])
        reg2 = dilate_region(small, SDilation(c=0, k=0.5))
        assert not any("hemisphere" in n for n in reg2.notes)


class TestCheckConvex:
    def test_hull_has_no_violation(self):
        poly = hull("hyperbolic", [0.5, 0.6j, -0.4 + 0.1j, -0.2 - 0.5j])
        rep = check_convex(poly, trials=200, samples_per_segment=6, seed=7)
        assert rep.verdict == "no-violation-found"
        assert rep.witness is None

    def test_contracted_half_plane_violates(self):
        # half-plane bounded by the geodesic |z - 1.25| = 0.75, origin side
        base = OracleRegion(
            model="hyperbolic",
            fn=lambda z: abs(complex(z) - 1.25) >= 0.75 - 1e-12,
            center=0j,
            bounding_radius=2 * 10.0,
            name="hyperbolic-half-plane",
            params={"boundary_center": [1.25, 0.0], "boundary_radius": 0.75},
        )
        reg = dilate_region(base, HDilation(c=0, k=0.5))
        rep = check_convex(reg, trials=4000, samples_per_segment=8, seed=11)
        assert rep.verdict == "violation"
        w = rep.witness
        # witness point is recomputable and really escapes
        p = h_segment_point(w.u, w.v, w.t)
        assert abs(p - w.point) <= 1e-12
        assert not reg._inside(p)
        assert w.margin > 1e-9
        assert escape_margin(reg, p) == pytest.approx(w.margin, abs=1e-9)

    def test_contracted_far_triangle_violates(self):
        # hemisphere-hypothesis violation: the extreme-pair probe exhibits the
        # thin escape of the contracted far triangle
        t = math.tan(0.45 * math.pi)
        base = hull("spherical", [0, t * cmath.exp(1j * math.pi / 6), t * cmath.exp(1j * math.pi / 3)])
        reg = dilate_region(base, SDilation(c=0, k=0.9))
        rep = check_convex(reg, trials=200, samples_per_segment=8, seed=1)
        assert rep.verdict == "violation"
        assert rep.violating_trial == -1
        assert rep.witness.margin > 1e-9

    def test_deterministic_for_seed(self):
        poly = hull("hyperbolic", [0.5, 0.6j, -0.4 + 0.1j])
        a = check_convex(poly, trials=50, samples_per_segment=4, seed=3).to_dict()
        b = check_convex(poly, trials=50, samples_per_segment=4, seed=3).to_dict()
        assert a == b

    def test_sampling_failure(self):
        tiny = OracleRegion(
            model="hyperbolic",
            fn=lambda z: abs(complex(z)) < 1e-9,
            center=0j,
            bounding_radius=20.0,
        )
        with pytest.raises(SamplingError):
            check_convex(tiny, trials=10, samples_per_segment=2, seed=1)

    def test_theorem1_as_property(self):
        rng = rng_stream(45, 0)
        for i in range(15):
            poly = random_convex_polygon("hyperbolic", rng_stream(45, i + 1))
            k = rng.uniform(1.0, 5.0)
            reg = dilate_region(poly, HDilation(c=0, k=k))
            rep = check_convex(reg, trials=150, samples_per_segment=6, seed=1000 + i)
            assert rep.verdict == "no-violation-found", (i, k, rep.witness)

    def test_theorem2_as_property(self):
        rng = rng_stream(46, 0)
        for i in range(15):
            poly = random_convex_polygon("spherical", rng_stream(46, i + 1))
            k = rng.uniform(0.2, 1.0)
            reg = dilate_region(poly, SDilation(c=0, k=k))
            rep = check_convex(reg, trials=150, samples_per_segment=6, seed=2000 + i)
            assert rep.verdict == "no-violation-found", (i, k, rep.witness)

    def test_euclidean_chart_scaling_sanity(self):
        # straight-chart dilation preserves geodesic convexity for any k
        rng = rng_stream(47, 0)
        for i, model in enumerate(["hyperbolic", "spherical"] * 5):
            poly = random_convex_polygon(model, rng_stream(47, i + 1))
            k = rng.uniform(0.2, 1.8) if model == "hyperbolic" else rng.uniform(0.2, 3.0)
            if model == "hyperbolic":
                k = min(k, 0.95 / max(abs(poincare_to_klein(v)) for v in poly.vertices))
            reg = dilate_region(poly, ChartScaling(model=model, k=k))
            rep = check_convex(reg, trials=100, samples_per_segment=6, seed=3000 + i)
            assert rep.verdict == "no-violation-found", (model, k, rep.witness)


class TestRadialFarthest:
    def test_disk_oracle(self):
        d0 = 1.3
        disk = OracleRegion(
            model="hyperbolic",
            fn=lambda z: h_dist(0, z) <= d0,
            center=0j,
            bounding_radius=d0 + 0.1,
        )
        for lam in (0.0, 1.0, 2.5, 4.4):
            got = radial_farthest(disk, lam, resolution=128)
            assert got == pytest.approx(math.tanh(d0 / 2), abs=1e-9)

    def test_half_plane_reaches_boundary(self):
        half = OracleRegion(
            model="hyperbolic",
            fn=lambda z: complex(z).real <= 0.5,
            center=0j,
            bounding_radius=2 * 11.0,
        )
        assert radial_farthest(half, math.pi, resolution=64) >= 1 - 1e-6

    def test_matches_ray_arc_intersection(self):
        # chord region bounded by the geodesic through two points
        u, v = 0.5, 0.5j
        g = h_geodesic_through(u, v)
        chord = OracleRegion(
            model="hyperbolic",
            fn=lambda z: abs(complex(z) - g.center) >= g.radius - 1e-12,
            center=0j,
            bounding_radius=2 * 11.0,
        )
        for lam in (0.3, 0.7, 1.1):
            assert radial_farthest(chord, lam, resolution=512) == pytest.approx(
                h_ray_arc_intersect(g, lam), abs=1e-9
            )


class TestTranslateAndGenerator:
    def test_random_polygon_contains_origin(self):
        for i in range(20):
            for model in ("hyperbolic", "spherical"):
                poly = random_convex_polygon(model, rng_stream(48, i))
                origin = 0j if model == "hyperbolic" else SPoint(0)
                assert poly.contains(origin)
                assert 3 <= len(poly.vertices) <= 9

    def test_translate_polygon_preserves_shape(self):
        poly = random_convex_polygon("hyperbolic", rng_stream(49, 0))
        c = 0.3 - 0.2j
        moved = translate_polygon(poly, c)
        assert moved.contains(c)
        # pairwise vertex distances are preserved
        n = len(poly.vertices)
        assert len(moved.vertices) == n
        d0 = sorted(
            h_dist(poly.vertices[i], poly.vertices[j])
            for i in range(n)
            for j in range(i + 1, n)
        )
        d1 = sorted(
            h_dist(moved.vertices[i], moved.vertices[j])
            for i in range(n)
            for j in range(i + 1, n)
        )
        for a, b in zip(d0, d1):
            assert a == pytest.approx(b, abs=1e-10)


class TestJson:
    def test_points_roundtrip(self):
        obj = points_to_json("hyperbolic", [0.5, 0.5j, -0.3 - 0.1j])
        model, pts = points_from_json(obj)
        assert model == "hyperbolic"
        assert pts == [0.5 + 0j, 0.5j, -0.3 - 0.1j]

    def test_points_validation(self):
        with pytest.raises(ValueError, match=r"model"):
            points_from_json({"points": [[0, 0]]})
        with pytest.raises(ValueError, match=r"points\[1\]"):
            points_from_json({"model": "hyperbolic", "points": [[0, 0], [1]]})

    def test_spherical_infinity(self):
        obj = points_to_json("spherical", [SPoint(1.5), INF])
        model, pts = points_from_json(obj)
        assert pts[1] == INF

    def test_region_roundtrip_polygon(self):
        poly = hull("hyperbolic", [0.5, 0.5j, -0.3])
        obj = region_to_json(poly)
        back = region_from_json(obj)
        assert region_to_json(back) == obj

    def test_region_roundtrip_dilated(self):
        poly = hull("spherical", [0, 0.4, 0.4j])
        reg = dilate_region(poly, SDilation(c=0, k=0.8))
        obj = region_to_json(reg)
        back = region_from_json(obj)
        assert region_to_json(back) == obj
        z = 0.2 + 0.1j
        assert back.contains(z) == reg.contains(z)

    def test_region_validation_path(self):
        with pytest.raises(ValueError, match="kind"):
            region_from_json({"model": "hyperbolic"})
