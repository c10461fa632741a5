import math

import mpmath
import numpy as np
import pytest

from geocvx.hyperbolic import RadialComparison, h_rho_closed_form
from geocvx.lemmas import (
    LemmaParams,
    certify_curvature,
    default_grid,
    f_hyp,
    f_sph,
    hyp_domain_edge,
    x_star,
)
from geocvx.numerics import rng_stream
from geocvx.spherical import SRadialComparison, s_rho_closed_form

mpmath.mp.dps = 40


class TestLemmaParams:
    def test_positivity(self):
        with pytest.raises(ValueError):
            LemmaParams(k1=0.0, k2=1.0, u1=1.0, u2=1.0)
        with pytest.raises(ValueError):
            LemmaParams(k1=0.5, k2=0.6, u1=-1.0, u2=1.0)

    def test_hypothesis_flag(self):
        assert LemmaParams(k1=0.5, k2=0.5, u1=1.0, u2=2.0).meets_hypothesis
        assert not LemmaParams(k1=0.15, k2=0.15, u1=1.0, u2=1.5).meets_hypothesis

    def test_x_star(self):
        p = LemmaParams(k1=0.5, k2=0.5, u1=1.0, u2=2.0)
        assert x_star(p) == pytest.approx(math.pi / 4, abs=1e-15)


class TestFHyp:
    def test_equal_weights_reduce_to_linear(self):
        p = LemmaParams(k1=0.5, k2=0.5, u1=1.3, u2=1.3)
        for x in (0.1, 1.0, 5.0, 18.0):
            assert f_hyp(p, x) == pytest.approx(1.3 * x, rel=1e-12)

    def test_large_x_limit(self):
        p = LemmaParams(k1=0.8, k2=0.9, u1=1.0, u2=2.0)
        assert f_hyp(p, 50.0) == pytest.approx(math.atanh(1 / 1.7), abs=1e-12)

    def test_direct_oracle(self):
        p = LemmaParams(k1=0.7, k2=0.6, u1=1.0, u2=2.0)
        assert f_hyp(p, 0.5) == pytest.approx(0.46517654401030867, abs=1e-15)

    def test_domain(self):
        p = LemmaParams(k1=0.7, k2=0.6, u1=1.0, u2=2.0)
        with pytest.raises(ValueError):
            f_hyp(p, 0.0)
        with pytest.raises(ValueError):
            f_hyp(p, -1.0)

    def test_off_hypothesis_domain_edge(self):
        p = LemmaParams(k1=0.15, k2=0.15, u1=1.0, u2=1.5)
        edge = hyp_domain_edge(p)
        assert 0.2 < edge < 0.3
        f_hyp(p, 0.9 * edge)  # still defined
        with pytest.raises(ValueError):
            f_hyp(p, 2 * edge)
        assert hyp_domain_edge(LemmaParams(k1=0.5, k2=0.5, u1=1, u2=1)) == math.inf


class TestFSph:
    def test_equal_weights_reduce_to_linear(self):
        p = LemmaParams(k1=0.5, k2=0.5, u1=0.8, u2=0.8)
        for x in (0.1, 0.9, 1.5):
            assert f_sph(p, x) == pytest.approx(0.8 * x, rel=1e-12)

    def test_boundary_hits_quarter_turn(self):
        p = LemmaParams(k1=0.4, k2=0.6, u1=1.0, u2=1.0)
        assert f_sph(p, x_star(p)) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_direct_oracle(self):
        p = LemmaParams(k1=0.7, k2=0.6, u1=1.0, u2=2.0)
        assert f_sph(p, 0.3) == pytest.approx(0.30832235973922517, abs=1e-15)

    def test_domain(self):
        p = LemmaParams(k1=0.7, k2=0.6, u1=1.0, u2=2.0)
        with pytest.raises(ValueError):
            f_sph(p, 0.0)
        with pytest.raises(ValueError):
            f_sph(p, x_star(p) + 0.01)


class TestCertify:
    def test_hyp_random_params_concave(self):
        rng = rng_stream(51, 0)
        for _ in range(30):
            total = rng.uniform(1.05, 4.0)
            k1 = rng.uniform(0.05, total - 0.05)
            p = LemmaParams(k1=k1, k2=total - k1, u1=rng.uniform(0.05, 3.0), u2=rng.uniform(0.05, 3.0))
            rep = certify_curvature("hyp", p)
            assert rep.passed, (p, rep.worst_value, rep.worst_x)
            assert rep.worst_value <= 1e-6

    def test_sph_random_params_convex(self):
        rng = rng_stream(52, 0)
        for _ in range(30):
            total = rng.uniform(1.05, 4.0)
            k1 = rng.uniform(0.05, total - 0.05)
            p = LemmaParams(k1=k1, k2=total - k1, u1=rng.uniform(0.05, 3.0), u2=rng.uniform(0.05, 3.0))
            rep = certify_curvature("sph", p)
            assert rep.passed, (p, rep.worst_value, rep.worst_x)
            assert rep.worst_value >= -1e-6

    def test_linear_anchor_family(self):
        # k1 + k2 = 1 with equal rates: both profiles are exactly linear
        rng = rng_stream(53, 0)
        for _ in range(10):
            k1 = rng.uniform(0.05, 0.95)
            u = rng.uniform(0.05, 0.3)
            p = LemmaParams(k1=k1, k2=1.0 - k1, u1=u, u2=u)
            for kind in ("hyp", "sph"):
                rep = certify_curvature(kind, p)
                assert rep.passed
                assert abs(rep.worst_value) <= 1e-6

    def test_violated_hypothesis_detected(self):
        # k1 + k2 = 0.3 breaks concavity inside the residual domain
        p = LemmaParams(k1=0.15, k2=0.15, u1=1.0, u2=1.5)
        edge = hyp_domain_edge(p)
        grid = np.logspace(math.log10(1e-3), math.log10(0.95 * edge), 128)
        rep = certify_curvature("hyp", p, grid=grid)
        assert not rep.passed
        assert rep.worst_value > 1e-6

    def test_grid_outside_domain_aborts_with_location(self):
        p = LemmaParams(k1=0.7, k2=0.6, u1=1.0, u2=2.0)
        with pytest.raises(ValueError, match="0.8"):
            certify_curvature("sph", p, grid=np.array([0.5, 0.8]))

    def test_report_payload(self):
        p = LemmaParams(k1=0.7, k2=0.6, u1=1.0, u2=2.0)
        rep = certify_curvature("hyp", p)
        d = rep.to_dict()
        assert d["kind"] == "hyp"
        assert d["passed"] is True
        assert d["grid"]["points"] == 512
        assert "worst_value" in d and "worst_x" in d

    def test_default_grid_respects_domain(self):
        p = LemmaParams(k1=0.7, k2=0.6, u1=2.0, u2=0.5)
        g = default_grid("sph", p)
        assert g[0] >= 1e-3
        assert g[-1] <= x_star(p) - 2e-4 + 1e-12


class TestTheoremConnection:
    def test_hyp_profile_matches_chord_crossing(self):
        # the concave profile evaluated at the pullback exponent equals twice
        # the hyperbolic chord-crossing closed form
        rng = rng_stream(54, 0)
        for _ in range(200):
            g1, g2 = rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)
            t1 = rng.uniform(0.0, 2.0)
            t2 = t1 + rng.uniform(0.2, math.pi - 0.3 - t1) if t1 < math.pi - 0.5 else t1 + 0.2
            t2 = min(t2, math.pi - 1e-3)
            lam = t1 + rng.uniform(0.1, 0.9) * (t2 - t1)
            s = rng.uniform(0.05, 1.0)
            sd = math.sin(t2 - t1)
            p = LemmaParams(
                k1=math.sin(t2 - lam) / sd,
                k2=math.sin(lam - t1) / sd,
                u1=2 * g1,
                u2=2 * g2,
            )
            assert p.meets_hypothesis  # sin(a) + sin(b) >= sin(a+b) on [0, pi]
            rc = RadialComparison(gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=lam, s=s)
            assert f_hyp(p, s) == pytest.approx(2 * h_rho_closed_form(rc), abs=1e-12)

    def test_sph_profile_matches_chord_crossing(self):
        rng = rng_stream(55, 0)
        for _ in range(200):
            g1 = rng.uniform(0.1, math.pi / 4 - 0.02)
            g2 = rng.uniform(0.1, math.pi / 4 - 0.02)
            t1 = rng.uniform(0.0, 2.0)
            t2 = min(t1 + rng.uniform(0.2, 1.0), math.pi - 1e-3)
            lam = t1 + rng.uniform(0.1, 0.9) * (t2 - t1)
            s = rng.uniform(1.0, (math.pi / 4) / max(g1, g2))
            sd = math.sin(t2 - t1)
            p = LemmaParams(
                k1=math.sin(t2 - lam) / sd,
                k2=math.sin(lam - t1) / sd,
                u1=2 * g1,
                u2=2 * g2,
            )
            rc = SRadialComparison(gamma1=g1, gamma2=g2, theta1=t1, theta2=t2, lam=lam, s=s)
            assert f_sph(p, s) == pytest.approx(2 * s_rho_closed_form(rc), abs=1e-12)
