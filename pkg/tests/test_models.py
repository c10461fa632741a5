import cmath
import math

import pytest

from geocvx.hyperbolic import h_segment_point
from geocvx.models import (
    gnomonic_to_stereo,
    klein_to_poincare,
    poincare_to_klein,
    stereo_to_gnomonic,
)
from geocvx.numerics import rng_stream
from geocvx.spherical import s_segment_point


class TestPoincareKlein:
    def test_origin(self):
        assert poincare_to_klein(0) == 0
        assert klein_to_poincare(0) == 0

    def test_half(self):
        assert poincare_to_klein(0.5) == pytest.approx(0.8, abs=1e-16)
        assert klein_to_poincare(0.8) == pytest.approx(0.5, abs=1e-15)

    def test_roundtrip(self):
        rng = rng_stream(31, 0)
        for _ in range(2000):
            d = rng.uniform(0, 2.5)
            z = math.tanh(d / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            assert abs(klein_to_poincare(poincare_to_klein(z)) - z) <= 1e-12
            w = rng.uniform(0, 0.99) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            assert abs(poincare_to_klein(klein_to_poincare(w)) - w) <= 1e-12

    def test_boundary_limit(self):
        assert abs(klein_to_poincare(0.999999 + 0j)) < 1.0
        with pytest.raises(ValueError):
            klein_to_poincare(1.0)

    def test_geodesics_become_chords(self):
        rng = rng_stream(32, 0)
        for _ in range(100):
            u = math.tanh(rng.uniform(0.1, 2.5) / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            v = math.tanh(rng.uniform(0.1, 2.5) / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            if abs(u - v) < 1e-6:
                continue
            a, b = poincare_to_klein(u), poincare_to_klein(v)
            for t in (0.1, 0.3, 0.5, 0.7, 0.9):
                w = poincare_to_klein(h_segment_point(u, v, t))
                # distance from w to the straight chord a-b
                chord = b - a
                off = ((w - a).real * chord.imag - (w - a).imag * chord.real) / abs(chord)
                assert abs(off) <= 1e-10


class TestStereoGnomonic:
    def test_origin(self):
        assert stereo_to_gnomonic(0) == 0
        assert gnomonic_to_stereo(0) == 0

    def test_half(self):
        assert stereo_to_gnomonic(0.5) == pytest.approx(4 / 3, abs=1e-15)
        assert gnomonic_to_stereo(4 / 3) == pytest.approx(0.5, abs=1e-15)

    def test_domain(self):
        # gnomonic chart covers the open hemisphere only
        with pytest.raises(ValueError):
            stereo_to_gnomonic(1.0)
        with pytest.raises(ValueError):
            stereo_to_gnomonic(1.5j)

    def test_roundtrip(self):
        rng = rng_stream(33, 0)
        for _ in range(2000):
            d = rng.uniform(0, math.pi / 2 - 0.05)
            z = math.tan(d / 2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            assert abs(gnomonic_to_stereo(stereo_to_gnomonic(z)) - z) <= 1e-12
            g = rng.uniform(0, 50) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            assert abs(stereo_to_gnomonic(gnomonic_to_stereo(g)) - g) <= 1e-12 * max(1, abs(g))

    def test_image_always_inside_disk(self):
        for g in (0, 10, 1e6, 1e6j, -5e5 + 5e5j):
            assert abs(gnomonic_to_stereo(g)) < 1.0

    def test_great_circles_become_lines(self):
        rng = rng_stream(34, 0)
        for _ in range(100):
            u = math.tan(rng.uniform(0.05, math.pi / 2 - 0.1) / 2) * cmath.exp(
                1j * rng.uniform(0, 2 * math.pi)
            )
            v = math.tan(rng.uniform(0.05, math.pi / 2 - 0.1) / 2) * cmath.exp(
                1j * rng.uniform(0, 2 * math.pi)
            )
            if abs(u - v) < 1e-6:
                continue
            a, b = stereo_to_gnomonic(u), stereo_to_gnomonic(v)
            for t in (0.1, 0.5, 0.9):
                w = stereo_to_gnomonic(complex(s_segment_point(u, v, t)))
                chord = b - a
                off = ((w - a).real * chord.imag - (w - a).imag * chord.real) / abs(chord)
                assert abs(off) <= 1e-10
