"""Projective charts in which geodesics are straight lines.

Poincare disk <-> Klein disk for the hyperbolic plane, and stereographic
plane <-> gnomonic plane for the open hemisphere about the origin. These
conversions are the only place straight-line reasoning (hulls, point-in-
polygon) is allowed to happen; the conformal modules never assume it.
"""

from __future__ import annotations

import math
from typing import Union

from .hyperbolic import HPoint, as_disk_point
from .spherical import SPointlike, _ext

Pointlike = Union[complex, float, HPoint]


def poincare_to_klein(z: Pointlike) -> complex:
    """w = 2z / (1 + |z|^2); hyperbolic geodesics map to straight chords."""
    z = as_disk_point(z)
    return 2.0 * z / (1.0 + abs(z) ** 2)


def klein_to_poincare(w: Union[complex, float]) -> complex:
    """z = w / (1 + sqrt(1 - |w|^2)), inverse of poincare_to_klein."""
    w = complex(w)
    m2 = abs(w) ** 2
    if m2 >= 1.0:
        raise ValueError(f"|w| = {abs(w)!r} is not inside the Klein disk")
    return w / (1.0 + math.sqrt(1.0 - m2))


def stereo_to_gnomonic(z: SPointlike) -> complex:
    """g = 2z / (1 - |z|^2), central projection of the open hemisphere about 0."""
    z = _ext(z)
    if z is None or abs(z) >= 1.0:
        raise ValueError("gnomonic chart covers only the open hemisphere |z| < 1")
    return 2.0 * z / (1.0 - abs(z) ** 2)


def gnomonic_to_stereo(g: Union[complex, float]) -> complex:
    """z = g / (1 + sqrt(1 + |g|^2)); always lands strictly inside the unit disk."""
    g = complex(g)
    if not (math.isfinite(g.real) and math.isfinite(g.imag)):
        raise ValueError("gnomonic coordinates must be finite")
    return g / (1.0 + math.sqrt(1.0 + abs(g) ** 2))


__all__ = [
    "poincare_to_klein",
    "klein_to_poincare",
    "stereo_to_gnomonic",
    "gnomonic_to_stereo",
]
