"""Poincare disk model of the hyperbolic plane.

Distance, disk automorphisms fixing no boundary point, radial dilation about a
center, geodesic arcs orthogonal to the unit circle, and the chord-versus-ray
radial comparison that drives the dilation convexity checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from .numerics import DEFAULT_TOLERANCES, atanh_stable, coth

# Points this close to the unit circle are rejected: atanh conditioning
# degrades and every set handled here is interior.
BOUNDARY_GUARD = 1e-9

Pointlike = Union[complex, float, "HPoint"]


class DiskDomainError(ValueError):
    """Point is on or beyond the guard band at the unit circle."""


class NoIntersectionError(ValueError):
    """Ray does not meet the geodesic arc inside the disk."""


def as_disk_point(z: Pointlike) -> complex:
    """Validate and return a plain complex interior point."""
    if isinstance(z, HPoint):
        return z.z
    z = complex(z)
    if abs(z) >= 1.0 - BOUNDARY_GUARD:
        raise DiskDomainError(f"|z| = {abs(z)!r} is not inside the unit disk")
    return z


@dataclass(frozen=True)
class HPoint:
    """A point of the open unit disk."""

    z: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", complex(self.z))
        if abs(self.z) >= 1.0 - BOUNDARY_GUARD:
            raise DiskDomainError(f"|z| = {abs(self.z)!r} is not inside the unit disk")

    def __complex__(self) -> complex:
        return self.z


@dataclass(frozen=True)
class HGeodesic:
    """Carrier of a hyperbolic geodesic: a circular arc orthogonal to the unit
    circle (center a with |a|^2 = 1 + R^2) or a diameter through the origin."""

    center: Optional[complex] = None
    radius: Optional[float] = None
    direction: Optional[complex] = None

    @classmethod
    def arc(cls, center: complex, radius: float, eq_abs: float = 1e-9) -> "HGeodesic":
        center = complex(center)
        if radius <= 0:
            raise ValueError("arc radius must be positive")
        if abs(abs(center) ** 2 - (1.0 + radius**2)) > eq_abs * max(1.0, abs(center) ** 2):
            raise ValueError("arc is not orthogonal to the unit circle")
        return cls(center=center, radius=float(radius))

    @classmethod
    def diameter(cls, direction: complex) -> "HGeodesic":
        direction = complex(direction)
        m = abs(direction)
        if m == 0:
            raise ValueError("diameter direction must be nonzero")
        d = direction / m
        # canonical sign so equal lines compare equal
        if d.real < 0 or (d.real == 0 and d.imag < 0):
            d = -d
        return cls(direction=d)

    @property
    def is_diameter(self) -> bool:
        return self.direction is not None


@dataclass(frozen=True)
class HDilation:
    """Radial dilation about c with factor k; s = 1/k is kept alongside."""

    c: complex
    k: float
    s: float = field(default=None)  # type: ignore[assignment]

    model = "hyperbolic"

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", as_disk_point(self.c))
        if not (self.k > 0 and math.isfinite(self.k)):
            raise ValueError(f"dilation factor must be positive, got {self.k!r}")
        if self.s is None:
            object.__setattr__(self, "s", 1.0 / self.k)
        elif abs(self.k * self.s - 1.0) > DEFAULT_TOLERANCES.eq_abs:
            raise ValueError(f"k*s = {self.k * self.s!r} but must equal 1")

    @property
    def center(self) -> complex:
        return self.c

    def apply(self, z: Pointlike) -> complex:
        return h_dilate(self, z)

    def inverse(self) -> "HDilation":
        return HDilation(c=self.c, k=self.s)

    def distance_bound(self, d: float) -> float:
        # distance from the center scales exactly by k along every ray
        return self.k * d


def h_dist(u: Pointlike, v: Pointlike) -> float:
    """Hyperbolic distance 2*atanh of the Moebius quotient modulus."""
    u, v = as_disk_point(u), as_disk_point(v)
    if u == v:
        return 0.0
    return 2.0 * atanh_stable(abs((v - u) / (1.0 - u.conjugate() * v)))


def h_translate(c: Pointlike, z: Pointlike) -> complex:
    """The disk automorphism (z + c) / (1 + conj(c) z) taking 0 to c."""
    c, z = as_disk_point(c), as_disk_point(z)
    return (z + c) / (1.0 + c.conjugate() * z)


def h_dilate_origin(k: float, z: Pointlike) -> complex:
    """Scale hyperbolic distance from 0 by k along the ray through z."""
    if not (k > 0 and math.isfinite(k)):
        raise ValueError(f"dilation factor must be positive, got {k!r}")
    z = as_disk_point(z)
    if k == 1.0:
        return z
    r = abs(z)
    if r == 0.0:
        return 0j
    rp = math.tanh(k * atanh_stable(r))
    if rp >= 1.0 - BOUNDARY_GUARD:
        raise DiskDomainError(
            f"dilation by {k} pushes |z| = {r} into the boundary guard band"
        )
    return z * (rp / r)


def h_dilate(d: HDilation, z: Pointlike) -> complex:
    """Dilation about d.c: conjugate the origin dilation by the translation to d.c."""
    if d.k == 1.0:
        return as_disk_point(z)
    return h_translate(d.c, h_dilate_origin(d.k, h_translate(-d.c, z)))


def _collinear_with_origin(u: complex, v: complex, eq_abs: float) -> bool:
    # scale-aware test of Im(conj(u) v) against the points' magnitude
    return abs((u.conjugate() * v).imag) < eq_abs * max(abs(u), abs(v))


def h_geodesic_through(u: Pointlike, v: Pointlike, eq_abs: float = 1e-12) -> HGeodesic:
    """Geodesic through two distinct interior points.

    Solves for the Euclidean center from the two on-circle conditions written
    in the (r + 1/r)/2 form, which keeps |a|^2 = 1 + R^2 exact by construction.
    """
    u, v = as_disk_point(u), as_disk_point(v)
    if u == v:
        raise ValueError("geodesic through coincident points is undefined")
    if abs(u) == 0 or abs(v) == 0 or _collinear_with_origin(u, v, eq_abs):
        return HGeodesic.diameter(v - u)
    r1, t1 = abs(u), cmath.phase(u)
    r2, t2 = abs(v), cmath.phase(v)
    det = math.sin(t2 - t1)
    if det == 0.0:
        return HGeodesic.diameter(v - u)
    b1 = (r1 + 1.0 / r1) / 2.0
    b2 = (r2 + 1.0 / r2) / 2.0
    a1 = (b1 * math.sin(t2) - b2 * math.sin(t1)) / det
    a2 = (b2 * math.cos(t1) - b1 * math.cos(t2)) / det
    center = complex(a1, a2)
    return HGeodesic(center=center, radius=math.sqrt(abs(center) ** 2 - 1.0))


def h_segment_point(u: Pointlike, v: Pointlike, t: float) -> complex:
    """Point at hyperbolic distance t*d(u, v) from u along the segment [u, v]."""
    u, v = as_disk_point(u), as_disk_point(v)
    if u == v:
        raise ValueError("segment between coincident points is degenerate")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"segment parameter must lie in [0, 1], got {t!r}")
    if t == 0.0:
        return u
    if t == 1.0:
        return v
    w = (v - u) / (1.0 - u.conjugate() * v)  # v seen from u at the origin
    d = 2.0 * atanh_stable(abs(w))
    p = (w / abs(w)) * math.tanh(t * d / 2.0)
    return h_translate(u, p)


def h_ray_arc_intersect(g: HGeodesic, lam: float) -> float:
    """Modulus of the in-disk intersection of the ray exp(i lam) with an arc."""
    if g.is_diameter:
        raise ValueError("ray intersection is defined for arc geodesics only")
    omega = g.center.real * math.cos(lam) + g.center.imag * math.sin(lam)
    if omega < 1.0 - 1e-12:
        raise NoIntersectionError(
            f"ray at angle {lam!r} misses the arc inside the disk (omega = {omega!r})"
        )
    omega = max(omega, 1.0)
    # rho = omega - sqrt(omega^2 - 1), written to avoid cancellation
    return 1.0 / (omega + math.sqrt(omega * omega - 1.0))


@dataclass(frozen=True)
class RadialComparison:
    """Configuration comparing, along the ray at angle lam, the pulled-back
    chord point (rho) with the pulled-back segment point (r).

    gamma1, gamma2 are the atanh-radii of the chord endpoints before pullback;
    the pullback scales radii by s along each ray.
    """

    gamma1: float
    gamma2: float
    theta1: float
    theta2: float
    lam: float
    s: float

    def __post_init__(self) -> None:
        if not (self.gamma1 > 0 and self.gamma2 > 0):
            raise ValueError("gamma1 and gamma2 must be positive")
        if not 0.0 <= self.theta1 < self.lam < self.theta2 < math.pi:
            raise ValueError(
                "angles must satisfy 0 <= theta1 < lam < theta2 < pi, got "
                f"({self.theta1!r}, {self.lam!r}, {self.theta2!r})"
            )
        if not (self.s > 0 and math.isfinite(self.s)):
            raise ValueError(f"s must be positive, got {self.s!r}")

    @property
    def t(self) -> float:
        return (self.lam - self.theta1) / (self.theta2 - self.theta1)

    @classmethod
    def from_endpoints(
        cls, x1: Pointlike, x2: Pointlike, t: float, s: float, eq_abs: float = 1e-12
    ) -> Tuple["RadialComparison", complex]:
        """Normalize an arbitrary endpoint pair by rotation (and, if needed, a
        swap) into 0 <= theta1 < theta2 < pi.

        t is the angular fraction of the ray between the endpoint angles.
        Returns the configuration and the unit complex of the original-frame
        ray at parameter t.
        """
        x1, x2 = as_disk_point(x1), as_disk_point(x2)
        if abs(x1) == 0 or abs(x2) == 0:
            raise ValueError("endpoints must be distinct from the origin")
        if not 0.0 < t < 1.0:
            raise ValueError("t must lie strictly between 0 and 1")
        a1, a2 = cmath.phase(x1), cmath.phase(x2)
        delta = (a2 - a1) % (2.0 * math.pi)
        if min(delta, abs(delta - math.pi), 2.0 * math.pi - delta) < eq_abs:
            raise ValueError("endpoints are collinear with the origin")
        if delta > math.pi:
            return cls.from_endpoints(x2, x1, 1.0 - t, s, eq_abs)
        rc = cls(
            gamma1=atanh_stable(abs(x1)),
            gamma2=atanh_stable(abs(x2)),
            theta1=0.0,
            theta2=delta,
            lam=t * delta,
            s=s,
        )
        return rc, cmath.exp(1j * (a1 + t * delta))


def h_rho_closed_form(rc: RadialComparison) -> float:
    """atanh of the chord's radial crossing after pullback by s."""
    sd = math.sin(rc.theta2 - rc.theta1)
    den = coth(2.0 * rc.gamma1 * rc.s) * math.sin(rc.theta2 - rc.lam) + coth(
        2.0 * rc.gamma2 * rc.s
    ) * math.sin(rc.lam - rc.theta1)
    return 0.5 * atanh_stable(sd / den)


def h_r_closed_form(rc: RadialComparison) -> float:
    """atanh of the pulled-back segment point: linear in s by construction."""
    sd = math.sin(rc.theta2 - rc.theta1)
    den = coth(2.0 * rc.gamma1) * math.sin(rc.theta2 - rc.lam) + coth(
        2.0 * rc.gamma2
    ) * math.sin(rc.lam - rc.theta1)
    return (rc.s / 2.0) * atanh_stable(sd / den)
