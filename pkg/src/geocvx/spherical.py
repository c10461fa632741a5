"""Extended-plane model of the unit sphere.

Points are finite complex numbers or a distinguished point at infinity;
distance is 2*atan of the Moebius quotient modulus. Rotations about the
vertical axis through a point, radial dilations about a center, great-circle
arcs, hemisphere tests, and the chord-versus-ray radial comparison.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from .numerics import DEFAULT_TOLERANCES, cot

# Distance-to-antipode below which segment/geodesic construction warns:
# conditioning collapses on the far side of the sphere.
NEAR_ANTIPODAL_EPS = 1e-9


class SphericalRangeError(ValueError):
    """Dilation would move a point to or past distance pi from the center."""


class AntipodalPointsError(ValueError):
    """Construction needs a unique great circle but the points are antipodal."""


class NearAntipodalWarning(UserWarning):
    """Points are within NEAR_ANTIPODAL_EPS of antipodal; results are ill-conditioned."""


class SPoint:
    """Point of the extended plane: a finite complex value or infinity.

    `value` is a finite complex number, or None for the distinguished point
    at infinity. Instances are immutable.
    """

    __slots__ = ("value",)

    def __init__(self, value: Optional[complex] = None) -> None:
        if value is not None:
            if type(value) is not complex:
                value = complex(value)
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise ValueError(
                    "non-finite coordinates are not a substitute for the "
                    "distinguished point at infinity; use SPoint()"
                )
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, v) -> None:
        raise AttributeError("SPoint is immutable")

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __complex__(self) -> complex:
        if self.value is None:
            raise ValueError("the point at infinity has no finite coordinates")
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, SPoint):
            return self.value == other.value
        if isinstance(other, (int, float, complex)):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return "SPoint(inf)" if self.value is None else f"SPoint({self.value!r})"


INF = SPoint()

SPointlike = Union[SPoint, complex, float]


def as_spoint(p: SPointlike) -> SPoint:
    return p if isinstance(p, SPoint) else SPoint(p)


def _ext(p: SPointlike) -> Optional[complex]:
    """Internal extended-complex form: finite complex, or None for infinity."""
    if isinstance(p, SPoint):
        return p.value
    if type(p) is not complex:
        p = complex(p)
    if not (math.isfinite(p.real) and math.isfinite(p.imag)):
        raise ValueError(
            "non-finite coordinates are not a substitute for the "
            "distinguished point at infinity; use SPoint()"
        )
    return p


def s_dist(u: SPointlike, v: SPointlike) -> float:
    """Spherical distance in [0, pi]."""
    u, v = _ext(u), _ext(v)
    if u is None and v is None:
        return 0.0
    if u is None:
        u, v = v, u
    if v is None:
        return math.pi if u == 0 else 2.0 * math.atan(1.0 / abs(u))
    den = 1.0 + v.conjugate() * u
    if den == 0:
        return math.pi
    return 2.0 * math.atan(abs((u - v) / den))


def antipode(u: SPointlike) -> SPoint:
    """The point at distance pi: -1/conj(u), with 0 and infinity swapped."""
    u = _ext(u)
    if u is None:
        return SPoint(0)
    if u == 0:
        return INF
    return SPoint(-1.0 / u.conjugate())


def s_translate(c: SPointlike, z: SPointlike) -> SPoint:
    """(z + c) / (1 - conj(c) z): the rotation of the sphere taking 0 to c."""
    c = _ext(c)
    if c is None:
        raise ValueError("translation center must be finite")
    z = _ext(z)
    if z is None:
        return antipode(c) if c != 0 else INF
    den = 1.0 - c.conjugate() * z
    if den == 0:
        return INF
    return SPoint((z + c) / den)


def s_dilate_origin(k: float, z: SPointlike) -> SPoint:
    """Scale spherical distance from 0 by k along the ray through z.

    Defined only while the target distance k*d(0, z) stays below pi.
    """
    if not (k > 0 and math.isfinite(k)):
        raise ValueError(f"dilation factor must be positive, got {k!r}")
    z = _ext(z)
    if z is None:
        raise AntipodalPointsError(
            "the antipode of the center lies on every ray; its dilation is ambiguous"
        )
    if k == 1.0:
        return SPoint(z)
    r = abs(z)
    if r == 0.0:
        return SPoint(0)
    a = k * math.atan(r)
    if a >= math.pi / 2:
        raise SphericalRangeError(
            f"dilation by {k} sends a point at distance {2 * math.atan(r)!r} "
            "to or past the antipode"
        )
    return SPoint(z * (math.tan(a) / r))


@dataclass(frozen=True)
class SDilation:
    """Radial dilation about a finite center c with factor k; s = 1/k kept alongside."""

    c: complex
    k: float
    s: float = field(default=None)  # type: ignore[assignment]

    model = "spherical"

    def __post_init__(self) -> None:
        c = _ext(self.c)
        if c is None:
            raise ValueError("dilation center must be finite")
        object.__setattr__(self, "c", c)
        if not (self.k > 0 and math.isfinite(self.k)):
            raise ValueError(f"dilation factor must be positive, got {self.k!r}")
        if self.s is None:
            object.__setattr__(self, "s", 1.0 / self.k)
        elif abs(self.k * self.s - 1.0) > DEFAULT_TOLERANCES.eq_abs:
            raise ValueError(f"k*s = {self.k * self.s!r} but must equal 1")

    @property
    def center(self) -> complex:
        return self.c

    def apply(self, z: SPointlike) -> SPoint:
        return s_dilate(self, z)

    def inverse(self) -> "SDilation":
        return SDilation(c=self.c, k=self.s)

    def distance_bound(self, d: float) -> float:
        # distance from the center scales exactly by k along every ray
        return min(self.k * d, math.pi)


def s_dilate(d: SDilation, z: SPointlike) -> SPoint:
    """Dilation about d.c: conjugate the origin dilation by the rotation to d.c."""
    if d.k == 1.0:
        return as_spoint(z)
    w = s_translate(-d.c, z)
    return s_translate(d.c, s_dilate_origin(d.k, w))


def in_hemisphere(center: SPointlike, z: SPointlike, eq_abs: float = 1e-12) -> bool:
    """True iff z lies in the closed hemisphere about center."""
    return s_dist(center, z) <= math.pi / 2 + eq_abs


@dataclass(frozen=True)
class SGeodesic:
    """Carrier of a spherical geodesic: a Euclidean circle meeting the unit
    circle at diametrically opposite points (1 + |a|^2 = R^2) or a line
    through the origin."""

    center: Optional[complex] = None
    radius: Optional[float] = None
    direction: Optional[complex] = None

    @classmethod
    def arc(cls, center: complex, radius: float, eq_abs: float = 1e-9) -> "SGeodesic":
        center = complex(center)
        if radius <= 0:
            raise ValueError("arc radius must be positive")
        if abs((1.0 + abs(center) ** 2) - radius**2) > eq_abs * max(1.0, radius**2):
            raise ValueError("circle is not a great circle of the unit sphere")
        return cls(center=center, radius=float(radius))

    @classmethod
    def diameter(cls, direction: complex) -> "SGeodesic":
        direction = complex(direction)
        m = abs(direction)
        if m == 0:
            raise ValueError("diameter direction must be nonzero")
        d = direction / m
        if d.real < 0 or (d.real == 0 and d.imag < 0):
            d = -d
        return cls(direction=d)

    @property
    def is_diameter(self) -> bool:
        return self.direction is not None


def _warn_if_near_antipodal(d: float) -> None:
    if math.pi - d < NEAR_ANTIPODAL_EPS:
        warnings.warn(
            f"points are within {math.pi - d:.3g} of antipodal; "
            "great-circle construction is ill-conditioned",
            NearAntipodalWarning,
            stacklevel=3,
        )


def s_geodesic_through(u: SPointlike, v: SPointlike, eq_abs: float = 1e-12) -> SGeodesic:
    """Great circle through two distinct, non-antipodal points."""
    up, vp = as_spoint(u), as_spoint(v)
    if up == vp:
        raise ValueError("geodesic through coincident points is undefined")
    d = s_dist(up, vp)
    if d >= math.pi - 1e-12:
        raise AntipodalPointsError("no unique great circle through antipodal points")
    _warn_if_near_antipodal(d)
    u, v = up.value, vp.value
    if u is None:
        return SGeodesic.diameter(v)
    if v is None:
        return SGeodesic.diameter(u)
    if u == 0:
        return SGeodesic.diameter(v)
    if v == 0:
        return SGeodesic.diameter(u)
    if abs((u.conjugate() * v).imag) < eq_abs * max(abs(u), abs(v)):
        return SGeodesic.diameter(v - u) if u != v else SGeodesic.diameter(u)
    r1, t1 = abs(u), cmath.phase(u)
    r2, t2 = abs(v), cmath.phase(v)
    det = math.sin(t2 - t1)
    b1 = (r1 - 1.0 / r1) / 2.0
    b2 = (r2 - 1.0 / r2) / 2.0
    a1 = (b1 * math.sin(t2) - b2 * math.sin(t1)) / det
    a2 = (b2 * math.cos(t1) - b1 * math.cos(t2)) / det
    center = complex(a1, a2)
    return SGeodesic(center=center, radius=math.sqrt(1.0 + abs(center) ** 2))


def s_segment_point(u: SPointlike, v: SPointlike, t: float) -> SPoint:
    """Point at spherical distance t*d(u, v) from u along the shorter arc."""
    up, vp = as_spoint(u), as_spoint(v)
    if up == vp:
        raise ValueError("segment between coincident points is degenerate")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"segment parameter must lie in [0, 1], got {t!r}")
    if t == 0.0:
        return up
    if t == 1.0:
        return vp
    if up.is_infinity:
        return s_segment_point(vp, up, 1.0 - t)
    u = up.value
    w = s_translate(-u, vp)
    if w.is_infinity:
        raise AntipodalPointsError("no unique segment between antipodal points")
    w = w.value
    d = 2.0 * math.atan(abs(w))
    _warn_if_near_antipodal(d)
    p = (w / abs(w)) * math.tan(t * d / 2.0)
    return s_translate(u, p)


def s_ray_arc_intersect(g: SGeodesic, lam: float) -> float:
    """Modulus of the in-disk intersection of the ray exp(i lam) with a great circle.

    Requires the hemisphere-side configuration where the circle crosses the
    ray at modulus <= 1.
    """
    if g.is_diameter:
        raise ValueError("ray intersection is defined for arc geodesics only")
    omega = g.center.real * math.cos(lam) + g.center.imag * math.sin(lam)
    if omega > 1e-12:
        raise ValueError(
            f"ray at angle {lam!r} meets the great circle outside the unit disk "
            f"(omega = {omega!r})"
        )
    omega = min(omega, 0.0)
    # rho = sqrt(omega^2 + 1) + omega, written to avoid cancellation
    return 1.0 / (math.sqrt(omega * omega + 1.0) - omega)


@dataclass(frozen=True)
class SRadialComparison:
    """Spherical analog of the hyperbolic radial comparison.

    gamma1, gamma2 are atan-radii of the chord endpoints before pullback; the
    pullback scales by s, valid while both pulled-back endpoints stay in the
    closed hemisphere: s <= s_star = (pi/4) min(1/gamma1, 1/gamma2).
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
        eq = DEFAULT_TOLERANCES.eq_abs
        if not 1.0 - eq <= self.s <= self.s_star + eq:
            raise ValueError(
                f"s = {self.s!r} must lie in [1, s_star] with s_star = {self.s_star!r}"
            )

    @property
    def s_star(self) -> float:
        return (math.pi / 4.0) * min(1.0 / self.gamma1, 1.0 / self.gamma2)

    @property
    def t(self) -> float:
        return (self.lam - self.theta1) / (self.theta2 - self.theta1)


def _atan_ratio(num: float, den: float) -> float:
    # den >= 0 up to rounding at the hemisphere boundary where cot crosses 0
    den = max(den, 0.0)
    if den == 0.0:
        return math.pi / 2.0
    return math.atan(num / den)


def s_rho_closed_form(rc: SRadialComparison) -> float:
    """atan of the chord's radial crossing after pullback by s."""
    sd = math.sin(rc.theta2 - rc.theta1)
    den = cot(2.0 * rc.gamma1 * rc.s) * math.sin(rc.theta2 - rc.lam) + cot(
        2.0 * rc.gamma2 * rc.s
    ) * math.sin(rc.lam - rc.theta1)
    return 0.5 * _atan_ratio(sd, den)


def s_r_closed_form(rc: SRadialComparison) -> float:
    """atan of the pulled-back segment point: linear in s by construction."""
    sd = math.sin(rc.theta2 - rc.theta1)
    den = cot(2.0 * rc.gamma1) * math.sin(rc.theta2 - rc.lam) + cot(
        2.0 * rc.gamma2
    ) * math.sin(rc.lam - rc.theta1)
    return (rc.s / 2.0) * _atan_ratio(sd, den)


def to_sphere_vector(p: SPointlike) -> Tuple[float, float, float]:
    """Unit vector of the point on the sphere (0 maps to the north pole)."""
    p = _ext(p)
    if p is None:
        return (0.0, 0.0, -1.0)
    n = 1.0 + abs(p) ** 2
    return (2.0 * p.real / n, 2.0 * p.imag / n, (2.0 - n) / n)


def from_sphere_vector(x: float, y: float, z: float) -> SPoint:
    """Inverse of to_sphere_vector; the south pole maps to infinity."""
    n = math.sqrt(x * x + y * y + z * z)
    if n == 0:
        raise ValueError("zero vector has no direction")
    x, y, z = x / n, y / n, z / n
    if 1.0 + z == 0.0:
        return INF
    return SPoint(complex(x, y) / (1.0 + z))
