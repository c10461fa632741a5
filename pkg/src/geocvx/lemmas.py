"""Curvature certification of the two auxiliary radial profiles.

f_hyp(x) = atanh(1 / (k1 coth(u1 x) + k2 coth(u2 x))) must be concave for
x > 0, and f_sph(x) = atan(1 / (k1 cot(u1 x) + k2 cot(u2 x))) convex on
(0, x*], whenever k1, k2 > 0 and k1 + k2 >= 1. Certification evaluates a
second difference over a grid and checks its sign against fd_tol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .numerics import DEFAULT_TOLERANCES, Tolerances, cot, coth_m1, second_fd

_KINDS = ("hyp", "sph")


@dataclass(frozen=True)
class LemmaParams:
    """Weights and rates of the composite radial profile.

    The certified statements assume k1 + k2 >= 1; construction allows smaller
    sums so the hypothesis-violation demos can be built, and exposes the flag.
    """

    k1: float
    k2: float
    u1: float
    u2: float

    def __post_init__(self) -> None:
        for name in ("k1", "k2", "u1", "u2"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be positive, got {v!r}")

    @property
    def meets_hypothesis(self) -> bool:
        return self.k1 + self.k2 >= 1.0


def x_star(p: LemmaParams) -> float:
    """Right end of the spherical domain: (pi/2) min(1/u1, 1/u2)."""
    return (math.pi / 2.0) * min(1.0 / p.u1, 1.0 / p.u2)


def f_hyp(p: LemmaParams, x: float) -> float:
    """Concave profile, evaluated through coth(u x) - 1 so that large u*x does
    not push the atanh argument onto 1."""
    if not (x > 0 and math.isfinite(x)):
        raise ValueError(f"x must be positive, got {x!r}")
    c = p.k1 * coth_m1(p.u1 * x) + p.k2 * coth_m1(p.u2 * x)
    dm1 = (p.k1 + p.k2 - 1.0) + c  # denominator minus 1
    if dm1 <= 0.0:
        raise ValueError(
            f"denominator {1.0 + dm1!r} <= 1 at x = {x!r}: profile undefined "
            "(k1 + k2 < 1 shrinks the domain)"
        )
    return 0.5 * math.log(((p.k1 + p.k2 + 1.0) + c) / dm1)


def f_sph(p: LemmaParams, x: float) -> float:
    """Convex profile on (0, x*]; the denominator is non-negative there."""
    if not (x > 0 and math.isfinite(x)):
        raise ValueError(f"x must be positive, got {x!r}")
    if x > x_star(p) + 1e-15:
        raise ValueError(f"x = {x!r} exceeds the domain end x* = {x_star(p)!r}")
    den = p.k1 * cot(p.u1 * x) + p.k2 * cot(p.u2 * x)
    den = max(den, 0.0)  # cot crosses zero by rounding exactly at x*
    if den == 0.0:
        return math.pi / 2.0
    return math.atan(1.0 / den)


def hyp_domain_edge(p: LemmaParams) -> float:
    """Largest x at which f_hyp is defined; infinite when k1 + k2 >= 1."""
    if p.meets_hypothesis:
        return math.inf

    def dm1(x: float) -> float:
        return (p.k1 + p.k2 - 1.0) + p.k1 * coth_m1(p.u1 * x) + p.k2 * coth_m1(p.u2 * x)

    lo, hi = 1e-12, 1.0
    while dm1(hi) > 0:
        hi *= 2.0
        if hi > 1e12:
            return math.inf
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if dm1(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo


def default_grid(
    kind: str, p: LemmaParams, points: int = 512, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> np.ndarray:
    """Log-spaced certification grid, stopping 2 fd steps short of endpoints."""
    if kind == "hyp":
        lo, hi = 1e-3, 20.0
        if not p.meets_hypothesis:
            hi = min(hi, 0.95 * hyp_domain_edge(p))
    elif kind == "sph":
        lo, hi = 1e-3, x_star(p) - 2.0 * tolerances.fd_step
    else:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    if hi <= lo:
        raise ValueError(f"empty certification grid: [{lo}, {hi}]")
    return np.logspace(math.log10(lo), math.log10(hi), points)


@dataclass(frozen=True)
class CurvatureReport:
    kind: str
    params: LemmaParams
    grid_points: int
    grid_lo: float
    grid_hi: float
    worst_value: float
    worst_x: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": {
                "k1": self.params.k1,
                "k2": self.params.k2,
                "u1": self.params.u1,
                "u2": self.params.u2,
            },
            "grid": {
                "points": self.grid_points,
                "lo": self.grid_lo,
                "hi": self.grid_hi,
            },
            "worst_value": self.worst_value,
            "worst_x": self.worst_x,
            "passed": self.passed,
        }


def certify_curvature(
    kind: str,
    p: LemmaParams,
    grid: Optional[np.ndarray] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CurvatureReport:
    """Sign-check the second difference of the profile over a grid.

    hyp passes iff every value <= fd_tol (concavity), sph iff every value
    >= -fd_tol (convexity). The report carries the extremal point either way.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    if grid is None:
        grid = default_grid(kind, p, tolerances=tolerances)
    h = tolerances.fd_step
    if kind == "sph":
        limit = x_star(p)
        for x in grid:
            if x + h > limit + 1e-15:
                raise ValueError(
                    f"grid point {x!r} is within one fd step of the domain end {limit!r}"
                )
        f = lambda x: f_sph(p, x)
    else:
        f = lambda x: f_hyp(p, x)

    worst_value = -math.inf if kind == "hyp" else math.inf
    worst_x = float(grid[0])
    for x in grid:
        x = float(x)
        try:
            v = second_fd(f, x, h)
        except ValueError as exc:
            raise ValueError(f"profile evaluation failed at grid point {x!r}: {exc}") from exc
        if kind == "hyp":
            if v > worst_value:
                worst_value, worst_x = v, x
        else:
            if v < worst_value:
                worst_value, worst_x = v, x
    passed = worst_value <= tolerances.fd_tol if kind == "hyp" else worst_value >= -tolerances.fd_tol
    return CurvatureReport(
        kind=kind,
        params=p,
        grid_points=len(grid),
        grid_lo=float(grid[0]),
        grid_hi=float(grid[-1]),
        worst_value=worst_value,
        worst_x=worst_x,
        passed=passed,
    )
