"""Scalar kernel shared by every module: stable hyperbolic/trig helpers,
the tolerance policy, plain second differences, and the seeded RNG contract."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np


class NonFiniteEvaluation(ArithmeticError):
    """A function evaluation returned NaN or infinity where a finite value was needed."""


@dataclass(frozen=True)
class Tolerances:
    """Numeric policy knobs.

    eq_abs   absolute tolerance for algebraic identities
    margin   minimum signed separation for a convexity-violation witness
    fd_step  step used by second differences
    fd_tol   curvature-sign tolerance for second differences
    """

    eq_abs: float = 1e-12
    margin: float = 1e-9
    fd_step: float = 1e-4
    fd_tol: float = 1e-6

    def __post_init__(self) -> None:
        for name in ("eq_abs", "margin", "fd_step", "fd_tol"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a finite positive number, got {v!r}")
        if self.fd_tol < self.fd_step**2:
            raise ValueError(
                f"fd_tol={self.fd_tol} leaves no headroom for the O(fd_step**2) "
                f"truncation error of a second difference with fd_step={self.fd_step}"
            )


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class Seed:
    """64-bit unsigned seed; identical seeds reproduce trial sequences bit for bit."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or not (0 <= self.value < 2**64):
            raise ValueError(f"seed must be an integer in [0, 2**64), got {self.value!r}")


SeedLike = Union[Seed, int]


def as_seed(seed: SeedLike) -> Seed:
    return seed if isinstance(seed, Seed) else Seed(seed)


def rng_stream(seed: SeedLike, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream).

    Streams are independent and individually reproducible, so suites can hand
    one stream per polygon/trial without consuming a shared sequence.
    """
    if stream < 0:
        raise ValueError("stream index must be non-negative")
    return np.random.Generator(np.random.Philox(key=[as_seed(seed).value, stream]))


def atanh_stable(x: float) -> float:
    """Inverse hyperbolic tangent via log1p, accurate up to the open interval ends."""
    if not -1.0 < x < 1.0:
        raise ValueError(f"atanh argument must lie in (-1, 1), got {x!r}")
    if x < 0.0:
        return -atanh_stable(-x)
    return 0.5 * math.log1p(2.0 * x / (1.0 - x))


def coth(x: float) -> float:
    if x == 0.0:
        raise ValueError("coth is singular at 0")
    return 1.0 / math.tanh(x)


def coth_m1(x: float) -> float:
    """coth(x) - 1 without cancellation; essential once coth(x) rounds to 1."""
    if x <= 0.0:
        raise ValueError("coth_m1 requires x > 0")
    return 2.0 / math.expm1(2.0 * x)


def cot(x: float) -> float:
    t = math.tan(x)
    if t == 0.0:
        raise ValueError(f"cot is singular at {x!r}")
    return 1.0 / t


def second_fd(f: Callable[[float], float], x: float, h: float) -> float:
    """Plain central second difference (f(x-h) - 2 f(x) + f(x+h)) / h**2."""
    if not (h > 0 and math.isfinite(h)):
        raise ValueError(f"step must be finite and positive, got {h!r}")
    vals = []
    for xi in (x - h, x, x + h):
        v = f(xi)
        if not math.isfinite(v):
            raise NonFiniteEvaluation(f"f({xi!r}) = {v!r} is not finite")
        vals.append(v)
    return (vals[0] - 2.0 * vals[1] + vals[2]) / (h * h)
