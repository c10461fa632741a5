"""Minimal hand-emitted SVG backend.

No plotting dependency: figures are golden-file tested, so output must be
byte-deterministic. Fixed viewport, fixed float formatting, fixed style
tokens; curved boundaries arrive as dense polylines from the caller.
"""

from __future__ import annotations

import math
from typing import Iterable, List, Sequence

# style tokens
COLOR_AXIS_CIRCLE = "#555555"
COLOR_BASE = "#1f77b4"
COLOR_IMAGE = "#d62728"
COLOR_HULL = "#2ca02c"
COLOR_WITNESS = "#000000"
DOTTED = "2,4"
DASHED = "7,4"


def _fmt(v: float) -> str:
    # avoid "-0.000000" so identical geometry renders identically
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class SvgCanvas:
    """Square canvas over the complex plane, centered at 0.

    The extent is chosen by the caller; with extent 1/0.9 the unit circle
    sits at 90% of the half-width.
    """

    def __init__(self, size: int = 800, extent: float = 1.0 / 0.9) -> None:
        if size <= 0 or extent <= 0:
            raise ValueError("size and extent must be positive")
        self.size = size
        self.extent = extent
        self._scale = size / (2.0 * extent)
        self._elements: List[str] = []

    def _xy(self, z: complex) -> str:
        x = self.size / 2.0 + z.real * self._scale
        y = self.size / 2.0 - z.imag * self._scale
        return f"{_fmt(x)},{_fmt(y)}"

    def polyline(
        self,
        points: Sequence[complex],
        color: str,
        width: float = 1.5,
        dash: str = "",
        closed: bool = False,
    ) -> None:
        pts = list(points)
        if closed and pts and pts[0] != pts[-1]:
            pts.append(pts[0])
        coords = " ".join(self._xy(p) for p in pts)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self._elements.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(width)}"{dash_attr}/>'
        )

    def circle(
        self, center: complex, radius: float, color: str, width: float = 1.0, dash: str = ""
    ) -> None:
        cx = self.size / 2.0 + center.real * self._scale
        cy = self.size / 2.0 - center.imag * self._scale
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self._elements.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius * self._scale)}" '
            f'fill="none" stroke="{color}" stroke-width="{_fmt(width)}"{dash_attr}/>'
        )

    def marker(self, z: complex, color: str, radius: float = 4.0) -> None:
        x = self.size / 2.0 + z.real * self._scale
        y = self.size / 2.0 - z.imag * self._scale
        self._elements.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" fill="{color}"/>'
        )

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.size}" '
            f'height="{self.size}" viewBox="0 0 {self.size} {self.size}">\n'
            f'<rect width="{self.size}" height="{self.size}" fill="#ffffff"/>\n'
        )
        return head + "\n".join(self._elements) + "\n</svg>\n"


def content_extent(points: Iterable[complex], minimum: float = 1.0) -> float:
    """Half-width that fits all points with the unit circle at >= 90%."""
    m = minimum
    for p in points:
        m = max(m, abs(p.real), abs(p.imag))
    return m / 0.9


def infinity_safe(points: Iterable, cap: float = 1e6) -> List[complex]:
    """Drop unrepresentable points (infinity, huge moduli) before plotting."""
    out = []
    for p in points:
        try:
            z = complex(p)
        except (TypeError, ValueError):
            continue
        if math.isfinite(z.real) and math.isfinite(z.imag) and abs(z) <= cap:
            out.append(z)
    return out
