"""C-circles: vertical lines and similarity images of planar circles.

An infinite C-circle is a line parallel to the vertical axis; a finite one is
the image of the planar circle |z| = r, t = 0 under a similarity.  Only
axis-centered planar circles are represented directly; general ones carry the
normalizing similarity that produced them.

The central quantitative facts here: on a planar circle of radius r the two
points at distance 1 from a fixed one sit at polar angles +/- chord_angle(r),
and the distance between those two satisfies d^4 = 4 - 1/(4 r^4).  That value
passes through 1 only at r = 12^(-1/4), which pins down the unique finite
C-circle carrying three mutually unit-distant points.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .heis import HeisPoint, Similarity, dist4_zt, distance

__all__ = [
    "CANONICAL_RADIUS",
    "VERTICAL_LOCUS_RADIUS",
    "CircleKind",
    "CCircle",
    "chord_angle",
    "chord_pair_distance",
    "equilateral_dim_finite",
    "vertical_equidistant_locus",
    "no_third_on_axis",
    "AxisScan",
]

# The one finite-circle radius admitting an equilateral triple.
CANONICAL_RADIUS = 12.0 ** -0.25
# Radius of the planar circle equidistant (at distance 1) from (0, -1/2)
# and (0, 1/2); strictly larger than CANONICAL_RADIUS.
VERTICAL_LOCUS_RADIUS = (3.0 / 4.0) ** 0.25


class CircleKind(enum.Enum):
    INFINITE = "infinite"
    FINITE = "finite"


@dataclass(frozen=True)
class CCircle:
    """A C-circle as (kind, model radius, normalizing similarity).

    The model for the finite kind is the planar circle |z| = radius, t = 0;
    for the infinite kind it is the vertical axis z = 0.  ``transform`` maps
    the model onto the represented circle.
    """

    kind: CircleKind
    radius: float | None = None
    transform: Similarity = Similarity()

    def __post_init__(self):
        if self.kind is CircleKind.FINITE:
            if self.radius is None or not (math.isfinite(self.radius) and self.radius > 0):
                raise ValueError("finite C-circle needs a positive radius")
        elif self.radius is not None:
            raise ValueError("infinite C-circle takes no radius")

    def point_at(self, s: float) -> HeisPoint:
        """Parametrize the circle: polar angle for the finite kind, vertical
        offset for the infinite kind."""
        if self.kind is CircleKind.FINITE:
            model = HeisPoint(self.radius * complex(math.cos(s), math.sin(s)), 0.0)
        else:
            model = HeisPoint(0j, s)
        return self.transform.apply(model)

    @property
    def center(self) -> HeisPoint:
        """Image of the model center (the origin)."""
        return self.transform.apply(HeisPoint(0j, 0.0))


def chord_angle(r: float) -> float | None:
    """Polar angle theta0 with d((r, 0), (r e^{i theta0}, 0)) = 1, from
    16 r^4 sin^2(theta0 / 2) = 1.  None when r < 1/2 (no such chord)."""
    if not (math.isfinite(r) and r > 0):
        raise ValueError("radius must be positive")
    if r < 0.5:
        return None
    return math.acos(max(-1.0, 1.0 - 1.0 / (8.0 * r ** 4)))


def chord_pair_distance(r: float) -> float | None:
    """Distance between the two chord points (r e^{+/- i theta0}, 0).

    Closed form d^4 = 4 - 1/(4 r^4): strictly increasing in r, equal to 1
    exactly at r = 12^(-1/4), below 1 for smaller radii and above 1 for
    larger ones.  Computed here by direct evaluation of the metric; the
    closed form is kept as a test oracle.
    """
    theta0 = chord_angle(r)
    if theta0 is None:
        return None
    p = HeisPoint(r * complex(math.cos(theta0), math.sin(theta0)), 0.0)
    q = HeisPoint(r * complex(math.cos(theta0), -math.sin(theta0)), 0.0)
    return distance(p, q)


def equilateral_dim_finite(r: float, tol: float) -> int:
    """Largest equilateral set on a finite C-circle of model radius r:
    3 within ``tol`` of the canonical radius, else 2."""
    if not (math.isfinite(r) and r > 0):
        raise ValueError("radius must be positive")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return 3 if abs(r - CANONICAL_RADIUS) <= tol else 2


def _normalize_vertical_pair(p1: HeisPoint, p2: HeisPoint) -> HeisPoint:
    """Validate a unit-distance vertical pair and return its midpoint."""
    if abs(p1.z - p2.z) > 1e-12:
        raise ValueError("points do not lie on a common vertical line")
    if abs(distance(p1, p2) - 1.0) > 1e-10:
        raise ValueError("points are not at unit distance")
    return HeisPoint(p1.z, 0.5 * (p1.t + p2.t))


def vertical_equidistant_locus(p1: HeisPoint, p2: HeisPoint) -> CCircle:
    """The set of points at distance 1 from both members of a unit-distance
    vertical pair: a finite C-circle of radius (3/4)^(1/4).

    For the normalized pair (0, -1/2), (0, 1/2) this is the planar circle
    |z| = (3/4)^(1/4), t = 0; a general pair is handled by conjugating with
    the left translation that moves its midpoint to the origin.
    """
    mid = _normalize_vertical_pair(p1, p2)
    return CCircle(
        kind=CircleKind.FINITE,
        radius=VERTICAL_LOCUS_RADIUS,
        transform=Similarity.translation_by(mid),
    )


@dataclass(frozen=True)
class AxisScan:
    """Grid report for third-point candidates on the axis of a vertical pair.

    Offsets are measured from the pair midpoint.  ``min_deviation`` is the
    smallest value of max(|d(q, p1) - 1|, |d(q, p2) - 1|) over the grid; it
    stays well above zero, which is the numerical content of the no-third-
    point statement.  ``midpoint_deviation`` is the value at offset 0, the
    unique point equidistant from the pair, where both distances equal
    (1/4)^(1/4).
    """

    min_deviation: float
    argmin_offset: float
    midpoint_deviation: float
    grid_n: int
    span: float


def no_third_on_axis(
    p1: HeisPoint,
    p2: HeisPoint,
    grid_n: int = 100_000,
    span: float = 3.0,
) -> AxisScan:
    """Scan the vertical axis through a unit-distance pair for a third point
    at distance 1 from both; report how badly every candidate fails."""
    if grid_n < 1:
        raise ValueError("grid_n must be at least 1")
    mid = _normalize_vertical_pair(p1, p2)
    taus = np.linspace(-span, span, grid_n) if grid_n > 1 else np.array([0.0])
    z = np.full(taus.shape, mid.z, dtype=complex)
    dev1 = np.abs(dist4_zt(z, mid.t + taus, p1.z, p1.t) ** 0.25 - 1.0)
    dev2 = np.abs(dist4_zt(z, mid.t + taus, p2.z, p2.t) ** 0.25 - 1.0)
    dev = np.maximum(dev1, dev2)
    i = int(np.argmin(dev))
    half = abs(p2.t - p1.t) / 2.0
    mid_dev = abs((half * half) ** 0.25 - 1.0)
    return AxisScan(
        min_deviation=float(dev[i]),
        argmin_offset=float(taus[i]),
        midpoint_deviation=mid_dev,
        grid_n=grid_n,
        span=span,
    )
