"""Spherical coordinates on the unit Koranyi sphere |z|^4 + t^2 = 1.

A point of the sphere is written as

    z = sqrt(cos(theta)) * exp(i phi),    t = sin(theta),

with theta in [-pi/2, pi/2] and phi in [-pi, pi).  In these coordinates the
fourth power of the distance between two sphere points collapses to

    d^4 = 2 + 6 cos(theta) cos(theta0) - 2 sin(theta) sin(theta0)
          - 8 sqrt(cos(theta) cos(theta0)) * cos((theta + theta0)/2)
              * cos((phi + theta/2) - (phi0 + theta0/2)),

which is what makes the unit-distance loci on the sphere tractable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .heis import HeisPoint, dist4_zt, gauge

__all__ = [
    "SpherePoint",
    "PoleLocusError",
    "embed",
    "project",
    "sphere_dist4",
    "locus_cos",
]

_POLE_MARGIN = 1e-6  # |theta| beyond pi/2 - margin counts as a pole


@dataclass(frozen=True)
class SpherePoint:
    """Coordinates (theta, phi) of a unit-sphere point; phi is stored
    normalized into [-pi, pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ValueError("non-finite sphere coordinates")
        if abs(theta) > math.pi / 2 + 1e-12:
            raise ValueError(f"theta={theta!r} outside [-pi/2, pi/2]")
        theta = max(-math.pi / 2, min(math.pi / 2, theta))
        phi = math.remainder(phi, 2 * math.pi)
        if phi >= math.pi:  # remainder returns (-pi, pi]; fold the top end
            phi -= 2 * math.pi
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


class PoleLocusError(ValueError):
    """Raised when the unit-distance locus degenerates at a pole center.

    For the centers (0, 1) and (0, -1) the locus is not a graph over the
    phase offset; it is the circle of constant latitude carried in
    ``locus_theta`` (pi/6, resp. -pi/6).
    """

    def __init__(self, locus_theta: float):
        super().__init__(
            "center at a pole: the unit-distance locus is the circle "
            f"theta = {locus_theta!r}"
        )
        self.locus_theta = locus_theta


def embed(sp: SpherePoint) -> HeisPoint:
    """Map (theta, phi) to the sphere point (sqrt(cos theta) e^{i phi}, sin theta)."""
    c = max(0.0, math.cos(sp.theta))  # cos may round negative at the poles
    return HeisPoint(math.sqrt(c) * cmath.exp(1j * sp.phi), math.sin(sp.theta))


def project(p: HeisPoint, tol: float = 1e-10) -> SpherePoint:
    """Inverse of :func:`embed` for points on the unit sphere.

    Rejects points whose gauge differs from 1 by more than ``tol``.  At the
    poles (z = 0) the azimuth is undefined and returned as 0.  The latitude
    equals arcsin(t), evaluated as atan2(t, |z|^2) because on the sphere
    (|z|^2, t) is a unit vector: unlike arcsin this stays fully conditioned
    at the poles.
    """
    if abs(gauge(p) - 1.0) > tol:
        raise ValueError(f"point off the unit Koranyi sphere: gauge={gauge(p)!r}")
    theta = math.atan2(p.t, abs(p.z) ** 2)
    phi = cmath.phase(p.z) if p.z != 0 else 0.0
    return SpherePoint(theta, phi)


def sphere_dist4(p: SpherePoint, p0: SpherePoint) -> float:
    """d^4 between two unit-sphere points, straight from the spherical form."""
    c, c0 = math.cos(p.theta), math.cos(p0.theta)
    return (
        2.0
        + 6.0 * c * c0
        - 2.0 * math.sin(p.theta) * math.sin(p0.theta)
        - 8.0
        * math.sqrt(max(0.0, c * c0))
        * math.cos((p.theta + p0.theta) / 2.0)
        * math.cos((p.phi + p.theta / 2.0) - (p0.phi + p0.theta / 2.0))
    )


def locus_cos(theta: float, p0: SpherePoint) -> float:
    """Required value of cos((phi + theta/2) - (phi0 + theta0/2)) for a sphere
    point at latitude ``theta`` to lie at distance 1 from ``p0``.

    Values with |result| > 1 mean the unit sphere around ``p0`` does not reach
    latitude ``theta``.  Raises :class:`PoleLocusError` when ``p0`` is a pole,
    where the locus is the latitude circle theta = +/- pi/6 instead.
    """
    if abs(p0.theta) > math.pi / 2 - _POLE_MARGIN:
        raise PoleLocusError(math.copysign(math.pi / 6, p0.theta))
    c, c0 = math.cos(theta), math.cos(p0.theta)
    if c * c0 <= 0.0:
        raise ValueError("latitude outside the coordinate chart (cos theta <= 0)")
    half = math.cos((theta + p0.theta) / 2.0)
    if abs(half) < 1e-12:
        raise ValueError("degenerate latitude: cos((theta + theta0)/2) = 0")
    num = 1.0 + 6.0 * c * c0 - 2.0 * math.sin(theta) * math.sin(p0.theta)
    return num / (8.0 * math.sqrt(c * c0) * half)


def _sphere_dist4_check(p: SpherePoint, p0: SpherePoint) -> float:
    """Cross-check value of d^4 via the Cartesian formula; test use."""
    a, b = embed(p), embed(p0)
    return float(dist4_zt(a.z, a.t, b.z, b.t))
