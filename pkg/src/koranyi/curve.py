"""The spherical curve of points at unit distance from both (0,0) and (1,0).

After normalizing an equilateral set so that two of its points are the origin
and (1, 0), every further point lies on the intersection of the two unit
Koranyi spheres around them.  In spherical coordinates that intersection is
the solution set of

    1 + 6 cos(theta) - 8 sqrt(cos theta) cos(theta/2) cos(phi + theta/2) = 0,

a closed curve made of two graphs

    phi_{+/-}(theta) = -theta/2 +/- arccos(locus_cos(theta)),

    locus_cos(theta) = (1 + 6 cos theta) / (8 sqrt(cos theta) cos(theta/2)),

over theta in [-THETA_MAX, THETA_MAX] with THETA_MAX = arccos(5/2 - sqrt(6)).
The curve admits three involutions (antipodal, symmetric, vertical) whose
fourth-power distance profiles have rational closed forms; those profiles
drive the five-point exclusion argument in :mod:`koranyi.solver`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import heis, sphere
from .heis import HeisPoint
from .sphere import SpherePoint

__all__ = [
    "THETA_MAX",
    "T_MAX",
    "Branch",
    "CurvePoint",
    "locus_cos",
    "locus_cos_deriv",
    "phi",
    "antipodal",
    "symmetric",
    "vertical",
    "antipodal_dist4",
    "symmetric_dist4",
    "vertical_dist4",
    "horizontality_defect",
    "curve_residual",
    "antipodal_maximizers",
    "antipodal_minimizers",
    "VerticalUnitSolution",
    "solve_vertical_unit",
]

# Largest latitude reached by the curve: cos(theta) solves 4c^2 - 20c + 1 = 0.
THETA_MAX = math.acos(2.5 - math.sqrt(6.0))
# Same bound in the half-angle variable t = tan(theta/2); closed form
# sqrt(3 + 8 sqrt(6)) / 5, used as a cross-check in the tests.
T_MAX = math.tan(THETA_MAX / 2.0)

_DOMAIN_SLACK = 1e-12


class Branch(enum.Enum):
    """Which of the two azimuth graphs a curve point lives on."""

    PLUS = 1
    MINUS = -1

    @property
    def sign(self) -> int:
        return self.value

    @property
    def other(self) -> "Branch":
        return Branch.MINUS if self is Branch.PLUS else Branch.PLUS


def _check_domain(theta: float, interior: bool = False) -> float:
    theta = float(theta)
    if not math.isfinite(theta) or abs(theta) > THETA_MAX + _DOMAIN_SLACK:
        raise ValueError(f"theta={theta!r} outside the curve domain "
                         f"[-{THETA_MAX!r}, {THETA_MAX!r}]")
    if interior and abs(theta) >= THETA_MAX:
        raise ValueError(f"theta={theta!r} not in the open curve domain")
    return theta


def locus_cos(theta: float) -> float:
    """cos(phi + theta/2) required at latitude theta; ranges over
    [sqrt(5/8), 1] on the curve domain."""
    theta = _check_domain(theta)
    c = math.cos(theta)
    return (1.0 + 6.0 * c) / (8.0 * math.sqrt(c) * math.cos(theta / 2.0))


def locus_cos_deriv(theta: float) -> float:
    """Derivative of :func:`locus_cos`; vanishes exactly at 0 and at
    +/- arccos(1/4)."""
    theta = _check_domain(theta, interior=True)
    c = math.cos(theta)
    return -math.sin(theta) * (4.0 * c - 1.0) / (
        32.0 * c ** 1.5 * math.cos(theta / 2.0) ** 3
    )


def phi(theta: float, branch: Branch = Branch.PLUS) -> float:
    """Azimuth of the curve point at ``theta`` on the given branch.

    Near the endpoints locus_cos approaches 1 and arccos loses about half the
    working precision; azimuths there are good to roughly 1e-8.
    """
    theta = _check_domain(theta)
    f = min(1.0, locus_cos(theta))
    return -theta / 2.0 + branch.sign * math.acos(f)


@dataclass(frozen=True)
class CurvePoint:
    """A curve point, stored as latitude plus branch choice."""

    theta: float
    branch: Branch = Branch.PLUS

    def __post_init__(self):
        object.__setattr__(self, "theta", _check_domain(self.theta))

    @property
    def phi(self) -> float:
        return phi(self.theta, self.branch)

    @property
    def sphere(self) -> SpherePoint:
        return SpherePoint(self.theta, self.phi)

    @property
    def point(self) -> HeisPoint:
        return sphere.embed(self.sphere)

    @property
    def t(self) -> float:
        """Half-angle parameter tan(theta/2) used by the partner polynomial."""
        return math.tan(self.theta / 2.0)


def antipodal(p: CurvePoint) -> CurvePoint:
    """(theta, phi) -> (-theta, -phi); swaps the branch."""
    return CurvePoint(-p.theta, p.branch.other)


def symmetric(p: CurvePoint) -> CurvePoint:
    """(theta, phi) -> (-theta, phi + theta); keeps the branch."""
    return CurvePoint(-p.theta, p.branch)


def vertical(p: CurvePoint) -> CurvePoint:
    """(theta, phi) -> (theta, -phi - theta); swaps the branch.  Equals the
    composition of the antipodal and symmetric involutions."""
    return CurvePoint(p.theta, p.branch.other)


def antipodal_dist4(theta: float) -> float:
    """d^4 from a curve point at ``theta`` to its antipodal image,

        (1/2) (8 c^3 - 12 c^2 + 12 c + 7) / (1 + c),   c = cos(theta).

    Ranges over [(2 sqrt(6) - 3)^2, 15/4]; in particular it never reaches 1,
    which is what feeds the intermediate-value partner argument.
    """
    theta = _check_domain(theta)
    c = math.cos(theta)
    return 0.5 * (8.0 * c ** 3 - 12.0 * c * c + 12.0 * c + 7.0) / (1.0 + c)


def symmetric_dist4(theta: float) -> float:
    """d^4 from a curve point at ``theta`` to its symmetric image,
    16 sin^4(theta/2) = 4 (1 - cos theta)^2."""
    theta = _check_domain(theta)
    return 16.0 * math.sin(theta / 2.0) ** 4


def vertical_dist4(theta: float) -> float:
    """d^4 from a curve point at ``theta`` to its vertical (branch-swap)
    image, cos(theta) (-4 cos^2 + 20 cos - 1) / (2 (1 + cos))."""
    theta = _check_domain(theta)
    c = math.cos(theta)
    return c / (2.0 * (1.0 + c)) * (-4.0 * c * c + 20.0 * c - 1.0)


def horizontality_defect(theta: float, branch: Branch = Branch.PLUS) -> float:
    """Contact-form pairing d(theta) + 2 d(phi) along the curve, per unit
    d(theta): equals -sign(branch) * 2 f'(theta) / sqrt(1 - f(theta)^2).

    Zero exactly where the curve is tangent to the horizontal foliation
    (theta in {0, +/- arccos(1/4)}); unbounded at the branch junctions,
    which are rejected.
    """
    theta = _check_domain(theta, interior=True)
    f = locus_cos(theta)
    rad = 1.0 - f * f
    if rad <= 0.0:
        raise ValueError("branch junction: horizontality defect diverges")
    return -branch.sign * 2.0 * locus_cos_deriv(theta) / math.sqrt(rad)


def curve_residual(theta: float, phi_value: float) -> float:
    """Left-hand side of the defining equation; zero iff (theta, phi) is on
    the curve.  Total on the chart, no domain restriction."""
    c = math.cos(theta)
    if c < 0.0:
        raise ValueError("latitude outside the coordinate chart")
    return 1.0 + 6.0 * c - 8.0 * math.sqrt(c) * math.cos(theta / 2.0) * math.cos(
        phi_value + theta / 2.0
    )


def antipodal_maximizers() -> tuple[CurvePoint, ...]:
    """The six points where the antipodal distance profile attains 15/4.

    These are also exactly the tangency points of the curve with the
    horizontal foliation.  Order: upper triple then its antipodal images,
    i.e. (0, +arccos(7/8)), (arccos(1/4), 0), (arccos(1/4), -arccos(1/4)),
    then their images under the antipodal involution.
    """
    a14 = math.acos(0.25)
    upper = (
        CurvePoint(0.0, Branch.PLUS),
        CurvePoint(a14, Branch.PLUS),
        CurvePoint(a14, Branch.MINUS),
    )
    return upper + tuple(antipodal(p) for p in upper)


def antipodal_minimizers() -> tuple[CurvePoint, ...]:
    """The six points where the antipodal distance profile attains its
    minimum (2 sqrt(6) - 3)^2: the two branch junctions and the four points
    at latitude +/- arccos((sqrt(6) - 1)/2).  Same ordering convention as
    :func:`antipodal_maximizers`."""
    thr = math.acos((math.sqrt(6.0) - 1.0) / 2.0)
    upper = (
        CurvePoint(THETA_MAX, Branch.PLUS),
        CurvePoint(thr, Branch.PLUS),
        CurvePoint(thr, Branch.MINUS),
    )
    return upper + tuple(antipodal(p) for p in upper)


@dataclass(frozen=True)
class VerticalUnitSolution:
    """Root of vertical_dist4 = 1 on (0, THETA_MAX), with the residuals of
    two candidate cubics in c = cos(theta) evaluated at the solution."""

    theta: float
    cos_theta: float
    derived_cubic_residual: float  # 4c^3 - 20c^2 + 3c + 2, from vertical_dist4 = 1
    printed_cubic_residual: float  # 4c^3 -  2c^2 + 3c + 2, does NOT vanish here


def solve_vertical_unit() -> VerticalUnitSolution:
    """Solve vertical_dist4(theta) = 1 on (0, THETA_MAX) by bisection.

    vertical_dist4 decreases from 15/4 at 0 to 0 at the junction, so the
    crossing is unique; cos(theta) lands near 0.4224.  Clearing denominators
    in vertical_dist4 = 1 gives the cubic 4c^3 - 20c^2 + 3c + 2 = 0; the
    residual of the variant with -2c^2 is reported alongside because it does
    not vanish at the solution (it evaluates to about 3.2).
    """
    lo, hi = 0.0, THETA_MAX - 1e-12
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if vertical_dist4(mid) > 1.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16:
            break
    theta = 0.5 * (lo + hi)
    c = math.cos(theta)
    return VerticalUnitSolution(
        theta=theta,
        cos_theta=c,
        derived_cubic_residual=4.0 * c ** 3 - 20.0 * c * c + 3.0 * c + 2.0,
        printed_cubic_residual=4.0 * c ** 3 - 2.0 * c * c + 3.0 * c + 2.0,
    )


def distance_between(a: CurvePoint, b: CurvePoint) -> float:
    """Koranyi distance between two curve points."""
    return heis.distance(a.point, b.point)
