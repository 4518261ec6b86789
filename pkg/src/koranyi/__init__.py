"""Heisenberg group with the Koranyi metric: equilateral point sets,
certified numerically.

The package certifies that the equilateral dimension of the first Heisenberg
group under the Koranyi distance is exactly 4: four mutually unit-distant
points exist (the canonical triple on the planar circle of radius 12^(-1/4)
plus an apex at height sqrt(11/12)), and a fifth is excluded by a sweep of a
degree-6 partner polynomial along the curve of points equidistant from two
fixed ones.
"""

from .heis import (
    ORIGIN,
    HeisPoint,
    Similarity,
    compose,
    distance,
    dist4,
    gauge,
    gauge4,
    inverse,
)
from .sphere import PoleLocusError, SpherePoint, embed, project, sphere_dist4
from .ccircle import (
    CANONICAL_RADIUS,
    VERTICAL_LOCUS_RADIUS,
    CCircle,
    CircleKind,
    chord_angle,
    chord_pair_distance,
    equilateral_dim_finite,
    no_third_on_axis,
    vertical_equidistant_locus,
)
from .curve import Branch, CurvePoint, T_MAX, THETA_MAX
from .solver import (
    APEX_HEIGHT,
    EquilateralCertificate,
    RootStructureError,
    SexticPoly,
    admissible_roots,
    build_sextic,
    canonical_quadruple,
    canonical_triple,
    certify,
    equidistant_to_triple,
    partner_gap,
    partner_sweep,
    partners,
    quadruple_points,
    sextic_value,
    triple_points,
    verify_theorems,
)

__version__ = "0.1.0"
