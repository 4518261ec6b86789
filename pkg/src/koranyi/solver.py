"""Partner polynomial, canonical equilateral sets, and theorem verifiers.

Fix a curve point p0 with half-angle parameter t0 = tan(theta0/2).  Squaring
the unit-distance condition between p0 and a second curve point with
parameter t = tan(theta/2) yields the degree-6 polynomial

    P_t0(t) = (5 t0 (7 - 5 t0^2) t^3 - (31 t0^2 - 5) t^2
               + 5 t0 (7 t0^2 + 3) t - 7 + 5 t0^2)^2
              - (-25 t0^4 + 6 t0^2 + 15)(-25 t^4 + 6 t^2 + 15)(t0 t - 1)^2,

symmetric in (t0, t).  Its admissible roots locate every distance-1 partner
of p0 on the curve; squaring makes P = 0 necessary but not sufficient, so
every candidate is confirmed against the metric before being reported.  For
interior t0 there are exactly two roots, of opposite sign, and the partners
they produce are never at unit distance from each other; swept over t0 this
excludes a fifth mutually unit-distant point.

The module also builds the canonical 3- and 4-point equilateral sets, runs
the grid search certifying that the apex points are the only ones equidistant
from the canonical triple, and bundles everything into per-theorem pass/fail
reports.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage, optimize

from . import curve
from .ccircle import (
    CANONICAL_RADIUS,
    VERTICAL_LOCUS_RADIUS,
    chord_pair_distance,
    equilateral_dim_finite,
    vertical_equidistant_locus,
)
from .curve import Branch, CurvePoint, T_MAX
from .heis import HeisPoint, dist4_zt, distance

__all__ = [
    "APEX_HEIGHT",
    "SexticPoly",
    "RootStructureError",
    "build_sextic",
    "sextic_value",
    "sturm_root_count",
    "admissible_roots",
    "partners",
    "partner_gap",
    "triple_points",
    "quadruple_points",
    "EquilateralCertificate",
    "certify",
    "canonical_triple",
    "canonical_quadruple",
    "EquidistantSearch",
    "equidistant_to_triple",
    "PartnerSweep",
    "partner_sweep",
    "TheoremCheck",
    "VerificationReport",
    "verify_theorems",
]

# Height of the apex points (0, +/- APEX_HEIGHT) completing the canonical
# triple to the canonical quadruple.
APEX_HEIGHT = math.sqrt(11.0 / 12.0)

_BOUNDARY_SNAP = 1e-9  # |t0| this close to T_MAX uses the cubic-factor path


class RootStructureError(RuntimeError):
    """The computed root or partner structure contradicts the expected one."""


@dataclass(frozen=True, eq=False)
class SexticPoly:
    """Expanded partner polynomial for a fixed t0: seven coefficients in
    ascending powers of t."""

    t0: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) != 7:
            raise ValueError("expected 7 coefficients")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    def __call__(self, t):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @property
    def degree(self) -> int:
        scale = max(1.0, max(abs(c) for c in self.coeffs))
        for k in range(6, -1, -1):
            if abs(self.coeffs[k]) > 1e-9 * scale:
                return k
        return 0


def _cubic_factor(t0: float) -> np.ndarray:
    """Ascending coefficients of the cubic whose square is the left term."""
    return np.array(
        [
            5.0 * t0 * t0 - 7.0,
            5.0 * t0 * (7.0 * t0 * t0 + 3.0),
            5.0 - 31.0 * t0 * t0,
            5.0 * t0 * (7.0 - 5.0 * t0 * t0),
        ]
    )


def _quartic_weight(x: float) -> float:
    """-25 x^4 + 6 x^2 + 15; positive on (-T_MAX, T_MAX), zero at the ends."""
    return -25.0 * x ** 4 + 6.0 * x * x + 15.0


def build_sextic(t0: float) -> SexticPoly:
    """Expand the partner polynomial by coefficient convolution.

    The degree-6 coefficient comes out as 1600 t0^2 (1 - t0^2); at t0 = 0 the
    degree drops to 4 and at t0 = +/- T_MAX the subtracted term vanishes,
    leaving the perfect square of the cubic factor.
    """
    t0 = float(t0)
    if not math.isfinite(t0) or abs(t0) > T_MAX + 1e-12:
        raise ValueError(f"t0={t0!r} outside the admissible interval "
                         f"[-{T_MAX!r}, {T_MAX!r}]")
    q = _cubic_factor(t0)
    quart = np.array([15.0, 0.0, 6.0, 0.0, -25.0])
    window = np.array([1.0, -2.0 * t0, t0 * t0])
    coeffs = np.convolve(q, q) - _quartic_weight(t0) * np.convolve(quart, window)
    return SexticPoly(t0=t0, coeffs=tuple(coeffs))


def sextic_value(t0: float, t: float) -> float:
    """Partner polynomial evaluated through the unexpanded product form;
    independent of :func:`build_sextic` and used to cross-check it."""
    q = (
        5.0 * t0 * (7.0 - 5.0 * t0 * t0) * t ** 3
        - (31.0 * t0 * t0 - 5.0) * t * t
        + 5.0 * t0 * (7.0 * t0 * t0 + 3.0) * t
        - 7.0
        + 5.0 * t0 * t0
    )
    return q * q - _quartic_weight(t0) * _quartic_weight(t) * (t0 * t - 1.0) ** 2


def _sturm_chain(desc: np.ndarray) -> list[np.ndarray]:
    desc = np.trim_zeros(np.asarray(desc, dtype=float), "f")
    if desc.size == 0:
        return []
    chain = [desc]
    if desc.size > 1:
        chain.append(np.polyder(desc))
    while chain[-1].size > 1:
        rem = -np.polydiv(chain[-2], chain[-1])[1]
        scale = float(np.max(np.abs(rem))) if rem.size else 0.0
        if scale == 0.0:
            break
        while rem.size and abs(rem[0]) < 1e-12 * scale:
            rem = rem[1:]
        if rem.size == 0:
            break
        chain.append(rem / np.max(np.abs(rem)))
    return chain


def _sign_variations(chain: list[np.ndarray], x: float) -> int:
    signs = []
    for c in chain:
        v = float(np.polyval(c, x))
        if v != 0.0:
            signs.append(v > 0.0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(coeffs: tuple[float, ...], lo: float, hi: float) -> int:
    """Number of distinct real roots in (lo, hi] by Sturm sign variations.

    Floating-point Sturm chains are only trustworthy away from multiple
    roots; this is a cross-check for interior t0, not a primary isolator.
    """
    chain = _sturm_chain(np.asarray(list(coeffs), dtype=float)[::-1])
    if not chain:
        return 0
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def _bisect(poly: SexticPoly, a: float, b: float, xtol: float = 1e-13) -> float:
    fa = poly(a)
    while b - a > xtol:
        m = 0.5 * (a + b)
        fm = poly(m)
        if fm == 0.0:
            return m
        if (fa < 0.0) != (fm < 0.0):
            b = m
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def _scan_roots(poly: SexticPoly, n_scan: int) -> list[float]:
    """Sign-change scan over [-T_MAX, T_MAX] plus bisection refinement, with
    a guard against sign-preserving near-zero dips (suspected double roots)."""
    xs = np.linspace(-T_MAX, T_MAX, n_scan)
    ys = np.polynomial.polynomial.polyval(xs, np.asarray(poly.coeffs))
    roots: list[float] = []
    exact = np.nonzero(ys == 0.0)[0]
    roots.extend(float(xs[i]) for i in exact)
    sign = np.sign(ys)
    crossings = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    for i in crossings:
        roots.append(_bisect(poly, float(xs[i]), float(xs[i + 1])))
    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if not deduped or r - deduped[-1] > 1e-10:
            deduped.append(r)
    # Double-root guard: a grid value tiny relative to the coefficient scale
    # without an adjacent crossing means a root the scan cannot bracket.
    scale = max(1.0, max(abs(c) for c in poly.coeffs))
    suspicious = np.nonzero(np.abs(ys) < 1e-9 * scale)[0]
    for i in suspicious:
        near_root = any(abs(float(xs[i]) - r) <= 2.0 * (xs[1] - xs[0]) for r in deduped)
        if not near_root:
            raise RootStructureError(
                f"sign-preserving near-zero of P at t={float(xs[i])!r} "
                f"(t0={poly.t0!r}): suspected double root"
            )
    return deduped


def _quartic_roots_at_zero() -> list[float]:
    # P_0(t) = 400 t^4 - 160 t^2 - 176; positive root of the quadratic in t^2
    # is (1 + 2 sqrt(3)) / 5.
    r = math.sqrt((1.0 + 2.0 * math.sqrt(3.0)) / 5.0)
    return [-r, r]


def _cubic_roots(t0: float) -> list[float]:
    asc = _cubic_factor(t0)
    rr = np.roots(asc[::-1])
    out = sorted(float(r.real) for r in rr if abs(r.imag) < 1e-9)
    return [r for r in out if abs(r) <= T_MAX + 1e-12]


def admissible_roots(
    t0: float,
    n_scan: int = 4096,
    boundary: bool = False,
    cross_check: bool = False,
) -> list[float]:
    """All real roots of the partner polynomial in [-T_MAX, T_MAX].

    Interior t0 must produce exactly two roots (of opposite sign when
    t0 != 0); at t0 = 0 the explicit quartic is used and at the interval
    ends (or with ``boundary=True``) the polynomial is a perfect square and
    the cubic factor is solved instead, giving a single root.  Any other
    outcome raises :class:`RootStructureError` instead of proceeding.

    ``cross_check=True`` additionally validates the count with a Sturm
    sequence on the expanded coefficients (interior t0 only).
    """
    t0 = float(t0)
    if not math.isfinite(t0) or abs(t0) > T_MAX + 1e-12:
        raise ValueError(f"t0={t0!r} outside the admissible interval")

    at_boundary = boundary or (T_MAX - abs(t0)) <= _BOUNDARY_SNAP
    if cross_check and at_boundary:
        raise ValueError("Sturm cross-check is not meaningful at the boundary")
    if at_boundary:
        roots = _cubic_roots(t0)
        if len(roots) != 1:
            raise RootStructureError(
                f"cubic factor at t0={t0!r} produced {len(roots)} real roots, expected 1"
            )
        return roots

    if t0 == 0.0:
        roots = _quartic_roots_at_zero()
    else:
        poly = build_sextic(t0)
        roots = _scan_roots(poly, n_scan)
        if len(roots) != 2:
            # Close root pairs near the interval ends can slip between
            # coarse samples; one deterministic refinement pass.
            roots = _scan_roots(poly, 16 * n_scan)
        if len(roots) != 2:
            raise RootStructureError(
                f"found {len(roots)} admissible roots at t0={t0!r}, expected 2"
            )
        if t0 != 0.0 and not (roots[0] < 0.0 < roots[1]):
            raise RootStructureError(
                f"admissible roots at t0={t0!r} are not of opposite sign: {roots!r}"
            )

    if cross_check:
        coeffs = build_sextic(t0).coeffs
        n = sturm_root_count(coeffs, -T_MAX - 1e-9, T_MAX + 1e-9)
        if n != len(roots):
            raise RootStructureError(
                f"Sturm count {n} disagrees with isolated roots {roots!r} at t0={t0!r}"
            )
    return roots


def _partners_from_roots(
    p0: CurvePoint, roots: list[float], tol: float
) -> list[CurvePoint]:
    origin = p0.point
    found: list[CurvePoint] = []
    for r in roots:
        theta = 2.0 * math.atan(r)
        for branch in (Branch.PLUS, Branch.MINUS):
            cand = CurvePoint(theta, branch)
            if abs(distance(cand.point, origin) - 1.0) < tol:
                if not any(
                    c.theta == cand.theta and c.branch is cand.branch for c in found
                ):
                    found.append(cand)
    found.sort(key=lambda c: (c.theta, c.branch.sign))
    return found


def partners(p0: CurvePoint, tol: float = 1e-9) -> list[CurvePoint]:
    """All curve points at distance 1 from ``p0``.

    Candidates come from the admissible roots; each is confirmed against the
    metric on both branches, since the squared derivation cannot tell the
    branches apart.  Near the branch junctions the azimuth itself is only
    good to about 1e-8 (arccos conditioning), so the confirmation tolerance
    is widened there.
    """
    t0 = p0.t
    at_boundary = (T_MAX - abs(t0)) <= _BOUNDARY_SNAP
    verify_tol = max(tol, 1e-6) if at_boundary else tol
    roots = admissible_roots(t0)
    found = _partners_from_roots(p0, roots, verify_tol)
    if not found:
        raise RootStructureError(
            f"no distance-1 partner verified for p0 at theta={p0.theta!r}; "
            "at least two must exist"
        )
    return found


def partner_gap(p0: CurvePoint) -> float:
    """|d(p1, p2) - 1| for the two partners of an interior curve point.

    Strictly positive; its positivity over a sweep of p0 is the numerical
    statement that no fifth equilateral point exists.
    """
    if (T_MAX - abs(p0.t)) <= _BOUNDARY_SNAP:
        raise ValueError("partner gap needs an interior curve point")
    pts = partners(p0)
    if len(pts) != 2:
        raise RootStructureError(
            f"expected exactly 2 partners at theta={p0.theta!r}, got {len(pts)}"
        )
    return abs(distance(pts[0].point, pts[1].point) - 1.0)


# ---------------------------------------------------------------------------
# canonical sets and certificates
# ---------------------------------------------------------------------------


def triple_points(radius: float = CANONICAL_RADIUS) -> list[HeisPoint]:
    """Vertices of the planar equilateral triple at the given circle radius."""
    return [
        HeisPoint(radius * complex(math.cos(a), math.sin(a)), 0.0)
        for a in (0.0, 2.0 * math.pi / 3.0, -2.0 * math.pi / 3.0)
    ]


def quadruple_points(
    radius: float = CANONICAL_RADIUS, apex: float = APEX_HEIGHT
) -> list[HeisPoint]:
    """Canonical triple plus the upper apex point (0, apex)."""
    return triple_points(radius) + [HeisPoint(0j, apex)]


@dataclass(frozen=True, eq=False)
class EquilateralCertificate:
    """Pairwise unit-distance check for a point set.

    ``residuals[i][j]`` is |d(p_i, p_j) - 1| off the diagonal and 0 on it;
    the verdict is true iff no residual exceeds the tolerance.
    """

    points: tuple[HeisPoint, ...]
    target: float
    residuals: np.ndarray
    tol: float
    verdict: bool

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals))

    @property
    def worst_pair(self) -> tuple[int, int]:
        i, j = np.unravel_index(int(np.argmax(self.residuals)), self.residuals.shape)
        return (int(min(i, j)), int(max(i, j)))

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "tol": self.tol,
            "verdict": self.verdict,
            "max_residual": self.max_residual,
            "worst_pair": list(self.worst_pair),
            "points": [[p.z.real, p.z.imag, p.t] for p in self.points],
            "residuals": [[float(v) for v in row] for row in self.residuals],
        }


def certify(points: list[HeisPoint], tol: float = 1e-12) -> EquilateralCertificate:
    """Certify a point set as 1-equilateral at the given tolerance."""
    if len(points) < 2:
        raise ValueError("need at least two points to certify")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    n = len(points)
    res = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            r = abs(distance(points[i], points[j]) - 1.0)
            res[i, j] = res[j, i] = r
    return EquilateralCertificate(
        points=tuple(points),
        target=1.0,
        residuals=res,
        tol=float(tol),
        verdict=bool(np.max(res) <= tol),
    )


def canonical_triple(tol: float = 1e-12) -> EquilateralCertificate:
    return certify(triple_points(), tol)


def canonical_quadruple(tol: float = 1e-12) -> EquilateralCertificate:
    return certify(quadruple_points(), tol)


# ---------------------------------------------------------------------------
# equidistant-point search
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EquidistantSearch:
    """Outcome of the grid-plus-refinement search for points equidistant
    (at distance 1) from a planar triple.

    ``points`` hold the refined minima whose max deviation fell below the
    acceptance tolerance; ``rejected_*`` list every other refined basin, so
    an empty sub-1e-3 rejected set certifies that no further equidistant
    point hides anywhere on the grid.
    """

    points: tuple[HeisPoint, ...]
    residuals: tuple[float, ...]
    rejected_points: tuple[HeisPoint, ...]
    rejected_residuals: tuple[float, ...]
    n_candidates: int
    grid_axis: int


def _triple_max_deviation(x: float, y: float, t: float, verts: list[HeisPoint]) -> float:
    z = complex(x, y)
    return max(
        abs(float(dist4_zt(z, t, w.z, w.t)) ** 0.25 - 1.0) for w in verts
    )


def equidistant_to_triple(
    grid_n: int = 1_000_000,
    refine: bool = True,
    radius: float = CANONICAL_RADIUS,
    accept_tol: float = 1e-8,
) -> EquidistantSearch:
    """Search [-2, 2]^3 for points at distance 1 from all three vertices of
    the planar triple.

    ``grid_n`` is the total cell budget (at least 1000); the per-axis count
    is its cube root.  Grid-local minima of the max deviation below 0.35 are
    refined by derivative-free least squares on the three d^4 residuals and
    clustered; for the canonical radius exactly the two apex points
    (0, +/- sqrt(11/12)) survive.
    """
    if grid_n < 1000:
        raise ValueError("grid_n must be at least 1000 cells")
    verts = triple_points(radius)
    n = max(10, round(grid_n ** (1.0 / 3.0)))
    ax = np.linspace(-2.0, 2.0, n)
    X, Y, T = np.meshgrid(ax, ax, ax, indexing="ij")
    Z = X + 1j * Y
    F = None
    for w in verts:
        dev = np.abs(dist4_zt(Z, T, w.z, w.t) ** 0.25 - 1.0)
        F = dev if F is None else np.maximum(F, dev)
    local_min = F == ndimage.minimum_filter(F, size=3, mode="nearest")
    cand = np.argwhere(local_min & (F < 0.35))
    candidates = [
        (float(ax[i]), float(ax[j]), float(ax[k]), float(F[i, j, k]))
        for i, j, k in cand
    ]
    candidates.sort(key=lambda c: (c[3], c[0], c[1], c[2]))

    if not refine:
        pts = tuple(HeisPoint(complex(x, y), t) for x, y, t, _ in candidates)
        vals = tuple(v for _, _, _, v in candidates)
        return EquidistantSearch(pts, vals, (), (), len(candidates), n)

    def residuals_vec(v):
        z = complex(v[0], v[1])
        return [float(dist4_zt(z, v[2], w.z, w.t)) - 1.0 for w in verts]

    clusters: list[tuple[np.ndarray, float]] = []
    for x, y, t, _ in candidates:
        sol = optimize.least_squares(
            residuals_vec, [x, y, t], xtol=1e-15, ftol=1e-15, gtol=1e-15
        )
        dev = _triple_max_deviation(sol.x[0], sol.x[1], sol.x[2], verts)
        for cx, _cv in clusters:
            if np.linalg.norm(cx - sol.x) < 1e-3:
                break
        else:
            clusters.append((sol.x, dev))

    accepted = sorted(
        (c for c in clusters if c[1] < accept_tol), key=lambda c: c[0][2]
    )
    rejected = sorted(
        (c for c in clusters if c[1] >= accept_tol),
        key=lambda c: (c[1], c[0][2], c[0][0], c[0][1]),
    )
    return EquidistantSearch(
        points=tuple(HeisPoint(complex(x[0], x[1]), x[2]) for x, _ in accepted),
        residuals=tuple(v for _, v in accepted),
        rejected_points=tuple(HeisPoint(complex(x[0], x[1]), x[2]) for x, _ in rejected),
        rejected_residuals=tuple(v for _, v in rejected),
        n_candidates=len(candidates),
        grid_axis=n,
    )


# ---------------------------------------------------------------------------
# sweep and theorem reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartnerSweep:
    """Results of sweeping the partner construction over interior t0."""

    samples: int
    min_gap: float
    argmin_t0: float
    max_partner_residual: float
    counts_ok: bool
    signs_ok: bool
    partners_ok: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.counts_ok and self.signs_ok and self.partners_ok


def partner_sweep(samples: int = 2001, partner_tol: float = 1e-9) -> PartnerSweep:
    """Run the root/partner/gap pipeline over ``samples`` uniform t0 values
    in the open admissible interval.  Deterministic, ordered by t0."""
    if samples < 2:
        raise ValueError("samples must be at least 2")
    min_gap = math.inf
    argmin = math.nan
    max_resid = 0.0
    counts_ok = signs_ok = partners_ok = True
    failures: list[str] = []

    for k in range(samples):
        ratio = (k + 1) / (samples + 1)
        t0 = (2.0 * ratio - 1.0) * T_MAX
        try:
            roots = admissible_roots(t0)
        except RootStructureError as exc:
            counts_ok = False
            if len(failures) < 8:
                failures.append(str(exc))
            continue
        if t0 != 0.0 and not (roots[0] < 0.0 < roots[1]):
            signs_ok = False
            if len(failures) < 8:
                failures.append(f"roots not of opposite sign at t0={t0!r}")
        p0 = CurvePoint(2.0 * math.atan(t0), Branch.PLUS)
        found = _partners_from_roots(p0, roots, partner_tol)
        if len(found) != 2:
            partners_ok = False
            if len(failures) < 8:
                failures.append(f"{len(found)} partners verified at t0={t0!r}")
            continue
        origin = p0.point
        for cand in found:
            max_resid = max(max_resid, abs(distance(cand.point, origin) - 1.0))
        gap = abs(distance(found[0].point, found[1].point) - 1.0)
        if gap < min_gap:
            min_gap, argmin = gap, t0

    return PartnerSweep(
        samples=samples,
        min_gap=min_gap,
        argmin_t0=argmin,
        max_partner_residual=max_resid,
        counts_ok=counts_ok,
        signs_ok=signs_ok,
        partners_ok=partners_ok,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class TheoremCheck:
    """One verified statement: pass/fail plus its worst-case margin.

    ``margin`` is the smallest slack among the statement's subchecks (each
    in its own units; the breakdown lives in ``details``).  Negative margin
    means the check failed.
    """

    name: str
    passed: bool
    margin: float
    runtime_s: float
    details: dict

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "margin": self.margin,
            "runtime_s": self.runtime_s,
            "details": self.details,
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[TheoremCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _check_three_in_finite(radius: float, grid_n: int) -> TheoremCheck:
    start = time.perf_counter()
    details: dict = {}
    margins: list[float] = []

    cert3 = certify(triple_points(radius), 1e-12)
    cert4 = certify(quadruple_points(radius), 1e-12)
    details["triple_max_residual"] = cert3.max_residual
    details["quadruple_max_residual"] = cert4.max_residual
    margins += [1e-12 - cert3.max_residual, 1e-12 - cert4.max_residual]

    search = equidistant_to_triple(grid_n=grid_n, radius=radius)
    expected = [HeisPoint(0j, -APEX_HEIGHT), HeisPoint(0j, APEX_HEIGHT)]
    match_ok = len(search.points) == 2 and all(
        abs(p.z) <= 1e-6 and abs(p.t - e.t) <= 1e-6
        for p, e in zip(search.points, expected)
    )
    other_basin = min(search.rejected_residuals, default=math.inf)
    details["equidistant_points"] = [[p.z.real, p.z.imag, p.t] for p in search.points]
    details["equidistant_residuals"] = list(search.residuals)
    details["other_basin_min_deviation"] = other_basin
    margins += [math.inf if match_ok else -1.0, other_basin - 1e-3]

    apex_dev = abs(distance(HeisPoint(0j, APEX_HEIGHT), HeisPoint(0j, -APEX_HEIGHT)) - 1.0)
    details["apex_pair_deviation"] = apex_dev
    margins.append(apex_dev - 0.38)

    margin = min(margins)
    return TheoremCheck(
        name="max4_three_in_finite_circle",
        passed=margin >= 0.0,
        margin=margin,
        runtime_s=time.perf_counter() - start,
        details=details,
    )


def _check_two_in_infinite() -> TheoremCheck:
    start = time.perf_counter()
    details: dict = {}
    margins: list[float] = []

    p1, p2 = HeisPoint(0j, -0.5), HeisPoint(0j, 0.5)
    locus = vertical_equidistant_locus(p1, p2)
    radius_err = abs(locus.radius - VERTICAL_LOCUS_RADIUS)
    details["locus_radius"] = locus.radius
    margins.append(1e-14 - radius_err)

    angles = np.linspace(0.0, 2.0 * math.pi, 1000, endpoint=False)
    worst = max(
        max(abs(distance(locus.point_at(a), p1) - 1.0),
            abs(distance(locus.point_at(a), p2) - 1.0))
        for a in angles
    )
    details["locus_sample_max_residual"] = worst
    margins.append(1e-12 - worst)

    gap = locus.radius - CANONICAL_RADIUS
    details["radius_gap_over_canonical"] = gap
    margins.append(gap)

    cpd = chord_pair_distance(locus.radius)
    details["chord_pair_distance"] = cpd
    margins.append(cpd - 1.0)

    dim_here = equilateral_dim_finite(locus.radius, 1e-12)
    dim_canon = equilateral_dim_finite(CANONICAL_RADIUS, 1e-12)
    details["equilateral_dim_at_locus"] = dim_here
    details["equilateral_dim_at_canonical"] = dim_canon
    margins.append(math.inf if (dim_here == 2 and dim_canon == 3) else -1.0)

    margin = min(margins)
    return TheoremCheck(
        name="max4_two_in_infinite_circle",
        passed=margin >= 0.0,
        margin=margin,
        runtime_s=time.perf_counter() - start,
        details=details,
    )


def _check_two_in_finite(samples: int) -> TheoremCheck:
    start = time.perf_counter()
    sweep = partner_sweep(samples)
    details = {
        "samples": sweep.samples,
        "min_partner_gap": sweep.min_gap,
        "argmin_t0": sweep.argmin_t0,
        "max_partner_residual": sweep.max_partner_residual,
        "failures": list(sweep.failures),
    }
    margins = [
        math.inf if sweep.ok else -1.0,
        sweep.min_gap - 1e-3,
        1e-9 - sweep.max_partner_residual,
    ]
    margin = min(margins)
    return TheoremCheck(
        name="max4_two_in_finite_circle",
        passed=margin >= 0.0,
        margin=margin,
        runtime_s=time.perf_counter() - start,
        details=details,
    )


def verify_theorems(
    samples: int = 2001,
    grid_n: int = 1_000_000,
    radius_offset: float = 0.0,
) -> VerificationReport:
    """Run the full certification: the three exclusion statements plus the
    headline claim that the equilateral dimension is exactly 4.

    ``radius_offset`` perturbs the canonical circle radius and exists as a
    negative control: any nonzero value must make the certification fail.
    """
    if samples < 101:
        raise ValueError("samples must be at least 101")
    radius = CANONICAL_RADIUS + radius_offset

    c1 = _check_three_in_finite(radius, grid_n)
    c2 = _check_two_in_infinite()
    c3 = _check_two_in_finite(samples)

    start = time.perf_counter()
    cert4 = certify(quadruple_points(radius), 1e-12)
    margins = [
        1e-12 - cert4.max_residual,
        c1.margin,
        c2.margin,
        c3.margin,
    ]
    margin = min(margins)
    c4 = TheoremCheck(
        name="equilateral_dimension_is_4",
        passed=margin >= 0.0,
        margin=margin,
        runtime_s=time.perf_counter() - start,
        details={
            "achievable_four_points": cert4.verdict,
            "quadruple_max_residual": cert4.max_residual,
            "exclusion_checks_passed": c1.passed and c2.passed and c3.passed,
        },
    )
    return VerificationReport(checks=(c1, c2, c3, c4))
