"""Parametrization, involutions, and distance profiles of the unit-distance
curve."""

import itertools
import math

import numpy as np
import pytest

from koranyi import curve
from koranyi.curve import (
    Branch,
    CurvePoint,
    T_MAX,
    THETA_MAX,
    antipodal,
    antipodal_dist4,
    antipodal_maximizers,
    antipodal_minimizers,
    curve_residual,
    horizontality_defect,
    locus_cos,
    locus_cos_deriv,
    phi,
    solve_vertical_unit,
    symmetric,
    symmetric_dist4,
    vertical,
    vertical_dist4,
)
from koranyi.heis import HeisPoint, dist4, distance

SQ6 = math.sqrt(6.0)
A14 = math.acos(0.25)

ANCHOR_O = HeisPoint(0j, 0.0)
ANCHOR_E = HeisPoint(1.0, 0.0)


def interior_grid(n, margin=1e-7):
    return np.linspace(-THETA_MAX + margin, THETA_MAX - margin, n)


# --- domain constants --------------------------------------------------------

def test_domain_constants():
    assert THETA_MAX == pytest.approx(math.acos(2.5 - SQ6), abs=0)
    # independent closed form for the half-angle bound
    assert T_MAX == pytest.approx(math.sqrt(3.0 + 8.0 * SQ6) / 5.0, abs=1e-15)
    # the quartic weight -25 t^4 + 6 t^2 + 15 vanishes at T_MAX
    assert -25.0 * T_MAX ** 4 + 6.0 * T_MAX ** 2 + 15.0 == pytest.approx(0.0, abs=1e-12)


def test_domain_rejection():
    for bad in (THETA_MAX + 1e-6, -THETA_MAX - 1e-6, math.nan):
        with pytest.raises(ValueError):
            locus_cos(bad)
        with pytest.raises(ValueError):
            CurvePoint(bad)
    with pytest.raises(ValueError):
        locus_cos_deriv(THETA_MAX)  # derivative only on the interior


# --- locus_cos (the function called f in the profile) ------------------------

def test_locus_cos_extrema():
    assert locus_cos(0.0) == pytest.approx(7.0 / 8.0, abs=1e-15)
    for s in (1, -1):
        assert locus_cos(s * A14) == pytest.approx(math.sqrt(5.0 / 8.0), abs=1e-14)
        assert locus_cos(s * THETA_MAX) == pytest.approx(1.0, abs=1e-12)
    vals = [locus_cos(float(t)) for t in interior_grid(4001)]
    assert min(vals) >= math.sqrt(5.0 / 8.0) - 1e-12
    assert max(vals) <= 1.0 + 1e-12


def test_locus_cos_monotonicity():
    # decreasing on [-THETA_MAX, -A14] and [0, A14]; increasing on the others
    for lo, hi, direction in (
        (-THETA_MAX, -A14, -1),
        (-A14, 0.0, +1),
        (0.0, A14, -1),
        (A14, THETA_MAX, +1),
    ):
        xs = np.linspace(lo + 1e-9, hi - 1e-9, 1000)
        vals = np.array([locus_cos(float(x)) for x in xs])
        assert np.all(direction * np.diff(vals) > 0.0)


def test_locus_cos_deriv_matches_finite_difference():
    h = 1e-6
    for theta in np.linspace(-1.4, 1.4, 57):
        fd = (locus_cos(theta + h) - locus_cos(theta - h)) / (2 * h)
        assert locus_cos_deriv(float(theta)) == pytest.approx(fd, abs=1e-6)


def test_locus_cos_deriv_zeros_and_signs():
    assert locus_cos_deriv(0.0) == 0.0
    assert abs(locus_cos_deriv(A14)) < 1e-15
    assert abs(locus_cos_deriv(-A14)) < 1e-15
    assert locus_cos_deriv(0.5) < 0.0
    assert locus_cos_deriv(-0.5) > 0.0


# --- azimuth branches ---------------------------------------------------------

def test_phi_hand_values():
    assert phi(0.0, Branch.PLUS) == pytest.approx(math.acos(7.0 / 8.0), abs=1e-15)
    assert phi(0.0, Branch.MINUS) == pytest.approx(-math.acos(7.0 / 8.0), abs=1e-15)
    expected = -A14 / 2.0 + math.acos(math.sqrt(5.0 / 8.0))
    assert phi(A14, Branch.PLUS) == pytest.approx(expected, abs=1e-14)
    assert expected == pytest.approx(0.0, abs=1e-14)  # arccos(sqrt(5/8)) = A14/2


def test_branches_meet_at_junction():
    for s in (1, -1):
        pp = phi(s * THETA_MAX, Branch.PLUS)
        pm = phi(s * THETA_MAX, Branch.MINUS)
        assert pp == pytest.approx(pm, abs=1e-7)  # arccos conditioning at f=1
        assert pp == pytest.approx(-s * THETA_MAX / 2.0, abs=1e-7)


def test_curve_points_on_curve_and_unit_distant():
    for theta in interior_grid(2000):
        for branch in Branch:
            p = CurvePoint(float(theta), branch)
            assert abs(curve_residual(p.theta, p.phi)) < 1e-12
            hp = p.point
            assert abs(dist4(hp, ANCHOR_O) - 1.0) < 1e-10
            assert abs(dist4(hp, ANCHOR_E) - 1.0) < 1e-10


def test_curve_residual_hand_values():
    assert curve_residual(0.0, math.acos(7.0 / 8.0)) == pytest.approx(0.0, abs=1e-14)
    assert curve_residual(0.0, 0.0) == pytest.approx(-1.0, abs=1e-15)


# --- involutions ---------------------------------------------------------------

def test_involution_coordinate_maps():
    for theta in interior_grid(251):
        p = CurvePoint(float(theta), Branch.PLUS)
        a, s, v = antipodal(p), symmetric(p), vertical(p)
        # antipodal: (-theta, -phi), branch swaps
        assert a.theta == -p.theta and a.branch is Branch.MINUS
        assert a.phi == pytest.approx(-p.phi, abs=1e-13)
        # symmetric: (-theta, phi + theta), branch kept
        assert s.theta == -p.theta and s.branch is Branch.PLUS
        assert s.phi == pytest.approx(p.phi + p.theta, abs=1e-13)
        # vertical: (theta, -phi - theta), branch swaps
        assert v.theta == p.theta and v.branch is Branch.MINUS
        assert v.phi == pytest.approx(-p.phi - p.theta, abs=1e-13)


def test_involution_algebra():
    thetas = interior_grid(500)
    for theta in thetas:
        for branch in Branch:
            p = CurvePoint(float(theta), branch)
            assert antipodal(antipodal(p)) == p
            assert symmetric(symmetric(p)) == p
            assert vertical(vertical(p)) == p
            assert antipodal(symmetric(p)) == vertical(p)
            assert symmetric(antipodal(p)) == vertical(p)


def test_vertical_fixes_branch_junctions():
    p = CurvePoint(THETA_MAX, Branch.PLUS)
    v = vertical(p)
    assert v.theta == p.theta
    assert v.phi == pytest.approx(p.phi, abs=1e-7)  # same point, other label


# --- distance profiles vs direct metric ----------------------------------------

def test_profiles_match_direct_distances():
    for theta in interior_grid(10_000):
        p = CurvePoint(float(theta), Branch.PLUS)
        hp = p.point
        assert abs(antipodal_dist4(p.theta) - dist4(hp, antipodal(p).point)) < 1e-10
        assert abs(symmetric_dist4(p.theta) - dist4(hp, symmetric(p).point)) < 1e-10
        assert abs(vertical_dist4(p.theta) - dist4(hp, vertical(p).point)) < 1e-10


def test_profile_extrema():
    assert antipodal_dist4(0.0) == pytest.approx(15.0 / 4.0, abs=1e-12)
    hmin = (2.0 * SQ6 - 3.0) ** 2
    assert antipodal_dist4(THETA_MAX) == pytest.approx(hmin, abs=1e-10)
    thr = math.acos((SQ6 - 1.0) / 2.0)
    assert antipodal_dist4(thr) == pytest.approx(hmin, abs=1e-12)
    assert symmetric_dist4(math.pi / 3.0) == pytest.approx(1.0, abs=1e-12)
    assert symmetric_dist4(THETA_MAX) == pytest.approx(
        4.0 * (SQ6 - 1.5) ** 2, abs=1e-10
    )
    assert vertical_dist4(0.0) == pytest.approx(15.0 / 4.0, abs=1e-12)


def test_antipodal_distance_bounds():
    lo = (2.0 * SQ6 - 3.0) ** 0.5
    hi = (15.0 / 4.0) ** 0.25
    for theta in interior_grid(10_000, margin=0.0):
        d = antipodal_dist4(float(theta)) ** 0.25
        assert lo - 1e-9 <= d <= hi + 1e-9
    # endpoints of the band, to full precision
    assert lo == pytest.approx(1.378035, abs=1e-6)
    assert hi == pytest.approx(1.391579, abs=1e-6)


# --- horizontality ---------------------------------------------------------------

def test_horizontality_defect_zeros():
    for theta in (0.0, A14, -A14):
        for branch in Branch:
            assert abs(horizontality_defect(theta, branch)) < 1e-10


def test_horizontality_defect_matches_finite_difference():
    h = 1e-7
    for theta in np.linspace(-1.3, 1.3, 41):
        for branch in Branch:
            dphi = (phi(theta + h, branch) - phi(theta - h, branch)) / (2 * h)
            fd = 1.0 + 2.0 * dphi
            assert horizontality_defect(float(theta), branch) == pytest.approx(
                fd, abs=1e-5
            )


def test_horizontality_defect_sign_per_branch():
    theta = 0.8
    d_plus = horizontality_defect(theta, Branch.PLUS)
    d_minus = horizontality_defect(theta, Branch.MINUS)
    assert d_plus == -d_minus
    assert d_plus != 0.0


def test_horizontality_defect_diverges_at_junction():
    with pytest.raises(ValueError):
        horizontality_defect(THETA_MAX, Branch.PLUS)
    # grows without bound on the approach
    vals = [abs(horizontality_defect(THETA_MAX - eps, Branch.PLUS))
            for eps in (1e-2, 1e-4, 1e-6)]
    assert vals[0] < vals[1] < vals[2]
    assert vals[2] > 100.0


# --- tangency and extremal points -------------------------------------------------

def test_antipodal_maximizers_coordinates():
    q = antipodal_maximizers()
    a78 = math.acos(7.0 / 8.0)
    expected = [
        (0.0, a78),
        (A14, 0.0),
        (A14, -A14),
        (0.0, -a78),
        (-A14, 0.0),
        (-A14, A14),
    ]
    assert len(q) == 6
    for point, (th, ph) in zip(q, expected):
        assert point.theta == pytest.approx(th, abs=1e-15)
        assert point.phi == pytest.approx(ph, abs=1e-13)
        assert abs(curve_residual(point.theta, point.phi)) < 1e-12
        assert antipodal_dist4(point.theta) == pytest.approx(15.0 / 4.0, abs=1e-12)


def test_antipodal_minimizers_coordinates():
    r = antipodal_minimizers()
    thr = math.acos((SQ6 - 1.0) / 2.0)
    aux = math.acos(math.sqrt(5.0 / 8.0) * (3.0 * SQ6 - 2.0) / 5.0)
    expected = [
        (THETA_MAX, -THETA_MAX / 2.0),
        (thr, -thr / 2.0 + aux),
        (thr, -thr / 2.0 - aux),
        (-THETA_MAX, THETA_MAX / 2.0),
        (-thr, thr / 2.0 - aux),
        (-thr, thr / 2.0 + aux),
    ]
    hmin = (2.0 * SQ6 - 3.0) ** 2
    assert len(r) == 6
    for point, (th, ph) in zip(r, expected):
        assert point.theta == pytest.approx(th, abs=1e-15)
        assert point.phi == pytest.approx(ph, abs=1e-7)
        assert abs(curve_residual(point.theta, point.phi)) < 1e-12
        assert antipodal_dist4(point.theta) == pytest.approx(hmin, abs=1e-10)


def test_tangency_table():
    q = antipodal_maximizers()
    groups = {
        3.0 / 8.0: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        9.0 / 4.0: [(0, 2), (1, 3), (2, 4), (3, 5), (4, 0), (5, 1)],
        15.0 / 4.0: [(0, 3), (1, 4), (2, 5)],
    }
    seen = set()
    for value, pairs in groups.items():
        for i, j in pairs:
            assert dist4(q[i].point, q[j].point) == pytest.approx(value, abs=1e-10)
            seen.add(frozenset((i, j)))
    assert len(seen) == 15  # the full distance table is covered


# --- symmetric and vertical unit pairs ----------------------------------------------

def test_symmetric_unit_pairs():
    a = math.acos(SQ6 / 3.0)
    listed = [
        ((math.pi / 3, -math.pi / 6 + a), (-math.pi / 3, math.pi / 6 + a)),
        ((math.pi / 3, -math.pi / 6 - a), (-math.pi / 3, math.pi / 6 - a)),
    ]
    assert phi(math.pi / 3, Branch.PLUS) == pytest.approx(-math.pi / 6 + a, abs=1e-13)
    assert phi(math.pi / 3, Branch.MINUS) == pytest.approx(-math.pi / 6 - a, abs=1e-13)
    for (th1, ph1), (th2, ph2) in listed:
        assert abs(curve_residual(th1, ph1)) < 1e-12
        assert abs(curve_residual(th2, ph2)) < 1e-12
        p1 = CurvePoint(th1, Branch.PLUS if ph1 > -th1 / 2 else Branch.MINUS)
        p2 = symmetric(p1)
        assert p2.theta == pytest.approx(th2, abs=1e-15)
        assert p2.phi == pytest.approx(ph2, abs=1e-13)
        assert distance(p1.point, p2.point) == pytest.approx(1.0, abs=1e-10)


def test_vertical_unit_solution():
    sol = solve_vertical_unit()
    assert 0.0 < sol.theta < THETA_MAX
    assert sol.cos_theta == pytest.approx(0.42, abs=0.005)
    assert abs(vertical_dist4(sol.theta) - 1.0) < 1e-12
    # the cubic obtained from vertical_dist4 = 1 vanishes at the solution;
    # the variant with quadratic coefficient -2 does not (it is near 3.2)
    assert abs(sol.derived_cubic_residual) < 1e-10
    assert sol.printed_cubic_residual == pytest.approx(3.2119, abs=0.01)
    p = CurvePoint(sol.theta, Branch.PLUS)
    assert distance(p.point, vertical(p).point) == pytest.approx(1.0, abs=1e-10)
    # same at the mirrored latitude
    m = CurvePoint(-sol.theta, Branch.PLUS)
    assert distance(m.point, vertical(m).point) == pytest.approx(1.0, abs=1e-10)
