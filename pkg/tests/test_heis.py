"""Group law, gauge, distance, and similarity action."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koranyi.heis import (
    ORIGIN,
    HeisPoint,
    Similarity,
    compose,
    dist4_zt,
    distance,
    gauge,
    gauge4,
    inverse,
)

coord = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)


def points(draw_coord=coord):
    return st.builds(lambda x, y, t: HeisPoint(complex(x, y), t),
                     draw_coord, draw_coord, draw_coord)


# --- group law -------------------------------------------------------------

def test_identity_element():
    p = HeisPoint(0.3 - 1.2j, 0.7)
    assert compose(ORIGIN, p) == p
    assert compose(p, ORIGIN) == p


def test_group_law_hand_values():
    # (i,0)*(1,0): vertical part 2 Im(i * conj(1)) = 2
    assert compose(HeisPoint(1j, 0), HeisPoint(1, 0)) == HeisPoint(1 + 1j, 2.0)
    # reversed order flips the sign: non-commutative
    assert compose(HeisPoint(1, 0), HeisPoint(1j, 0)) == HeisPoint(1 + 1j, -2.0)


def test_inverse_hand_values():
    assert inverse(ORIGIN) == ORIGIN
    p = HeisPoint(1 + 1j, 3.0)
    assert inverse(p) == HeisPoint(-1 - 1j, -3.0)
    assert compose(inverse(p), p) == ORIGIN
    r0 = 12.0 ** -0.25
    assert inverse(HeisPoint(r0, 0)) == HeisPoint(-r0, 0)


@given(points(), points(), points())
@settings(max_examples=200)
def test_associativity(p, q, r):
    a = compose(compose(p, q), r)
    b = compose(p, compose(q, r))
    assert abs(a.z - b.z) < 1e-12
    assert abs(a.t - b.t) < 1e-12


@given(points())
@settings(max_examples=200)
def test_two_sided_inverse(p):
    for c in (compose(inverse(p), p), compose(p, inverse(p))):
        assert abs(c.z) < 1e-12 and abs(c.t) < 1e-12


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        HeisPoint(complex("nan"), 0.0)
    with pytest.raises(ValueError):
        HeisPoint(0j, math.inf)


# --- gauge and distance ----------------------------------------------------

def test_gauge_hand_values():
    assert gauge(ORIGIN) == 0.0
    assert gauge(HeisPoint(1, 0)) == 1.0
    assert gauge(HeisPoint(0j, math.sqrt(11.0 / 12.0))) == pytest.approx(
        (11.0 / 12.0) ** 0.25, abs=1e-15
    )


def test_gauge_is_distance_from_origin():
    # same evaluation path, so bitwise agreement
    for p in (HeisPoint(0.3 + 0.4j, -1.1), HeisPoint(-2j, 0.01), HeisPoint(1.5, 2.0)):
        assert gauge(p) == distance(ORIGIN, p)
        assert gauge4(p) == distance(ORIGIN, p) ** 4 or gauge(p) == distance(ORIGIN, p)


def test_distance_hand_values():
    assert distance(HeisPoint(0j, -0.5), HeisPoint(0j, 0.5)) == 1.0
    r0 = 12.0 ** -0.25
    apex = math.sqrt(11.0 / 12.0)
    assert distance(HeisPoint(0j, apex), HeisPoint(r0, 0)) == pytest.approx(1.0, abs=1e-14)
    w = r0 * complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
    assert distance(HeisPoint(r0, 0), HeisPoint(w, 0)) == pytest.approx(1.0, abs=1e-14)


def test_apex_pair_distance_not_one():
    # d((0, h), (0, -h)) = (2h)^(1/2) = (11/3)^(1/4): not 1, by a wide margin
    apex = math.sqrt(11.0 / 12.0)
    d = distance(HeisPoint(0j, apex), HeisPoint(0j, -apex))
    assert d == pytest.approx((11.0 / 3.0) ** 0.25, abs=1e-15)
    assert abs(d - 1.0) > 0.38


def _random_points(rng, n):
    z = rng.uniform(-2, 2, n) + 1j * rng.uniform(-2, 2, n)
    t = rng.uniform(-2, 2, n)
    return z, t


def test_metric_axioms_bulk():
    rng = np.random.default_rng(20240817)
    n = 100_000
    z1, t1 = _random_points(rng, n)
    z2, t2 = _random_points(rng, n)
    z3, t3 = _random_points(rng, n)
    d12 = dist4_zt(z1, t1, z2, t2) ** 0.25
    d21 = dist4_zt(z2, t2, z1, t1) ** 0.25
    assert np.array_equal(d12, d21)  # symmetry is exact
    assert np.all(dist4_zt(z1, t1, z1, t1) == 0.0)
    assert np.all(d12[np.abs(z1 - z2) + np.abs(t1 - t2) > 1e-9] > 0.0)
    d23 = dist4_zt(z2, t2, z3, t3) ** 0.25
    d13 = dist4_zt(z1, t1, z3, t3) ** 0.25
    assert np.all(d13 <= d12 + d23 + 1e-12)


def _apply_arrays(g: Similarity, z, t):
    # mirrors the documented order: conjugation, rotation, dilation, translation
    if g.conjugate:
        z, t = np.conj(z), -t
    z = z * np.exp(1j * g.rotation)
    r = g.dilation
    z, t = r * z, r * r * t
    w, s = g.translation.z, g.translation.t
    return w + z, s + t + 2.0 * np.imag(w * np.conj(z))


def test_isometry_invariance_bulk():
    rng = np.random.default_rng(7)
    n = 5000
    for k in range(20):
        g = Similarity(
            translation=HeisPoint(complex(*rng.uniform(-2, 2, 2)), rng.uniform(-2, 2)),
            rotation=rng.uniform(-math.pi, math.pi),
            conjugate=bool(k % 2),
            dilation=1.0,
        )
        z1, t1 = _random_points(rng, n)
        z2, t2 = _random_points(rng, n)
        gz1, gt1 = _apply_arrays(g, z1, t1)
        gz2, gt2 = _apply_arrays(g, z2, t2)
        before = dist4_zt(z1, t1, z2, t2) ** 0.25
        after = dist4_zt(gz1, gt1, gz2, gt2) ** 0.25
        assert np.max(np.abs(after - before)) < 1e-12


def test_dilation_scaling_bulk():
    rng = np.random.default_rng(8)
    n = 5000
    for r in (0.1, 0.5, 1.0, 2.0, 9.5):
        z1, t1 = _random_points(rng, n)
        z2, t2 = _random_points(rng, n)
        before = dist4_zt(z1, t1, z2, t2) ** 0.25
        after = dist4_zt(r * z1, r * r * t1, r * z2, r * r * t2) ** 0.25
        assert np.max(np.abs(after - r * before)) < 1e-12 * max(1.0, r)


# --- similarity action -----------------------------------------------------

def test_apply_hand_values():
    p = HeisPoint(1 + 1j, 2.0)
    assert Similarity.identity().apply(p) == p
    assert Similarity.conjugation().apply(HeisPoint(1j, 5.0)) == HeisPoint(-1j, -5.0)
    assert Similarity.dilation_by(2.0).apply(HeisPoint(1, 1)) == HeisPoint(2, 4.0)


def test_apply_matches_documented_order():
    g = Similarity(
        translation=HeisPoint(0.3 - 0.8j, 1.1),
        rotation=0.9,
        conjugate=True,
        dilation=1.7,
    )
    p = HeisPoint(-0.6 + 0.25j, -0.4)
    staged = Similarity.conjugation().apply(p)
    staged = Similarity.rotation_by(0.9).apply(staged)
    staged = Similarity.dilation_by(1.7).apply(staged)
    staged = compose(g.translation, staged)
    got = g.apply(p)
    assert abs(got.z - staged.z) < 1e-15 and abs(got.t - staged.t) < 1e-15


def test_scale_factor_property():
    rng = np.random.default_rng(9)
    g = Similarity(
        translation=HeisPoint(0.5 + 0.5j, -0.3),
        rotation=2.1,
        conjugate=True,
        dilation=3.25,
    )
    assert g.scale_factor == 3.25
    assert Similarity.identity().scale_factor == 1.0
    assert Similarity.translation_by(HeisPoint(1j, 2)).scale_factor == 1.0
    for _ in range(100):
        p = HeisPoint(complex(*rng.uniform(-2, 2, 2)), rng.uniform(-2, 2))
        q = HeisPoint(complex(*rng.uniform(-2, 2, 2)), rng.uniform(-2, 2))
        lhs = distance(g.apply(p), g.apply(q))
        assert abs(lhs - g.scale_factor * distance(p, q)) < 1e-12


def test_similarity_rejects_bad_dilation():
    with pytest.raises(ValueError):
        Similarity(dilation=0.0)
    with pytest.raises(ValueError):
        Similarity(dilation=-1.0)
