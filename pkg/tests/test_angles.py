import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from risbeam import (
    DesiredPattern,
    Direction,
    FrequencyGridSpec,
    OmegaPoint,
    RectSpot,
    RisConfig,
    angle_to_omega,
    build_grid,
    omega_to_angle,
    reference_pattern,
    validate_spacing,
)
from risbeam.angles import disk_mask, spacing_bound

PI = math.pi
HALF = RisConfig(2, 2, 0.5)


@pytest.mark.parametrize(
    "azi, ele, w1, w2",
    [(0, PI / 2, PI, 0), (PI / 2, PI / 6, 0, PI / 2), (PI / 4, PI / 2, PI / math.sqrt(2), PI / math.sqrt(2))],
)
def test_angle_to_omega(azi, ele, w1, w2):
    p = angle_to_omega(Direction(azi, ele), HALF)
    assert p.omega1 == pytest.approx(w1, abs=1e-12)
    assert p.omega2 == pytest.approx(w2, abs=1e-12)
    assert p.inside_disk


def test_omega_to_angle():
    d = omega_to_angle(OmegaPoint(PI, 0, True), HALF)
    assert (d.azimuth, d.elevation) == pytest.approx((0, PI / 2), abs=1e-12)
    d = omega_to_angle((0, PI / 2), HALF)
    assert (d.azimuth, d.elevation) == pytest.approx((PI / 2, PI / 6), abs=1e-12)
    assert omega_to_angle((-3, -3), HALF) is None


@given(st.floats(-PI, PI), st.floats(-PI, PI))
def test_round_trip_from_omega(w1, w2):
    d = omega_to_angle((w1, w2), HALF)
    if d is None:
        assert math.hypot(w1, w2) > PI
        return
    p = angle_to_omega(d, HALF)
    assert abs(p.omega1 - w1) < 1e-10 and abs(p.omega2 - w2) < 1e-10


def test_origin_maps_to_zero_azimuth():
    d = omega_to_angle((0.0, 0.0), HALF)
    assert d == Direction(0.0, 0.0)


# sin is flat at the rim: within ~1e-5 rad of pi/2 a 1e-16 error in sin(ele) already
# exceeds 1e-10 in ele, so the angle-side property is checked away from it and at the rim itself
@given(st.floats(0, 2 * PI, exclude_max=True), st.one_of(st.floats(1e-3, PI / 2 - 1e-5), st.just(PI / 2)))
def test_round_trip(azi, ele):
    d = omega_to_angle(angle_to_omega(Direction(azi, ele), HALF), HALF)
    assert d.elevation == pytest.approx(ele, abs=1e-10)
    gap = abs((d.azimuth - azi + PI) % (2 * PI) - PI)
    assert gap < 1e-10


@given(st.floats(0, 2 * PI, exclude_max=True), st.floats(1e-3, PI / 2 - 1e-5), st.floats(0.05, 0.5))
def test_round_trip_other_spacings(azi, ele, d_over_lambda):
    cfg = RisConfig(2, 2, d_over_lambda)
    d = omega_to_angle(angle_to_omega(Direction(azi, ele), cfg), cfg)
    assert d.elevation == pytest.approx(ele, abs=1e-9)


def test_build_grid_examples():
    w, _ = build_grid(FrequencyGridSpec(4, 2))
    np.testing.assert_allclose(w, [-PI, -PI / 2, 0, PI / 2], atol=1e-15)
    _, w2 = build_grid(FrequencyGridSpec(4, 2))
    np.testing.assert_allclose(w2, [-PI, 0], atol=1e-15)
    w, _ = build_grid(FrequencyGridSpec(128, 2))
    assert len(w) == 128 and w[0] == -PI
    np.testing.assert_allclose(np.diff(w), PI / 64, atol=1e-13)


@given(st.integers(1, 300), st.integers(1, 300))
def test_grid_in_half_open_square(m1, m2):
    w1, w2 = build_grid(FrequencyGridSpec(m1, m2))
    for w in (w1, w2):
        assert w.min() >= -PI and w.max() < PI


def test_disk_fraction_tends_to_quarter_pi():
    frac = disk_mask(FrequencyGridSpec(256, 256), HALF).mean()
    assert abs(frac - PI / 4) < 0.02


def test_validate_spacing_half_wavelength_always_ok():
    ok, _ = validate_spacing(reference_pattern(), RisConfig(32, 32, 0.5))
    assert ok


def test_validate_spacing_low_elevation_support():
    # all azimuths, elevations 0..pi/6
    low = DesiredPattern((RectSpot(PI, PI / 12, 2 * PI, PI / 6),))
    ok, bound = validate_spacing(low, RisConfig(2, 2, 0.9))
    # dense-sampling oracle of 0.5 * min(1/|cos a sin e|, 1/|sin a sin e|) over the support
    a = np.linspace(0, 2 * PI, 4001)
    oracle = spacing_bound(a, PI / 6).min()
    assert ok
    assert bound == pytest.approx(oracle, rel=1e-6)
    assert bound == pytest.approx(1.0, rel=1e-6)


def test_validate_spacing_rejects_grazing_support():
    spot = DesiredPattern((RectSpot(0.05, PI / 2 - 0.05, 0.2, 0.1),))
    ok, bound = validate_spacing(spot, RisConfig(2, 2, 0.6))
    assert not ok
    assert bound == pytest.approx(0.5, abs=1e-3)


def test_validate_spacing_empty_support():
    ok, bound = validate_spacing(DesiredPattern(()), RisConfig(2, 2, 3.0))
    assert ok and bound == math.inf
