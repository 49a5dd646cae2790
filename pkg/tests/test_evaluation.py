import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from risbeam import (
    Direction,
    FrequencyGridSpec,
    RisConfig,
    SpecError,
    beam_pattern,
    cross_section,
    incident_unit_vector,
    normalized_tse,
    observation_unit_vector,
    tse,
    unit_position,
)
from risbeam.angles import grid_mesh, omegas_to_angles
from risbeam.evaluation import (
    angle_grid_pattern,
    beam_pattern_arrays,
    design_grid_magnitude,
    evaluate_metrics,
    peak_near,
)
from risbeam.geometry import incident_phase_map
from risbeam.synthesis import filter_response

PI = math.pi


def eq3_oracle(v, incidents, cfg, d):
    u = observation_unit_vector(d)
    total = 0j
    for ix in range(cfg.n_x):
        for iy in range(cfg.n_y):
            r = unit_position(ix, iy, cfg)
            s = sum(cmath.exp(2j * PI * float(incident_unit_vector(i) @ r)) for i in incidents)
            total += s * v[ix, iy] * cmath.exp(-2j * PI * float(u @ r))
    return total


def random_v(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def test_zero_coefficients():
    cfg = RisConfig(4, 4)
    out = beam_pattern(np.zeros((4, 4)), [Direction(0, 0)], cfg, [Direction(1, 0.3), Direction(5, 1.5)])
    assert not out.response.any()


def test_single_active_unit_is_isotropic(rng):
    cfg = RisConfig(2, 2)
    v = np.zeros((2, 2), complex)
    v[0, 0] = 1
    dirs = [Direction(rng.uniform(0, 2 * PI), rng.uniform(0, PI / 2)) for _ in range(20)]
    np.testing.assert_allclose(beam_pattern(v, [Direction(0, 0)], cfg, dirs).response, 1.0, atol=1e-15)


def test_matches_eq3_loop(rng):
    cfg = RisConfig(4, 6, 0.43)
    v = random_v(rng, cfg.shape)
    incs = [Direction(0.3, 0.4), Direction(2.0, 1.1)]
    dirs = [Direction(rng.uniform(0, 2 * PI), rng.uniform(0, PI / 2)) for _ in range(25)]
    got = beam_pattern(v, incs, cfg, dirs)
    for d, g in zip(dirs, got.response):
        assert abs(g - eq3_oracle(v, incs, cfg, d)) < 1e-10
    np.testing.assert_array_equal(got.magnitude, np.abs(got.response))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_geometry_equals_filter_form(seed):
    rng = np.random.default_rng(seed)
    cfg = RisConfig(8, 4)
    v = random_v(rng, cfg.shape)
    incs = [Direction(rng.uniform(0, 2 * PI), rng.uniform(0, PI / 2))]
    a, e = rng.uniform(0, 2 * PI, 30), rng.uniform(0, PI / 2, 30)
    g = beam_pattern_arrays(v, incs, cfg, a, e)
    h = incident_phase_map(incs, cfg) * v
    w1 = PI * np.cos(a) * np.sin(e)
    w2 = PI * np.sin(a) * np.sin(e)
    nx, ny = np.arange(8), np.arange(4)
    filt = np.einsum("mn,dm,dn->d", h, np.exp(-1j * np.outer(w1, nx)), np.exp(-1j * np.outer(w2, ny)))
    assert np.abs(g - filt).max() < 1e-10


def test_designed_pattern_equals_filter_response(reference_setup):
    inp, grid, v, _ = reference_setup
    h = incident_phase_map(inp.incidents, inp.ris) * v.values
    H = np.abs(filter_response(h, inp.grid))
    mask = grid_mesh(inp.grid)
    _, _, inside = omegas_to_angles(*mask, inp.ris)
    got = design_grid_magnitude(v, inp.incidents, inp.ris, inp.grid)
    assert np.abs(got[inside] - H[inside]).max() < 1e-10
    assert not got[~inside].any()


def test_tse_examples():
    a = np.array([[0.0, 1.0], [0.5, 0.25]])
    assert tse(a, a) == 0.0
    b = a.copy()
    b[1, 0] += 1.0
    assert tse(b, a) == 1.0
    with pytest.raises(SpecError):
        tse(a, np.zeros((3, 2)))


def test_normalized_tse_examples(rng):
    desired = rng.uniform(0, 1, (6, 6))
    assert normalized_tse(desired, desired) == 0.0
    assert normalized_tse(np.zeros((6, 6)), desired) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(SpecError):
        normalized_tse(desired, np.zeros((6, 6)))


@given(st.integers(0, 2**32 - 1), st.floats(1e-3, 1e3))
def test_metric_symmetry_and_scale(seed, c):
    rng = np.random.default_rng(seed)
    H, Hh = rng.uniform(0, 1, (5, 7)), rng.uniform(0.1, 1, (5, 7))
    assert tse(H, Hh) == tse(Hh, H)
    assert normalized_tse(c * H, c * Hh) == pytest.approx(normalized_tse(H, Hh), rel=1e-12)


def test_cross_section_zero():
    azi, mag = cross_section(np.zeros((4, 4)), [Direction(0, 0)], RisConfig(4, 4), PI / 4, 64)
    assert len(azi) == 64 and not mag.any()
    assert azi[0] == 0.0 and azi[-1] < 2 * PI


def test_cross_section_levels(reference_setup):
    inp, _, v, _ = reference_setup
    azi, mag = cross_section(v, inp.incidents, inp.ris, PI / 4)
    assert len(azi) == 1024
    ratio = peak_near(azi, mag, PI / 2, PI / 6) / peak_near(azi, mag, 3 * PI / 2, PI / 6)
    assert 1.5 <= ratio <= 2.5
    between = abs(beam_pattern_arrays(v, inp.incidents, inp.ris, PI, PI / 4))
    assert between < 0.2 * peak_near(azi, mag, PI / 2, PI / 6)


def test_cross_section_rejects_bad_elevation():
    with pytest.raises(SpecError):
        cross_section(np.zeros((2, 2)), [Direction(0, 0)], RisConfig(2, 2), 2.0)


def test_finer_evaluation_grid(reference_setup):
    inp, _, v, rep = reference_setup
    err, ntse = evaluate_metrics(v, inp.pattern, inp.incidents, inp.ris, FrequencyGridSpec(256, 256))
    assert err > 0 and 0 < ntse < 1
    same = evaluate_metrics(v, inp.pattern, inp.incidents, inp.ris, inp.grid)
    assert same == pytest.approx((rep.tse, rep.normalized_tse), rel=1e-12)


def test_angle_grid_pattern_shape(reference_setup):
    inp, _, v, _ = reference_setup
    pat = angle_grid_pattern(v, inp.incidents, inp.ris, 37, 10)
    assert pat.magnitude.shape == (37, 10)
    assert pat.magnitude.max() > 0.8


def test_dimension_mismatch():
    with pytest.raises(SpecError):
        beam_pattern(np.zeros((2, 4)), [Direction(0, 0)], RisConfig(4, 4), [Direction(0, 0)])
