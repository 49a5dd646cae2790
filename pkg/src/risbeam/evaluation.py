"""Forward beam patterns and error metrics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .angles import FrequencyGridSpec, grid_mesh, omegas_to_angles
from .errors import SpecError
from .geometry import TWO_PI, Direction, RisConfig, incident_phase_map
from .pattern import DesiredPattern, FrequencyGrid, sample_to_grid

_CHUNK = 8192


@dataclass(frozen=True, eq=False)
class PatternSamples:
    azimuth: np.ndarray
    elevation: np.ndarray
    response: np.ndarray

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.response)


def _as_values(v) -> np.ndarray:
    return np.asarray(getattr(v, "values", v), dtype=complex)


def beam_pattern_arrays(v, incidents: Sequence[Direction], cfg: RisConfig, azimuth, elevation) -> np.ndarray:
    """g at each (azimuth, elevation) pair, summing s * v * exp(-j 2pi u . r) over units."""
    vals = _as_values(v)
    if vals.shape != cfg.shape:
        raise SpecError(f"coefficient shape {vals.shape} != {cfg.shape}")
    azimuth, elevation = np.broadcast_arrays(np.asarray(azimuth, float), np.asarray(elevation, float))
    shape = azimuth.shape
    azimuth, elevation = azimuth.ravel(), elevation.ravel()
    weighted = incident_phase_map(incidents, cfg) * vals
    d = cfg.spacing_over_lambda
    xs = np.arange(cfg.n_x) * d
    ys = np.arange(cfg.n_y) * d
    out = np.empty(azimuth.size, dtype=complex)
    for start in range(0, azimuth.size, _CHUNK):
        sl = slice(start, start + _CHUNK)
        s = np.sin(elevation[sl])
        ux = np.cos(azimuth[sl]) * s
        uy = np.sin(azimuth[sl]) * s
        ex = np.exp(-1j * TWO_PI * ux[:, None] * xs[None, :])
        ey = np.exp(-1j * TWO_PI * uy[:, None] * ys[None, :])
        out[sl] = np.sum((ex @ weighted) * ey, axis=1)
    return out.reshape(shape)


def beam_pattern(v, incidents: Sequence[Direction], cfg: RisConfig, directions: Sequence[Direction]) -> PatternSamples:
    azi = np.array([d.azimuth for d in directions], dtype=float)
    ele = np.array([d.elevation for d in directions], dtype=float)
    return PatternSamples(azi, ele, beam_pattern_arrays(v, incidents, cfg, azi, ele))


def design_grid_magnitude(v, incidents: Sequence[Direction], cfg: RisConfig, spec: FrequencyGridSpec) -> np.ndarray:
    """|g| at the directions mapped from each design-grid point; 0 outside the visible disk."""
    w1, w2 = grid_mesh(spec)
    azi, ele, inside = omegas_to_angles(w1, w2, cfg)
    out = np.zeros(spec.shape)
    out[inside] = np.abs(beam_pattern_arrays(v, incidents, cfg, azi[inside], ele[inside]))
    return out


def tse(designed, desired) -> float:
    """Sum of squared differences between designed and desired magnitude samples."""
    a = np.asarray(getattr(designed, "values", designed), dtype=float)
    b = np.asarray(getattr(desired, "values", desired), dtype=float)
    if a.shape != b.shape:
        raise SpecError(f"grid mismatch: {a.shape} vs {b.shape}")
    return float(np.sum((a - b) ** 2))


def normalized_tse(designed, desired) -> float:
    b = np.asarray(getattr(desired, "values", desired), dtype=float)
    energy = float(np.sum(b**2))
    if energy == 0.0:
        raise SpecError("normalized TSE undefined for an all-zero desired pattern")
    return tse(designed, b) / energy


def design_grid_metrics(v, incidents, cfg: RisConfig, grid: FrequencyGrid) -> tuple[float, float]:
    """(TSE, normalized TSE) on ``grid``; normalized TSE is NaN when the grid is all zero."""
    H = design_grid_magnitude(v, incidents, cfg, grid.spec)
    err = tse(H, grid)
    energy = float(np.sum(grid.values**2))
    return err, (err / energy if energy > 0 else math.nan)


def evaluate_metrics(v, pattern: DesiredPattern, incidents, cfg: RisConfig, spec: FrequencyGridSpec) -> tuple[float, float]:
    """Metrics on an arbitrary (e.g. finer) transform-domain grid."""
    return design_grid_metrics(v, incidents, cfg, sample_to_grid(pattern, spec, cfg))


def cross_section(v, incidents, cfg: RisConfig, elevation: float, n_azimuth_samples: int = 1024):
    """|g| at ``n`` uniformly spaced azimuths in [0, 2*pi) at a fixed elevation."""
    if not 0.0 <= elevation <= math.pi / 2:
        raise SpecError("elevation must lie in [0, pi/2]", field="elevation")
    azi = TWO_PI * np.arange(n_azimuth_samples) / n_azimuth_samples
    mag = np.abs(beam_pattern_arrays(v, incidents, cfg, azi, np.full_like(azi, elevation)))
    return azi, mag


def angle_grid_pattern(v, incidents, cfg: RisConfig, n_azimuth: int = 361, n_elevation: int = 91) -> PatternSamples:
    """|g| over a regular azimuth x elevation grid, for heatmaps."""
    azi = np.linspace(0.0, TWO_PI, n_azimuth)
    ele = np.linspace(0.0, math.pi / 2, n_elevation)
    A, E = np.meshgrid(azi, ele, indexing="ij")
    return PatternSamples(A, E, beam_pattern_arrays(v, incidents, cfg, A, E))


def peak_near(azimuth: np.ndarray, magnitude: np.ndarray, center: float, half_width: float) -> float:
    """Largest magnitude within ``half_width`` (wrapped) of ``center``."""
    delta = np.abs(np.mod(azimuth - center + math.pi, TWO_PI) - math.pi)
    sel = delta <= half_width
    if not sel.any():
        raise ValueError("no samples inside the azimuth window")
    return float(magnitude[sel].max())
