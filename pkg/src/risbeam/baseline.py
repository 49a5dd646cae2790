"""Surrogate of the direct-designation comparison method.

The desired magnitude is used as the transform-domain response with zero
phase: no linear-phase modulation and no Hermitian structure. Its inverse DFT
is circularly shifted so the highest-energy ``N_x x N_y`` block starts at index
(0, 0), then hard-truncated.
"""
from __future__ import annotations

import time
from typing import Sequence

import numpy as np

from .errors import SpecError
from .evaluation import design_grid_metrics
from .geometry import Direction, RisConfig
from .pattern import FrequencyGrid
from .synthesis import DEFAULT_EPSILON, CoefficientMatrix, DesignReport, extract_reflection, ifft2

SURROGATE_LABEL = "surrogate baseline"


def _best_circular_offset(energy_1d: np.ndarray, width: int) -> int:
    """Start index of the circular window of ``width`` samples with the most energy.

    Ties resolve to the smallest start index.
    """
    m = energy_1d.size
    wrapped = np.concatenate([energy_1d, energy_1d[: width - 1]])
    csum = np.concatenate([[0.0], np.cumsum(wrapped)])
    window = csum[width : width + m] - csum[:m]
    return int(np.argmax(window >= window.max() * (1 - 1e-12)))


def baseline_filter(grid: FrequencyGrid, cfg: RisConfig) -> np.ndarray:
    m1, m2 = grid.spec.shape
    if m1 < cfg.n_x or m2 < cfg.n_y:
        raise SpecError(f"design grid {grid.spec.shape} smaller than the {cfg.n_x}x{cfg.n_y} array")
    x = ifft2(grid.values)
    power = np.abs(x) ** 2
    s1 = _best_circular_offset(power.sum(axis=1), cfg.n_x)
    s2 = _best_circular_offset(power.sum(axis=0), cfg.n_y)
    block = np.roll(x, (-s1, -s2), axis=(0, 1))[: cfg.n_x, : cfg.n_y]
    # grid starts at -pi: lag p of the zero-phase response is exp(-j p pi) x(p mod M)
    lag1 = s1 + np.arange(cfg.n_x)
    lag2 = s2 + np.arange(cfg.n_y)
    return block * np.outer(1 - 2 * (lag1 % 2), 1 - 2 * (lag2 % 2))


def design_baseline(
    grid: FrequencyGrid,
    cfg: RisConfig,
    incidents: Sequence[Direction],
    epsilon: float = DEFAULT_EPSILON,
) -> tuple[CoefficientMatrix, DesignReport]:
    t0 = time.perf_counter()
    h = CoefficientMatrix(baseline_filter(grid, cfg), "filter")
    v = extract_reflection(h, incidents, cfg, epsilon=epsilon)
    wall = time.perf_counter() - t0
    err, ntse = design_grid_metrics(v, incidents, cfg, grid)
    report = DesignReport(err, ntse, wall, "fast", cfg, grid.spec, list(incidents), method=SURROGATE_LABEL)
    return v, report
