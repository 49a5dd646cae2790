"""Array geometry: direction vectors, unit positions and incident phase factors.

Positions are expressed in wavelengths, so a phase is simply ``2*pi*u @ r``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import SpecError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RisConfig:
    """Planar RIS with ``n_x`` by ``n_y`` units spaced ``spacing_over_lambda`` wavelengths apart."""

    n_x: int
    n_y: int
    spacing_over_lambda: float = 0.5

    def __post_init__(self):
        for name in ("n_x", "n_y"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, (int, np.integer)) or val <= 0:
                raise SpecError(f"{name} must be a positive integer", field=name)
            if val % 2:
                raise SpecError(f"{name} must be even", field=name)
        d = self.spacing_over_lambda
        if not (isinstance(d, (int, float)) and math.isfinite(d) and d > 0):
            raise SpecError("spacing_over_lambda must be a positive number", field="spacing_over_lambda")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_x, self.n_y)

    @property
    def visible_radius(self) -> float:
        """Radius of the reachable disk in the (omega1, omega2) plane."""
        return TWO_PI * self.spacing_over_lambda


@dataclass(frozen=True)
class Direction:
    """Azimuth in [0, 2*pi) and elevation in [0, pi/2], radians."""

    azimuth: float
    elevation: float

    def __post_init__(self):
        if not (0.0 <= self.azimuth < TWO_PI):
            raise SpecError(f"azimuth {self.azimuth!r} outside [0, 2*pi)", field="azimuth")
        if not (0.0 <= self.elevation <= math.pi / 2):
            raise SpecError(f"elevation {self.elevation!r} outside [0, pi/2]", field="elevation")


def _direction_xy(azimuth, elevation):
    s = np.sin(elevation)
    return np.cos(azimuth) * s, np.sin(azimuth) * s


def incident_unit_vector(direction: Direction) -> np.ndarray:
    x, y = _direction_xy(direction.azimuth, direction.elevation)
    return np.array([x, y, -math.cos(direction.elevation)])


def observation_unit_vector(direction: Direction) -> np.ndarray:
    x, y = _direction_xy(direction.azimuth, direction.elevation)
    return np.array([x, y, math.cos(direction.elevation)])


def unit_position(ix: int, iy: int, cfg: RisConfig) -> np.ndarray:
    """Centre of unit ``(ix, iy)`` in wavelengths; unit (0, 0) sits at the origin."""
    if not (0 <= ix < cfg.n_x and 0 <= iy < cfg.n_y):
        raise IndexError(f"unit ({ix}, {iy}) outside a {cfg.n_x}x{cfg.n_y} array")
    d = cfg.spacing_over_lambda
    return np.array([ix * d, iy * d, 0.0])


def incident_phase_map(incidents: Sequence[Direction], cfg: RisConfig) -> np.ndarray:
    """Per-unit factor sum_i exp(+j 2pi u_in_i . r) as an ``(n_x, n_y)`` array."""
    if len(incidents) == 0:
        raise SpecError("at least one incident direction is required", field="incident")
    d = cfg.spacing_over_lambda
    ix = np.arange(cfg.n_x) * d
    iy = np.arange(cfg.n_y) * d
    total = np.zeros(cfg.shape, dtype=complex)
    for inc in incidents:
        ux, uy, _ = incident_unit_vector(inc)
        # separable: exp(j2pi(ux x + uy y)) = outer(ex, ey)
        total += np.outer(np.exp(1j * TWO_PI * ux * ix), np.exp(1j * TWO_PI * uy * iy))
    return total


def incident_phase_sum(incidents: Sequence[Direction], ix: int, iy: int, cfg: RisConfig) -> complex:
    if len(incidents) == 0:
        raise SpecError("at least one incident direction is required", field="incident")
    r = unit_position(ix, iy, cfg)
    return complex(sum(np.exp(1j * TWO_PI * incident_unit_vector(inc) @ r) for inc in incidents))
