"""Mapping between observation angles and transform-domain frequencies.

With unit spacing ``d`` (in wavelengths) a direction maps to

    omega1 = 2*pi*d * cos(azi) * sin(ele)
    omega2 = 2*pi*d * sin(azi) * sin(ele)

so every real direction lands in a disk of radius ``2*pi*d``; for d = 1/2 that
disk is inscribed in the design square [-pi, pi)^2 and its corners are
unreachable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SpecError
from .geometry import TWO_PI, Direction, RisConfig


# relative slack for points that hypot places a few ulps off the rim
_RIM = 1.0 + 8 * np.finfo(float).eps


@dataclass(frozen=True)
class FrequencyGridSpec:
    m_1: int
    m_2: int

    def __post_init__(self):
        for name in ("m_1", "m_2"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, (int, np.integer)) or val <= 0:
                raise SpecError(f"{name} must be a positive integer", field=name)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m_1, self.m_2)

    def check_covers(self, cfg: RisConfig) -> None:
        if self.m_1 < cfg.n_x:
            raise SpecError(f"m_1={self.m_1} smaller than n_x={cfg.n_x}", field="m_1")
        if self.m_2 < cfg.n_y:
            raise SpecError(f"m_2={self.m_2} smaller than n_y={cfg.n_y}", field="m_2")


@dataclass(frozen=True)
class OmegaPoint:
    omega1: float
    omega2: float
    inside_disk: bool


def angle_to_omega(direction: Direction, cfg: RisConfig) -> OmegaPoint:
    w1, w2 = angles_to_omegas(direction.azimuth, direction.elevation, cfg)
    w1, w2 = float(w1), float(w2)
    return OmegaPoint(w1, w2, math.hypot(w1, w2) <= cfg.visible_radius * _RIM)


def omega_to_angle(point: OmegaPoint | tuple[float, float], cfg: RisConfig) -> Direction | None:
    """Inverse mapping; returns ``None`` for points outside the visible disk."""
    w1, w2 = (point.omega1, point.omega2) if isinstance(point, OmegaPoint) else point
    azi, ele, inside = omegas_to_angles(np.float64(w1), np.float64(w2), cfg)
    if not inside:
        return None
    return Direction(float(azi), float(ele))


def angles_to_omegas(azimuth, elevation, cfg: RisConfig):
    """Vectorised forward map; broadcasts ``azimuth`` against ``elevation``."""
    k = cfg.visible_radius
    s = np.sin(elevation)
    return k * np.cos(azimuth) * s, k * np.sin(azimuth) * s


def omegas_to_angles(omega1, omega2, cfg: RisConfig):
    """Vectorised inverse map.

    Returns ``(azimuth, elevation, inside)``; angles are NaN where ``inside`` is
    False. Azimuth is the phase of omega1 + j*omega2 folded into [0, 2*pi), with
    the origin (normal reflection) assigned azimuth 0.
    """
    omega1 = np.asarray(omega1, dtype=float)
    omega2 = np.asarray(omega2, dtype=float)
    radius = np.hypot(omega1, omega2)
    r_max = cfg.visible_radius
    inside = radius <= r_max * _RIM
    azi = np.mod(np.arctan2(omega2, omega1), TWO_PI)
    # arctan2 can return -0.0 or a tiny negative that mod folds to exactly 2*pi
    azi = np.where(azi >= TWO_PI, 0.0, azi)
    azi = np.where(radius == 0.0, 0.0, azi)
    ratio = np.clip(radius / r_max, 0.0, 1.0)
    # arcsin would turn a few ulps short of the rim into ~1e-8 rad
    ratio = np.where(ratio > 2.0 - _RIM, 1.0, ratio)
    ele = np.arcsin(ratio)
    azi = np.where(inside, azi, np.nan)
    ele = np.where(inside, ele, np.nan)
    return azi, ele, inside


def build_grid(spec: FrequencyGridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Sample axes omega_k = 2*pi*k/M - pi, k = 0..M-1 (half-open, starts at -pi)."""
    w1 = TWO_PI * np.arange(spec.m_1) / spec.m_1 - math.pi
    w2 = TWO_PI * np.arange(spec.m_2) / spec.m_2 - math.pi
    return w1, w2


def grid_mesh(spec: FrequencyGridSpec) -> tuple[np.ndarray, np.ndarray]:
    """``(M1, M2)`` meshes indexed ``[k, l]``."""
    w1, w2 = build_grid(spec)
    return np.meshgrid(w1, w2, indexing="ij")


def disk_mask(spec: FrequencyGridSpec, cfg: RisConfig) -> np.ndarray:
    w1, w2 = grid_mesh(spec)
    return np.hypot(w1, w2) <= cfg.visible_radius * _RIM


def spacing_bound(azimuth, elevation) -> np.ndarray:
    """Largest d/lambda keeping a direction inside [-pi, pi)^2 (infinite at the normal)."""
    cx = np.abs(np.cos(azimuth) * np.sin(elevation))
    cy = np.abs(np.sin(azimuth) * np.sin(elevation))
    with np.errstate(divide="ignore"):
        return 0.5 * np.minimum(1.0 / cx, 1.0 / cy)


def validate_spacing(pattern, cfg: RisConfig, n_azimuth: int = 721, n_elevation: int = 361):
    """Check the spacing against the pattern's support.

    The support is located by dense sampling of azimuth x elevation. Returns
    ``(ok, bound)`` where ``bound`` is the tightest admissible d/lambda over the
    support (``inf`` when the support is empty or only at the normal).
    """
    if cfg.spacing_over_lambda <= 0.5:
        # every direction satisfies the bound at d <= lambda/2
        return True, _support_bound(pattern, n_azimuth, n_elevation)
    bound = _support_bound(pattern, n_azimuth, n_elevation)
    return bool(cfg.spacing_over_lambda <= bound), bound


def _support_bound(pattern, n_azimuth, n_elevation) -> float:
    azi = np.linspace(0.0, TWO_PI, n_azimuth, endpoint=False)
    ele = np.linspace(0.0, math.pi / 2, n_elevation)
    A, E = np.meshgrid(azi, ele, indexing="ij")
    mag = pattern.evaluate(A, E)
    support = mag > 0
    if not support.any():
        return math.inf
    return float(spacing_bound(A[support], E[support]).min())
