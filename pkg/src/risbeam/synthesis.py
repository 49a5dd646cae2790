"""Closed-form beam synthesis via linear-phase 2-D FIR design.

The filter ``h`` relates to the reflection coefficients by ``h = s * v`` where
``s`` is the per-unit incident phase sum. With Hermitian-symmetric ``h`` the
response factors as a linear phase times a real zero-phase response, and the
TSE-optimal coefficients on the sampling grid are a (shifted) inverse DFT of
the desired magnitude. Two routes compute them: :func:`design_direct` (the
literal double sum) and the IFFT pipeline
:func:`modulate_linear_phase` -> :func:`ifft2` -> :func:`derotate_and_truncate`
-> :func:`hermitian_complete`.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .angles import FrequencyGridSpec, build_grid
from .errors import SingularIncidenceError, SpecError
from .geometry import Direction, RisConfig, incident_phase_map
from .pattern import DesiredPattern, FrequencyGrid, sample_to_grid

DEFAULT_EPSILON = 1e-6


@dataclass(frozen=True, eq=False)
class CoefficientMatrix:
    values: np.ndarray
    role: Literal["filter", "reflection"]

    def __post_init__(self):
        if self.role not in ("filter", "reflection"):
            raise ValueError(f"unknown role {self.role!r}")
        object.__setattr__(self, "values", np.asarray(self.values, dtype=complex))

    @property
    def shape(self):
        return self.values.shape

    def is_hermitian(self, atol: float = 0.0) -> bool:
        v = self.values
        return bool(np.all(np.abs(v - np.conj(v[::-1, ::-1])) <= atol))


@dataclass
class DesignReport:
    tse: float
    normalized_tse: float
    design_wall_time: float
    path: str
    ris: RisConfig
    grid: FrequencyGridSpec
    incidents: list
    method: str = "proposed"
    quantization: tuple[int, int] | None = None
    extras: dict = field(default_factory=dict)


def _check_sizes(spec: FrequencyGridSpec, cfg: RisConfig) -> None:
    if cfg.n_x % 2 or cfg.n_y % 2:
        raise SpecError("n_x and n_y must be even", field="n_x" if cfg.n_x % 2 else "n_y")
    spec.check_covers(cfg)


def design_direct(grid: FrequencyGrid, cfg: RisConfig) -> CoefficientMatrix:
    """Brute-force evaluation of the closed-form coefficients, O(N_x N_y M_1 M_2).

    Computes rows ``m < N_x/2`` from the double sum and completes the rest by
    conjugate point reflection.
    """
    _check_sizes(grid.spec, cfg)
    w1, w2 = build_grid(grid.spec)
    m1, m2 = grid.spec.shape
    c1, c2 = (cfg.n_x - 1) / 2, (cfg.n_y - 1) / 2
    e1 = np.exp(1j * np.outer(np.arange(cfg.n_x // 2) - c1, w1))
    e2 = np.exp(1j * np.outer(np.arange(cfg.n_y) - c2, w2))
    H = grid.values.astype(complex)
    half = np.empty((cfg.n_x // 2, cfg.n_y), dtype=complex)
    for m in range(cfg.n_x // 2):
        # full double sum over (k, l) for every n; no transform shortcuts
        half[m] = np.einsum("kl,k,nl->n", H, e1[m], e2) / (m1 * m2)
    return hermitian_complete(half, cfg)


def modulate_linear_phase(grid: FrequencyGrid, cfg: RisConfig) -> np.ndarray:
    """Desired magnitude times exp(-j((N_x-1)/2 w1 + (N_y-1)/2 w2))."""
    w1, w2 = build_grid(grid.spec)
    p1 = np.exp(-1j * (cfg.n_x - 1) / 2 * w1)
    p2 = np.exp(-1j * (cfg.n_y - 1) / 2 * w2)
    return grid.values * np.outer(p1, p2)


def ifft2(x: np.ndarray) -> np.ndarray:
    """x(p,q) = 1/(MN) sum X(m,n) exp(+j2pi mp/M) exp(+j2pi nq/N).

    numpy's default ("backward") normalisation is exactly this convention.
    """
    return np.fft.ifft2(np.asarray(x, dtype=complex))


def derotate_and_truncate(h_tilde: np.ndarray, cfg: RisConfig) -> np.ndarray:
    """Keep rows ``< N_x/2`` and columns ``< N_y`` and apply (-1)^(m+n)."""
    m1, m2 = h_tilde.shape
    if m1 < cfg.n_x or m2 < cfg.n_y:
        raise SpecError(f"IFFT output {h_tilde.shape} smaller than the {cfg.n_x}x{cfg.n_y} array")
    half = h_tilde[: cfg.n_x // 2, : cfg.n_y]
    sign = 1 - 2 * ((np.arange(cfg.n_x // 2)[:, None] + np.arange(cfg.n_y)[None, :]) % 2)
    return half * sign


def hermitian_complete(half: np.ndarray, cfg: RisConfig) -> CoefficientMatrix:
    """Fill rows N_x/2..N_x-1 from h(m, n) = conj(h(N_x-1-m, N_y-1-n))."""
    half = np.asarray(half, dtype=complex)
    if half.shape != (cfg.n_x // 2, cfg.n_y):
        raise SpecError(f"half matrix shape {half.shape} != {(cfg.n_x // 2, cfg.n_y)}")
    full = np.empty(cfg.shape, dtype=complex)
    full[: cfg.n_x // 2] = half
    full[cfg.n_x // 2 :] = np.conj(half[::-1, ::-1])
    return CoefficientMatrix(full, "filter")


def design_fast(grid: FrequencyGrid, cfg: RisConfig) -> CoefficientMatrix:
    _check_sizes(grid.spec, cfg)
    h_tilde = ifft2(modulate_linear_phase(grid, cfg))
    return hermitian_complete(derotate_and_truncate(h_tilde, cfg), cfg)


def extract_reflection(
    h: CoefficientMatrix,
    incidents: Sequence[Direction],
    cfg: RisConfig,
    epsilon: float = DEFAULT_EPSILON,
    regularize: bool = False,
) -> CoefficientMatrix:
    """v = h / s with s the incident phase sum at each unit.

    Units where ``|s| < epsilon`` raise :class:`SingularIncidenceError` unless
    ``regularize`` is set, in which case v = h conj(s) / (|s|^2 + epsilon^2).
    """
    if h.shape != cfg.shape:
        raise SpecError(f"coefficient shape {h.shape} != {cfg.shape}")
    s = incident_phase_map(incidents, cfg)
    if regularize:
        return CoefficientMatrix(h.values * np.conj(s) / (np.abs(s) ** 2 + epsilon**2), "reflection")
    bad = np.argwhere(np.abs(s) < epsilon)
    if len(bad):
        raise SingularIncidenceError(bad, epsilon)
    return CoefficientMatrix(h.values / s, "reflection")


def filter_response(h: np.ndarray, spec: FrequencyGridSpec) -> np.ndarray:
    """H(e^{jw1}, e^{jw2}) = sum h(m,n) exp(-j(m w1 + n w2)) on the design grid.

    Since w = 2*pi*k/M - pi, the sum is an M-point DFT of (-1)^(m+n) h.
    """
    h = np.asarray(h, dtype=complex)
    n1, n2 = h.shape
    if spec.m_1 < n1 or spec.m_2 < n2:
        raise SpecError("design grid smaller than the coefficient matrix")
    sign = 1 - 2 * ((np.arange(n1)[:, None] + np.arange(n2)[None, :]) % 2)
    return np.fft.fft2(h * sign, s=spec.shape)


def zero_phase_response(h: np.ndarray, spec: FrequencyGridSpec) -> np.ndarray:
    """Filter response with the (N-1)/2 linear phase removed; real for Hermitian h."""
    n1, n2 = np.shape(h)
    w1, w2 = build_grid(spec)
    lin = np.outer(np.exp(1j * (n1 - 1) / 2 * w1), np.exp(1j * (n2 - 1) / 2 * w2))
    return lin * filter_response(h, spec)


def filter_tse(h: np.ndarray, grid: FrequencyGrid) -> float:
    """Design-criterion TSE: sum over the full grid of (zero-phase H - desired)^2."""
    resp = zero_phase_response(h, grid.spec)
    return float(np.sum(np.abs(resp - grid.values) ** 2))


def design(
    pattern: DesiredPattern,
    cfg: RisConfig,
    spec: FrequencyGridSpec,
    incidents: Sequence[Direction],
    path: Literal["fast", "direct"] = "fast",
    quantization=None,
    epsilon: float = DEFAULT_EPSILON,
    regularize: bool = False,
) -> tuple[CoefficientMatrix, DesignReport]:
    """Full pipeline: sample the pattern, design h, extract v, optionally quantise, score."""
    from .evaluation import design_grid_metrics
    from .quantization import quantize

    if path not in ("fast", "direct"):
        raise SpecError(f"unknown design path {path!r}", field="path")
    grid = sample_to_grid(pattern, spec, cfg)
    t0 = time.perf_counter()
    h = design_fast(grid, cfg) if path == "fast" else design_direct(grid, cfg)
    v = extract_reflection(h, incidents, cfg, epsilon=epsilon, regularize=regularize)
    wall = time.perf_counter() - t0
    qpair = None
    if quantization is not None:
        v = quantize(v, quantization)
        qpair = (quantization.b1, quantization.b2)
    tse_val, ntse = design_grid_metrics(v, incidents, cfg, grid)
    report = DesignReport(tse_val, ntse, wall, path, cfg, spec, list(incidents), quantization=qpair)
    return v, report


__all__ = [
    "CoefficientMatrix",
    "DesignReport",
    "design",
    "design_direct",
    "design_fast",
    "derotate_and_truncate",
    "extract_reflection",
    "filter_response",
    "filter_tse",
    "hermitian_complete",
    "ifft2",
    "modulate_linear_phase",
    "zero_phase_response",
]
