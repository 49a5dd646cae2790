"""Finite-resolution amplitude/phase quantisation of reflection coefficients."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SpecError
from .geometry import TWO_PI


@dataclass(frozen=True)
class QuantizationConfig:
    b1: int  # amplitude bits
    b2: int  # phase bits

    def __post_init__(self):
        for name in ("b1", "b2"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, (int, np.integer)) or not 1 <= val <= 16:
                raise SpecError(f"{name} must be an integer in [1, 16]", field=name)


def _round_half_down(x: np.ndarray) -> np.ndarray:
    return np.ceil(x - 0.5)


def quantize(v, q: QuantizationConfig):
    """Snap |v| to 2**b1 uniform levels on [0, max|v|] and arg(v) to 2**b2 points 2*pi*i/2**b2.

    Ties go to the lower level. Accepts a CoefficientMatrix or a bare array and
    returns the same kind.
    """
    from .synthesis import CoefficientMatrix

    vals = np.asarray(getattr(v, "values", v), dtype=complex)
    if vals.size == 0:
        raise SpecError("cannot quantise an empty coefficient matrix")
    amp = np.abs(vals)
    # single-precision reference: re-quantising reproduces the same lattice bit for bit
    full_scale = float(np.float32(amp.max()))
    if full_scale == 0.0:
        return v
    n_amp = (1 << q.b1) - 1
    idx = np.clip(_round_half_down(amp / full_scale * n_amp), 0, n_amp)
    amp_q = full_scale * (idx / n_amp)

    n_ph = 1 << q.b2
    step = TWO_PI / n_ph
    phase = np.mod(np.angle(vals), TWO_PI)
    pidx = np.mod(_round_half_down(phase / step), n_ph)
    out = amp_q * np.exp(1j * step * pidx)
    if isinstance(v, CoefficientMatrix):
        return CoefficientMatrix(out, v.role)
    return out


def amplitude_step(v, b1: int) -> float:
    amp = np.abs(np.asarray(getattr(v, "values", v)))
    return float(np.float32(amp.max())) / ((1 << b1) - 1)


def phase_step(b2: int) -> float:
    return TWO_PI / (1 << b2)


__all__ = ["QuantizationConfig", "quantize", "amplitude_step", "phase_step"]
