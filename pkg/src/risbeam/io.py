"""Plain-text output formats: coefficient CSV, pattern dumps, reports, graymaps."""
from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

from .angles import FrequencyGridSpec, grid_mesh, omegas_to_angles
from .errors import SpecError
from .geometry import RisConfig

COEFF_HEADER = ["nx", "ny", "re", "im", "amplitude", "phase_rad"]
PATTERN_HEADER = ["k", "l", "omega1", "omega2", "theta_azi", "theta_ele", "H", "Hhat"]


def _g(x: float) -> str:
    # 17 significant digits round-trip every double
    return format(float(x), ".17g")


def write_coefficients(path, values: np.ndarray) -> None:
    values = np.asarray(values, dtype=complex)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(COEFF_HEADER)
        for (ix, iy), c in np.ndenumerate(values):
            w.writerow([ix, iy, _g(c.real), _g(c.imag), _g(abs(c)), _g(math.atan2(c.imag, c.real))])


def read_coefficients(path, cfg: RisConfig) -> np.ndarray:
    """Read a coefficient CSV for an ``n_x x n_y`` array; only ``re``/``im`` are used."""
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise SpecError(f"cannot read coefficient file: {exc}") from None
    out = np.full(cfg.shape, np.nan + 0j)
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != COEFF_HEADER:
            raise SpecError(f"coefficient file header must be {','.join(COEFF_HEADER)}", line=1)
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(COEFF_HEADER):
                raise SpecError("wrong number of columns in coefficient file", line=lineno)
            try:
                ix, iy = int(row[0]), int(row[1])
                re, im = float(row[2]), float(row[3])
            except ValueError:
                raise SpecError("malformed value in coefficient file", line=lineno) from None
            if not (0 <= ix < cfg.n_x and 0 <= iy < cfg.n_y):
                raise SpecError(f"unit ({ix},{iy}) outside the {cfg.n_x}x{cfg.n_y} array", line=lineno)
            out[ix, iy] = complex(re, im)
    if np.isnan(out.real).any():
        missing = int(np.isnan(out.real).sum())
        raise SpecError(f"coefficient file incomplete: {missing} unit(s) missing")
    return out


def write_pattern_dump(path, spec: FrequencyGridSpec, cfg: RisConfig, H: np.ndarray, Hhat: np.ndarray) -> None:
    w1, w2 = grid_mesh(spec)
    azi, ele, inside = omegas_to_angles(w1, w2, cfg)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(PATTERN_HEADER)
        for k in range(spec.m_1):
            for l in range(spec.m_2):
                if inside[k, l]:
                    a, e = _g(azi[k, l]), _g(ele[k, l])
                else:
                    a = e = ""
                w.writerow([k, l, _g(w1[k, l]), _g(w2[k, l]), a, e, _g(H[k, l]), _g(Hhat[k, l])])


def write_cross_section(path, azimuth: np.ndarray, magnitude: np.ndarray) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["azimuth", "magnitude"])
        for a, m in zip(azimuth, magnitude):
            w.writerow([_g(a), _g(m)])


def write_pgm(path, magnitude: np.ndarray) -> None:
    """8-bit binary graymap of a ``[k, l]`` array: image row = l (ascending), column = k."""
    img = np.asarray(magnitude, dtype=float).T
    peak = img.max()
    scaled = np.zeros(img.shape) if peak <= 0 else img / peak
    data = np.clip(np.rint(scaled * 255), 0, 255).astype(np.uint8)
    with open(path, "wb") as fh:
        fh.write(f"P5\n{data.shape[1]} {data.shape[0]}\n255\n".encode("ascii"))
        fh.write(data.tobytes())


def read_pgm(path) -> np.ndarray:
    raw = Path(path).read_bytes()
    parts = raw.split(maxsplit=4)
    if parts[0] != b"P5":
        raise ValueError("not a binary graymap")
    width, height, maxval = int(parts[1]), int(parts[2]), int(parts[3])
    if maxval != 255:
        raise ValueError("only 8-bit graymaps are supported")
    return np.frombuffer(parts[4][: width * height], dtype=np.uint8).reshape(height, width)


def format_report(items: dict) -> str:
    lines = []
    for key, val in items.items():
        if isinstance(val, float):
            val = _g(val)
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> dict:
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, val = line.partition(":")
        out[key.strip()] = val.strip()
    return out


def report_items(report) -> dict:
    items = {
        "method": report.method,
        "tse": report.tse,
        "normalized_tse": report.normalized_tse,
        "n_x": report.ris.n_x,
        "n_y": report.ris.n_y,
        "spacing_over_lambda": float(report.ris.spacing_over_lambda),
        "m_1": report.grid.m_1,
        "m_2": report.grid.m_2,
        "path": report.path,
        "incidents": ";".join(f"{_g(d.azimuth)},{_g(d.elevation)}" for d in report.incidents),
    }
    if report.quantization is not None:
        items["b1"], items["b2"] = report.quantization
    items["wall_time_s"] = float(report.design_wall_time)
    return items
