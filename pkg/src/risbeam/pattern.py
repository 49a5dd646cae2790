"""Desired beam-pattern description and its transform-domain samples."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from .angles import FrequencyGridSpec, grid_mesh, omegas_to_angles, validate_spacing
from .errors import SpecError
from .geometry import TWO_PI, Direction, RisConfig


def _wrap_azimuth(delta):
    """Fold an azimuth difference into [-pi, pi)."""
    return np.mod(np.asarray(delta) + math.pi, TWO_PI) - math.pi


def _edge_taper(signed_distance, width):
    """Raised-cosine ramp: 1 at ``+width/2`` inside the edge, 0 at ``width/2`` outside."""
    if width <= 0:
        return (signed_distance >= 0).astype(float)
    with np.errstate(over="ignore"):
        t = np.clip(signed_distance / width + 0.5, 0.0, 1.0)
    return 0.5 - 0.5 * np.cos(math.pi * t)


@dataclass(frozen=True)
class RectSpot:
    center_azimuth: float
    center_elevation: float
    width_azimuth: float
    width_elevation: float
    magnitude: float = 1.0
    transition_width: float = 0.0

    def evaluate(self, azimuth, elevation):
        da = np.abs(_wrap_azimuth(azimuth - self.center_azimuth))
        de = np.abs(np.asarray(elevation) - self.center_elevation)
        w = self.transition_width
        # separable taper; reduces to the hard rectangle when w == 0
        return self.magnitude * _edge_taper(self.width_azimuth / 2 - da, w) * _edge_taper(
            self.width_elevation / 2 - de, w
        )


@dataclass(frozen=True)
class CircleSpot:
    """Disk in the (azimuth, elevation) plane."""

    center_azimuth: float
    center_elevation: float
    diameter: float
    magnitude: float = 1.0
    transition_width: float = 0.0

    def evaluate(self, azimuth, elevation):
        da = _wrap_azimuth(azimuth - self.center_azimuth)
        de = np.asarray(elevation) - self.center_elevation
        return self.magnitude * _edge_taper(self.diameter / 2 - np.hypot(da, de), self.transition_width)


@dataclass(frozen=True, eq=False)
class CustomSpot:
    """Magnitude table sampled on a regular azimuth x elevation grid, bilinearly interpolated.

    ``values`` is indexed ``[azimuth, elevation]``; outside the table the spot is 0.
    """

    azimuths: np.ndarray
    elevations: np.ndarray
    values: np.ndarray
    magnitude: float = 1.0
    transition_width: float = 0.0

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (len(self.azimuths), len(self.elevations)):
            raise SpecError("custom table values do not match its axes", field="table_path")
        if (vals < 0).any():
            raise SpecError("custom table magnitudes must be non-negative", field="table_path")
        if len(self.azimuths) < 2 or len(self.elevations) < 2:
            raise SpecError("custom table needs at least 2 azimuths and 2 elevations", field="table_path")
        object.__setattr__(
            self,
            "_interp",
            RegularGridInterpolator(
                (np.asarray(self.azimuths, float), np.asarray(self.elevations, float)),
                vals,
                bounds_error=False,
                fill_value=0.0,
            ),
        )

    @classmethod
    def from_csv(cls, path, magnitude: float = 1.0) -> "CustomSpot":
        """Read a ``azimuth,elevation,magnitude`` table covering a full rectangular grid."""
        path = Path(path)
        try:
            with path.open(newline="") as fh:
                reader = csv.DictReader(fh)
                if reader.fieldnames != ["azimuth", "elevation", "magnitude"]:
                    raise SpecError(
                        f"{path}: header must be 'azimuth,elevation,magnitude'", field="table_path", line=1
                    )
                rows = []
                for lineno, row in enumerate(reader, start=2):
                    try:
                        rows.append((float(row["azimuth"]), float(row["elevation"]), float(row["magnitude"])))
                    except (TypeError, ValueError):
                        raise SpecError(f"{path}: malformed row", field="table_path", line=lineno) from None
        except OSError as exc:
            raise SpecError(f"cannot read custom table: {exc}", field="table_path") from None
        data = np.array(rows, dtype=float).reshape(-1, 3)
        azis = np.unique(data[:, 0])
        eles = np.unique(data[:, 1])
        if len(data) != len(azis) * len(eles):
            raise SpecError(f"{path}: table is not a complete azimuth x elevation grid", field="table_path")
        values = np.full((len(azis), len(eles)), np.nan)
        values[np.searchsorted(azis, data[:, 0]), np.searchsorted(eles, data[:, 1])] = data[:, 2]
        if np.isnan(values).any():
            raise SpecError(f"{path}: duplicate grid points in table", field="table_path")
        return cls(azis, eles, values, magnitude=magnitude)

    def evaluate(self, azimuth, elevation):
        a, e = np.broadcast_arrays(np.asarray(azimuth, float), np.asarray(elevation, float))
        pts = np.stack([a.ravel(), e.ravel()], axis=-1)
        return self.magnitude * self._interp(pts).reshape(a.shape)


BeamSpot = RectSpot | CircleSpot | CustomSpot


@dataclass(frozen=True)
class DesiredPattern:
    """Union of beam spots; overlapping spots take the larger magnitude."""

    spots: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "spots", tuple(self.spots))
        for spot in self.spots:
            if not (spot.magnitude >= 0 and math.isfinite(spot.magnitude)):
                raise SpecError("spot magnitude must be a non-negative number", field="magnitude")
            if not (spot.transition_width >= 0):
                raise SpecError("transition_width must be non-negative", field="transition_width")

    def evaluate(self, azimuth, elevation) -> np.ndarray:
        azimuth = np.asarray(azimuth, dtype=float)
        elevation = np.asarray(elevation, dtype=float)
        out = np.zeros(np.broadcast_shapes(azimuth.shape, elevation.shape))
        for spot in self.spots:
            np.maximum(out, spot.evaluate(azimuth, elevation), out=out)
        return out

    def scaled(self, factor: float) -> "DesiredPattern":
        from dataclasses import replace

        return DesiredPattern(tuple(replace(s, magnitude=s.magnitude * factor) for s in self.spots))


def evaluate_desired(pattern: DesiredPattern, direction: Direction) -> float:
    return float(pattern.evaluate(direction.azimuth, direction.elevation))


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """Desired magnitude samples on the design grid, indexed ``[k, l]``."""

    spec: FrequencyGridSpec
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != self.spec.shape:
            raise SpecError(f"grid values shape {vals.shape} != {self.spec.shape}")
        object.__setattr__(self, "values", vals)


def sample_to_grid(pattern: DesiredPattern, spec: FrequencyGridSpec, cfg: RisConfig) -> FrequencyGrid:
    ok, bound = validate_spacing(pattern, cfg)
    if not ok:
        raise SpecError(
            f"spacing_over_lambda={cfg.spacing_over_lambda} exceeds {bound:.6g} required by the pattern support",
            field="spacing_over_lambda",
        )
    w1, w2 = grid_mesh(spec)
    azi, ele, inside = omegas_to_angles(w1, w2, cfg)
    values = np.zeros(spec.shape)
    values[inside] = pattern.evaluate(azi[inside], ele[inside])
    return FrequencyGrid(spec, values)


# --------------------------------------------------------------------------- spec files


@dataclass
class DesignInputs:
    pattern: DesiredPattern
    ris: RisConfig
    grid: FrequencyGridSpec
    incidents: list = field(default_factory=list)


_SECTION_KEYS = {
    "ris": {"n_x", "n_y", "spacing_over_lambda"},
    "grid": {"m_1", "m_2"},
    "incident": {"azimuth", "elevation"},
}
_SPOT_KEYS = {
    "rect": {"kind", "center_azimuth", "center_elevation", "width_azimuth", "width_elevation", "magnitude", "transition_width"},
    "circle": {"kind", "center_azimuth", "center_elevation", "diameter", "magnitude", "transition_width"},
    "custom": {"kind", "table_path", "magnitude"},
}
_OPTIONAL = {"magnitude", "transition_width", "spacing_over_lambda"}


def _toml_loads(text: str) -> dict:
    try:
        import tomllib  # type: ignore[import-not-found]
    except ModuleNotFoundError:
        import tomli as tomllib
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SpecError(f"invalid TOML: {exc}", line=getattr(exc, "lineno", None)) from None


def _line_of(text: str, needle: str) -> int | None:
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip().startswith(needle):
            return i
    return None


def _check_keys(table: dict, allowed: set, where: str, text: str):
    unknown = sorted(set(table) - allowed)
    if unknown:
        raise SpecError(f"unknown key in {where}", field=f"{where}.{unknown[0]}", line=_line_of(text, unknown[0]))
    missing = sorted(allowed - _OPTIONAL - set(table))
    if missing:
        raise SpecError(f"missing key in {where}", field=f"{where}.{missing[0]}")


def _number(table: dict, key: str, where: str, default=None) -> float:
    val = table.get(key, default)
    if isinstance(val, bool) or not isinstance(val, (int, float)) or not math.isfinite(val):
        raise SpecError("expected a finite number", field=f"{where}.{key}")
    return float(val)


def _integer(table: dict, key: str, where: str) -> int:
    val = table.get(key)
    if isinstance(val, bool) or not isinstance(val, int):
        raise SpecError("expected an integer", field=f"{where}.{key}")
    return val


def _angles(table: dict, where: str, azi_key: str, ele_key: str) -> tuple[float, float]:
    azi = _number(table, azi_key, where)
    ele = _number(table, ele_key, where)
    if not 0.0 <= azi < TWO_PI:
        raise SpecError("azimuth must lie in [0, 2*pi)", field=f"{where}.{azi_key}")
    if not 0.0 <= ele <= math.pi / 2:
        raise SpecError("elevation must lie in [0, pi/2]", field=f"{where}.{ele_key}")
    return azi, ele


def parse_spec(text: str, base_dir: str | Path = ".") -> DesignInputs:
    """Parse a TOML design document (see README for the schema).

    Relative ``table_path`` entries resolve against ``base_dir``.
    """
    doc = _toml_loads(text)
    top = {"ris", "grid", "incident", "spot"}
    unknown = sorted(set(doc) - top)
    if unknown:
        raise SpecError("unknown section", field=unknown[0], line=_line_of(text, f"[{unknown[0]}"))
    for sec in ("ris", "grid", "spot"):
        if sec not in doc:
            raise SpecError("missing section", field=sec)

    ris_t = doc["ris"]
    _check_keys(ris_t, _SECTION_KEYS["ris"], "ris", text)
    n_x = _integer(ris_t, "n_x", "ris")
    n_y = _integer(ris_t, "n_y", "ris")
    for name, val in (("n_x", n_x), ("n_y", n_y)):
        if val <= 0 or val % 2:
            raise SpecError(f"{name} must be even and positive", field=f"ris.{name}", line=_line_of(text, name))
    ris = RisConfig(n_x, n_y, _number(ris_t, "spacing_over_lambda", "ris", default=0.5))

    grid_t = doc["grid"]
    _check_keys(grid_t, _SECTION_KEYS["grid"], "grid", text)
    grid = FrequencyGridSpec(_integer(grid_t, "m_1", "grid"), _integer(grid_t, "m_2", "grid"))
    try:
        grid.check_covers(ris)
    except SpecError as exc:
        raise SpecError(str(exc).split(" (")[0], field=f"grid.{exc.field}") from None

    incident_ts = doc.get("incident", [{"azimuth": 0.0, "elevation": 0.0}])
    if not isinstance(incident_ts, list) or not incident_ts:
        raise SpecError("incident must be an array of tables ([[incident]])", field="incident")
    incidents = []
    for i, inc in enumerate(incident_ts):
        where = f"incident[{i}]"
        _check_keys(inc, _SECTION_KEYS["incident"], where, text)
        incidents.append(Direction(*_angles(inc, where, "azimuth", "elevation")))

    spot_ts = doc["spot"]
    if not isinstance(spot_ts, list):
        raise SpecError("spot must be an array of tables ([[spot]])", field="spot")
    spots = []
    for i, st in enumerate(spot_ts):
        where = f"spot[{i}]"
        kind = st.get("kind")
        if kind not in _SPOT_KEYS:
            raise SpecError("kind must be one of 'rect', 'circle', 'custom'", field=f"{where}.kind")
        _check_keys(st, _SPOT_KEYS[kind], where, text)
        mag = _number(st, "magnitude", where, default=1.0)
        if mag < 0:
            raise SpecError("magnitude must be non-negative", field=f"{where}.magnitude")
        if kind == "custom":
            table = Path(st["table_path"])
            if not table.is_absolute():
                table = Path(base_dir) / table
            spots.append(CustomSpot.from_csv(table, magnitude=mag))
            continue
        ca, ce = _angles(st, where, "center_azimuth", "center_elevation")
        tw = _number(st, "transition_width", where, default=0.0)
        if tw < 0:
            raise SpecError("transition_width must be non-negative", field=f"{where}.transition_width")
        if kind == "rect":
            wa = _number(st, "width_azimuth", where)
            we = _number(st, "width_elevation", where)
            if wa <= 0 or we <= 0:
                raise SpecError("rectangle widths must be positive", field=f"{where}.width_azimuth")
            spots.append(RectSpot(ca, ce, wa, we, mag, tw))
        else:
            dia = _number(st, "diameter", where)
            if dia <= 0:
                raise SpecError("diameter must be positive", field=f"{where}.diameter")
            spots.append(CircleSpot(ca, ce, dia, mag, tw))
    return DesignInputs(DesiredPattern(tuple(spots)), ris, grid, incidents)


def load_spec(path: str | Path) -> DesignInputs:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read spec file: {exc}") from None
    return parse_spec(text, base_dir=path.parent)


def reference_pattern() -> DesiredPattern:
    """Two-spot reference setup: a pi/3 x pi/6 rectangle at (pi/2, pi/4), level 1,
    and a disk of diameter pi/6 at (3pi/2, pi/4), level 0.5."""
    return DesiredPattern(
        (
            RectSpot(math.pi / 2, math.pi / 4, math.pi / 3, math.pi / 6, 1.0),
            CircleSpot(3 * math.pi / 2, math.pi / 4, math.pi / 6, 0.5),
        )
    )


def reference_inputs(n: int = 32, grid_factor: int = 4, incidents: Sequence[Direction] | None = None) -> DesignInputs:
    return DesignInputs(
        reference_pattern(),
        RisConfig(n, n, 0.5),
        FrequencyGridSpec(grid_factor * n, grid_factor * n),
        list(incidents) if incidents is not None else [Direction(0.0, 0.0)],
    )
