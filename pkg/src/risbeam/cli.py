"""Command-line front end: ``risbeam design | evaluate | compare``.

Exit status: 0 on success, 2 for input/parse errors, 3 for numeric failures
(vanishing incident phase sums).
"""
from __future__ import annotations

import argparse
import logging
import math
import sys
import time
from pathlib import Path

from . import io
from .angles import FrequencyGridSpec
from .baseline import design_baseline
from .errors import SingularIncidenceError, SpecError
from .evaluation import cross_section, design_grid_magnitude, tse
from .geometry import RisConfig
from .pattern import load_spec, sample_to_grid
from .quantization import QuantizationConfig
from .synthesis import design

log = logging.getLogger("risbeam")

EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _outdir(path) -> Path:
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_design(args) -> int:
    inputs = load_spec(args.spec)
    if (args.b1 is None) != (args.b2 is None):
        raise SpecError("--b1 and --b2 must be given together", field="b1" if args.b1 is None else "b2")
    quant = QuantizationConfig(args.b1, args.b2) if args.b1 is not None else None
    v, report = design(inputs.pattern, inputs.ris, inputs.grid, inputs.incidents, path=args.path, quantization=quant)
    out = _outdir(args.out)
    io.write_coefficients(out / "coeffs.csv", v.values)
    (out / "metrics.txt").write_text(io.format_report(io.report_items(report)))
    log.info("normalized TSE %.6g (%s path, %.3g s)", report.normalized_tse, report.path, report.design_wall_time)
    return 0


def cmd_evaluate(args) -> int:
    inputs = load_spec(args.spec)
    v = io.read_coefficients(args.coeffs, inputs.ris)
    t0 = time.perf_counter()
    grid = sample_to_grid(inputs.pattern, inputs.grid, inputs.ris)
    H = design_grid_magnitude(v, inputs.incidents, inputs.ris, inputs.grid)
    err = tse(H, grid)
    energy = float((grid.values**2).sum())
    wall = time.perf_counter() - t0
    out = _outdir(args.out)
    io.write_pattern_dump(out / "pattern.csv", inputs.grid, inputs.ris, H, grid.values)
    if args.image:
        io.write_pgm(out / "pattern.pgm", H)
    if args.cross_section_elevation is not None:
        azi, mag = cross_section(v, inputs.incidents, inputs.ris, args.cross_section_elevation, args.n_azimuth)
        io.write_cross_section(out / "cross_section.csv", azi, mag)
    items = {
        "method": "evaluate",
        "tse": err,
        "normalized_tse": err / energy if energy > 0 else math.nan,
        "n_x": inputs.ris.n_x,
        "n_y": inputs.ris.n_y,
        "m_1": inputs.grid.m_1,
        "m_2": inputs.grid.m_2,
        "path": "evaluate",
        "wall_time_s": wall,
    }
    (out / "metrics.txt").write_text(io.format_report(items))
    return 0


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or any(v <= 0 for v in vals):
        raise argparse.ArgumentTypeError("values must be positive")
    return vals


def compare_rows(inputs, sizes, factors) -> list[dict]:
    rows = []
    for n in sizes:
        for f in factors:
            cfg = RisConfig(n, n, inputs.ris.spacing_over_lambda)
            spec = FrequencyGridSpec(f * n, f * n)
            for path in ("fast", "direct"):
                _, rep = design(inputs.pattern, cfg, spec, inputs.incidents, path=path)
                rows.append(_row(f"proposed ({path})", n, spec, rep))
            grid = sample_to_grid(inputs.pattern, spec, cfg)
            _, rep = design_baseline(grid, cfg, inputs.incidents)
            rows.append(_row(rep.method, n, spec, rep))
    return rows


def _row(method, n, spec, rep) -> dict:
    return {
        "method": method,
        "N": f"{n}x{n}",
        "M": f"{spec.m_1}x{spec.m_2}",
        "tse": rep.tse,
        "normalized_tse": rep.normalized_tse,
        "wall_time_s": rep.design_wall_time,
    }


def format_table(rows: list[dict]) -> str:
    cols = ["method", "N", "M", "tse", "normalized_tse", "wall_time_s"]
    cells = [cols] + [[r[c] if isinstance(r[c], str) else format(r[c], ".17g") for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells) + "\n"


def cmd_compare(args) -> int:
    inputs = load_spec(args.spec)
    rows = compare_rows(inputs, args.sizes, args.grid_factors)
    table = format_table(rows)
    out = _outdir(args.out)
    (out / "compare.txt").write_text(table)
    sys.stdout.write(table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="risbeam", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("design", help="synthesise reflection coefficients from a spec file")
    d.add_argument("--spec", required=True)
    d.add_argument("--out", required=True, help="output directory (coeffs.csv, metrics.txt)")
    d.add_argument("--path", choices=("fast", "direct"), default="fast")
    d.add_argument("--b1", type=int, help="amplitude quantisation bits")
    d.add_argument("--b2", type=int, help="phase quantisation bits")
    d.set_defaults(func=cmd_design)

    e = sub.add_parser("evaluate", help="evaluate a coefficient file against a spec")
    e.add_argument("--coeffs", required=True)
    e.add_argument("--spec", required=True)
    e.add_argument("--out", required=True, help="output directory")
    e.add_argument("--cross-section-elevation", type=float, default=None, metavar="RADIANS")
    e.add_argument("--n-azimuth", type=int, default=1024)
    e.add_argument("--image", action="store_true", help="also write pattern.pgm")
    e.set_defaults(func=cmd_evaluate)

    c = sub.add_parser("compare", help="proposed vs surrogate baseline across sizes")
    c.add_argument("--spec", required=True)
    c.add_argument("--out", required=True, help="output directory (compare.txt)")
    c.add_argument("--sizes", type=_int_list, default=[16, 32, 64])
    c.add_argument("--grid-factors", type=_int_list, default=[2, 4])
    c.set_defaults(func=cmd_compare)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"risbeam: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularIncidenceError as exc:
        print(f"risbeam: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
