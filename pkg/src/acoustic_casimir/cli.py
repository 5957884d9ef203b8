"""Command-line front end.

    acoustic-casimir sweep --config run.cfg --out force.csv

Each subcommand reads one run-configuration file, writes one CSV and echoes
the effective configuration next to it as ``<out>.config``. Exit status is 0
on success, 2 for invalid input and 3 when a computation cannot be done.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
import tempfile
from collections.abc import Callable, Sequence
from pathlib import Path

import numpy as np

from .config import RunConfig, apply_overrides, build_run_config, load_config_file, render_config
from .errors import CasimirError, ConfigError
from .modes import dos_scan
from .pressure import (
    casimir_force,
    energy_sweep,
    force_sweep,
    free_energy,
    sphere_plane_force,
)
from .types import ForceResult, SweepResult, SweepRow
from .utils.numbers import format_float

logger = logging.getLogger(__name__)

COLUMNS: dict[str, tuple[str, ...]] = {
    "force": ("L_m", "force_Pa", "error_Pa", "method", "warnings"),
    "sweep": ("L_m", "force_Pa", "error_Pa", "method", "warnings"),
    "energy": ("L_m", "energy_J_per_m2", "error_J_per_m2", "method", "warnings"),
    "sphere-plane": ("L_m", "force_N", "error_N", "method", "warnings"),
    "dos": ("k_z_rad_per_m", "density"),
}

_HELP = {
    "force": "force per unit area at [cavity] separation",
    "sweep": "force per unit area over the [sweep] separations",
    "dos": "density of modes over the [dos] k_z grid",
    "energy": "free energy per unit area (swept when [sweep] is present)",
    "sphere-plane": "proximity sphere-plane force (swept when [sweep] is present)",
}


# ── CSV rendering ────────────────────────────────────────────────────


def _csv(
    header: Sequence[str], rows: Sequence[Sequence[str]], comments: Sequence[str] = ()
) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    for comment in comments:
        buf.write(f"# {comment}\n")
    return buf.getvalue()


def _row_cells(row: SweepRow) -> list[str]:
    return [
        format_float(row.separation),
        format_float(row.force),
        format_float(row.error_estimate),
        row.method,
        "; ".join(row.warnings),
    ]


def _single_row(separation: float, result: ForceResult) -> SweepRow:
    return SweepRow(
        separation=separation,
        force=result.value,
        error_estimate=result.error_estimate,
        method=result.method,
        warnings=result.warnings,
    )


def _sweep_csv(command: str, result: SweepResult) -> str:
    comments = []
    for change in result.sign_changes:
        comments.append(
            f"sign change between L_m={format_float(change.lower)} "
            f"and L_m={format_float(change.upper)}"
        )
        if change.crossover is not None:
            comments.append(f"crossover at L_m={format_float(change.crossover)}")
    return _csv(COLUMNS[command], [_row_cells(r) for r in result.rows], comments)


# ── Subcommands ──────────────────────────────────────────────────────


def _run_force(cfg: RunConfig) -> str:
    cavity = cfg.cavity_config()
    result = casimir_force(cfg.band, cavity, cfg.run.method, cfg.quadrature)
    return _sweep_csv("force", SweepResult(rows=(_single_row(cavity.separation, result),)))


def _run_sweep(cfg: RunConfig) -> str:
    grid = cfg.separations()
    assert cfg.sweep is not None
    result = force_sweep(
        cfg.band,
        cfg.cavity_config(grid[0]),
        grid,
        cfg.run.method,
        cfg.quadrature,
        workers=cfg.sweep.workers,
        locate_crossovers=cfg.sweep.locate_crossovers,
    )
    return _sweep_csv("sweep", result)


def _run_energy(cfg: RunConfig) -> str:
    if cfg.sweep is None:
        cavity = cfg.cavity_config()
        energy = free_energy(cfg.band, cavity, cfg.quadrature, cfg.run.method)
        result = SweepResult(rows=(_single_row(cavity.separation, energy),))
    else:
        grid = cfg.separations()
        result = energy_sweep(
            cfg.band,
            cfg.cavity_config(grid[0]),
            grid,
            cfg.run.method,
            cfg.quadrature,
            workers=cfg.sweep.workers,
        )
    return _sweep_csv("energy", result)


def _run_sphere_plane(cfg: RunConfig) -> str:
    if cfg.sweep is None:
        sphere = cfg.sphere_config()
        force = sphere_plane_force(cfg.band, sphere, cfg.quadrature, cfg.run.method)
        result = SweepResult(rows=(_single_row(sphere.closest_gap, force),))
    else:
        grid = cfg.separations()
        result = force_sweep(
            cfg.band,
            cfg.sphere_config(grid[0]),
            grid,
            cfg.run.method,
            cfg.quadrature,
            workers=cfg.sweep.workers,
            locate_crossovers=cfg.sweep.locate_crossovers,
        )
    return _sweep_csv("sphere-plane", result)


def _run_dos(cfg: RunConfig) -> str:
    if cfg.dos is None:
        raise ConfigError("missing [dos] section", field="dos")
    cavity = cfg.cavity_config()
    k_values = np.linspace(cfg.dos.k_min, cfg.dos.k_max, cfg.dos.points)
    points = dos_scan(
        k_values, cavity.separation, cavity.refl_a, cavity.refl_b, cfg.band.sound_speed
    )
    rows = [[format_float(p.k_z), format_float(p.density)] for p in points]
    return _csv(COLUMNS["dos"], rows)


COMMANDS: dict[str, Callable[[RunConfig], str]] = {
    "force": _run_force,
    "sweep": _run_sweep,
    "dos": _run_dos,
    "energy": _run_energy,
    "sphere-plane": _run_sphere_plane,
}


# ── Plumbing ─────────────────────────────────────────────────────────


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="Run-configuration file.")
    common.add_argument("--out", help="Output CSV (overrides run.out).")
    common.add_argument(
        "--method", choices=("adaptive", "series", "mode-sum"), help="Overrides run.method."
    )
    common.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="SECTION.KEY=VALUE",
        help="Replace one config entry; repeatable.",
    )
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug.")

    parser = argparse.ArgumentParser(
        prog="acoustic-casimir",
        description="Acoustic Casimir pressures and forces in band-limited noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=_HELP[name])
    return parser


def _configure_logging(verbosity: int) -> None:
    level = max(logging.WARNING - 10 * verbosity, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("acoustic_casimir").setLevel(level)


def _load(args: argparse.Namespace) -> tuple[RunConfig, Path]:
    parsed = load_config_file(args.config)
    overrides = list(args.override)
    if args.method:
        overrides.append(f"run.method={args.method}")
    if args.out:
        overrides.append(f"run.out={Path(args.out).resolve()}")
    apply_overrides(parsed, overrides)

    cfg = build_run_config(parsed)
    if cfg.run.out is None:
        raise ConfigError("no output path; pass --out or set out in [run]", field="run.out")
    return cfg, parsed.base_dir / cfg.run.out


def _write_atomic(path: Path, text: str) -> None:
    try:
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc.strerror}", field="run.out") from exc
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _report(exc: CasimirError, config_path: str) -> None:
    if exc.source is None and exc.category == "configuration":
        exc.source = config_path
    print(f"error: {exc.diagnostic()}", file=sys.stderr)
    extra = (exc.details or {}).get("errors", [])[1:]
    for item in extra:
        where = f"{exc.source}:{item['line']}: " if item["line"] is not None else ""
        print(f"error: {where}{item['field']}: {item['message']}", file=sys.stderr)


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else (0 if exc.code is None else 2)

    _configure_logging(args.verbose)
    try:
        cfg, out = _load(args)
        text = COMMANDS[args.command](cfg)
        _write_atomic(out, text)
        _write_atomic(out.with_name(out.name + ".config"), render_config(cfg))
    except CasimirError as exc:
        _report(exc, args.config)
        return exc.exit_status.code

    logger.info("wrote %s", out)
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
