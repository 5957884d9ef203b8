"""Separation sweeps with sign-change detection."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, Literal

import numpy as np
from scipy.optimize import brentq

from ..errors import CasimirError, MethodNotApplicable
from ..events import dispatch_sweep
from ..types import (
    CavityConfig,
    ForceMethod,
    ForceResult,
    NoiseBand,
    QuadratureSettings,
    SignChange,
    SpherePlaneConfig,
    SweepResult,
    SweepRow,
)
from .energy import free_energy, sphere_plane_force
from .plates import casimir_force

if TYPE_CHECKING:
    from pyventus.events import EventEmitter

logger = logging.getLogger(__name__)

Spacing = Literal["linear", "log"]
Template = CavityConfig | SpherePlaneConfig
Evaluator = Callable[[float], ForceResult]


def separation_grid(
    L_min: float, L_max: float, points: int, spacing: Spacing = "linear"
) -> list[float]:
    """``points`` separations from ``L_min`` to ``L_max`` inclusive."""
    if not 0.0 < L_min < L_max:
        raise ValueError(f"need 0 < L_min < L_max, got {L_min!r}, {L_max!r}")
    if points < 2:
        raise ValueError(f"a sweep needs at least 2 points, got {points}")

    match spacing:
        case "linear":
            grid = np.linspace(L_min, L_max, points)
        case "log":
            grid = np.geomspace(L_min, L_max, points)
        case _:
            raise ValueError(f"unknown spacing {spacing!r}")
    return [float(v) for v in grid]


def evaluate_point(
    band: NoiseBand,
    template: Template,
    separation: float,
    method: ForceMethod = "adaptive",
    settings: QuadratureSettings | None = None,
) -> ForceResult:
    """Force at one separation: Pa for a cavity template, N for a sphere–plane one."""
    geometry = template.with_separation(separation)
    if isinstance(geometry, SpherePlaneConfig):
        return sphere_plane_force(band, geometry, settings, method)
    return casimir_force(band, geometry, method, settings)


# ── rows ─────────────────────────────────────────────────────────────


def _row(evaluate: Evaluator, separation: float, method: ForceMethod) -> SweepRow:
    try:
        result = evaluate(separation)
    except CasimirError as exc:
        logger.warning("sweep point L=%r failed: %s", separation, exc)
        return SweepRow(
            separation=separation,
            force=math.nan,
            error_estimate=math.nan,
            method=method,
            warnings=(f"{type(exc).__name__}: {exc}",),
        )
    return SweepRow(
        separation=separation,
        force=result.value,
        error_estimate=result.error_estimate,
        method=result.method,
        warnings=result.warnings,
    )


def _check_grid(L_values: Sequence[float], workers: int) -> list[float]:
    values = [float(v) for v in L_values]
    increasing = all(b > a for a, b in zip(values, values[1:], strict=False))
    if not values or not values[0] > 0.0 or not increasing:
        raise ValueError("L_values must be positive and strictly increasing")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return values


def _run_rows(
    evaluate: Evaluator, values: list[float], method: ForceMethod, workers: int
) -> list[SweepRow]:
    if workers == 1:
        return [_row(evaluate, L, method) for L in values]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda L: _row(evaluate, L, method), values))


def sign_changes(rows: Sequence[SweepRow]) -> list[SignChange]:
    """Intervals between consecutive valid, nonzero rows whose forces differ in sign."""
    valid = [row for row in rows if not row.failed and row.force != 0.0]
    return [
        SignChange(lower=a.separation, upper=b.separation)
        for a, b in zip(valid, valid[1:], strict=False)
        if (a.force < 0.0) != (b.force < 0.0)
    ]


# ── sweeps ───────────────────────────────────────────────────────────


def locate_crossover(
    band: NoiseBand,
    template: Template,
    change: SignChange,
    method: ForceMethod = "adaptive",
    settings: QuadratureSettings | None = None,
) -> SignChange:
    """Refine the separation inside ``change`` where the force vanishes.

    Returns ``change`` unchanged when the root cannot be bracketed or a
    force evaluation fails.
    """

    def force(L: float) -> float:
        return evaluate_point(band, template, L, method, settings).value

    try:
        root = brentq(force, change.lower, change.upper, xtol=1e-12 * change.upper, rtol=1e-12)
    except (CasimirError, ValueError, RuntimeError) as exc:
        logger.warning("no crossover refined in [%r, %r]: %s", change.lower, change.upper, exc)
        return change
    logger.debug("crossover at L=%r in [%r, %r]", root, change.lower, change.upper)
    return SignChange(lower=change.lower, upper=change.upper, crossover=float(root))


def force_sweep(
    band: NoiseBand,
    template: Template,
    L_values: Sequence[float],
    method: ForceMethod = "adaptive",
    settings: QuadratureSettings | None = None,
    *,
    workers: int = 1,
    locate_crossovers: bool = False,
    emitter: EventEmitter | None = None,
    label: str | None = None,
) -> SweepResult:
    """Evaluate the force at every separation in ``L_values``.

    Points are independent; a point that raises a ``CasimirError`` becomes a
    NaN row carrying the error as a warning. Rows keep the input order for
    any ``workers`` count. When ``emitter`` is given the finished sweep is
    also published on it through ``dispatch_sweep``, tagged with ``label``.

    Raises:
        ValueError: ``L_values`` not strictly increasing and positive, or
            ``workers < 1``.
        MethodNotApplicable: ``method="mode-sum"`` with a sphere–plane template.
    """
    values = _check_grid(L_values, workers)
    if isinstance(template, SpherePlaneConfig) and method == "mode-sum":
        raise MethodNotApplicable("the sphere-plane force has no mode-sum path")

    rows = _run_rows(
        lambda L: evaluate_point(band, template, L, method, settings), values, method, workers
    )

    changes = sign_changes(rows)
    if locate_crossovers:
        changes = [locate_crossover(band, template, c, method, settings) for c in changes]

    failures = sum(row.failed for row in rows)
    logger.debug(
        "sweep of %d points: %d failed, %d sign changes", len(rows), failures, len(changes)
    )
    result = SweepResult(rows=tuple(rows), sign_changes=tuple(changes))
    if emitter is not None:
        dispatch_sweep(result, emitter, label=label)
    return result


def energy_sweep(
    band: NoiseBand,
    template: CavityConfig,
    L_values: Sequence[float],
    method: ForceMethod = "adaptive",
    settings: QuadratureSettings | None = None,
    *,
    workers: int = 1,
    emitter: EventEmitter | None = None,
    label: str | None = None,
) -> SweepResult:
    """Free energy per unit area at every separation; the row ``force`` holds J/m²."""
    values = _check_grid(L_values, workers)
    if method == "mode-sum":
        raise MethodNotApplicable("the free energy has no mode-sum path")

    rows = _run_rows(
        lambda L: free_energy(band, template.with_separation(L), settings, method),
        values,
        method,
        workers,
    )
    result = SweepResult(rows=tuple(rows))
    if emitter is not None:
        dispatch_sweep(result, emitter, label=label)
    return result
