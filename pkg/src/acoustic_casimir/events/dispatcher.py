"""Dispatch sweep results as typed pyventus events."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ..types import SweepResult, SweepRow
from .events import CasimirEvent, PointComputed, PointFailed, SignChangeDetected, SweepCompleted

if TYPE_CHECKING:
    from pyventus.events import EventEmitter


def _map_row(index: int, row: SweepRow, label: str | None) -> CasimirEvent:
    if row.failed:
        return PointFailed(
            label=label,
            index=index,
            separation=row.separation,
            reason="; ".join(row.warnings),
        )
    return PointComputed(
        label=label,
        index=index,
        separation=row.separation,
        value=row.force,
        error_estimate=row.error_estimate,
        method=row.method,
        warnings=row.warnings,
    )


def dispatch_sweep(result: SweepResult, emitter: EventEmitter, *, label: str | None = None) -> None:
    """Emit one event per row, one per sign change, then ``SweepCompleted``.

    Args:
        result: The sweep returned by ``force_sweep()``.
        emitter: A pyventus ``EventEmitter`` instance.
        label: Copied onto every event, e.g. the config file name.
    """
    for index, row in enumerate(result.rows):
        emitter.emit(_map_row(index, row, label))

    for change in result.sign_changes:
        emitter.emit(
            SignChangeDetected(
                label=label, lower=change.lower, upper=change.upper, crossover=change.crossover
            )
        )

    emitter.emit(
        SweepCompleted(
            label=label,
            points=len(result.rows),
            failures=sum(row.failed for row in result.rows),
            sign_changes=len(result.sign_changes),
        )
    )
