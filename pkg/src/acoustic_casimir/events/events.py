"""Dataclass events for sweep progress dispatching via pyventus."""

from __future__ import annotations

from dataclasses import dataclass

# ── Base ─────────────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class CasimirEvent:
    """Base for all sweep events."""

    label: str | None = None


# ── Point events ─────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class SweepPointEvent(CasimirEvent):
    """Base for events tied to one separation of a sweep."""

    index: int = 0
    separation: float = 0.0


@dataclass(frozen=True, slots=True)
class PointComputed(SweepPointEvent):
    value: float = 0.0
    error_estimate: float = 0.0
    method: str = ""
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class PointFailed(SweepPointEvent):
    reason: str = ""


# ── Sweep events ─────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class SignChangeDetected(CasimirEvent):
    lower: float = 0.0
    upper: float = 0.0
    crossover: float | None = None


@dataclass(frozen=True, slots=True)
class SweepCompleted(CasimirEvent):
    points: int = 0
    failures: int = 0
    sign_changes: int = 0
