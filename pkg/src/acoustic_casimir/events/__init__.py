from .dispatcher import dispatch_sweep
from .events import (
    CasimirEvent,
    PointComputed,
    PointFailed,
    SignChangeDetected,
    SweepCompleted,
    SweepPointEvent,
)

__all__ = [
    "CasimirEvent",
    "PointComputed",
    "PointFailed",
    "SignChangeDetected",
    "SweepCompleted",
    "SweepPointEvent",
    "dispatch_sweep",
]
