from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .categorize import ErrorCategory

ExitKind = Literal["ok", "invalid_input", "computation_failed"]


@dataclass(frozen=True, slots=True)
class ExitStatus:
    kind: ExitKind
    code: int


_KIND_CODE: dict[ExitKind, int] = {
    "ok": 0,
    "invalid_input": 2,
    "computation_failed": 3,
}

_CATEGORY_KIND: dict[ErrorCategory, ExitKind] = {
    "configuration": "invalid_input",
    "table": "invalid_input",
    "domain": "computation_failed",
    "resonance": "computation_failed",
    "method": "computation_failed",
    "quadrature": "computation_failed",
    "unknown": "computation_failed",
}


def get_exit_status(category: ErrorCategory | None = None) -> ExitStatus:
    """Map an error category to the CLI exit status; ``None`` means success."""
    if category is None:
        return ExitStatus(kind="ok", code=0)
    kind = _CATEGORY_KIND.get(category, "computation_failed")
    return ExitStatus(kind=kind, code=_KIND_CODE[kind])
