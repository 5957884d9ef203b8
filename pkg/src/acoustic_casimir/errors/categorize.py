from __future__ import annotations

from typing import Literal

ErrorCategory = Literal[
    "configuration",
    "table",
    "domain",
    "resonance",
    "method",
    "quadrature",
    "unknown",
]

_KNOWN: frozenset[str] = frozenset(
    {"configuration", "table", "domain", "resonance", "method", "quadrature"}
)


def categorize_error(category: str | None) -> ErrorCategory:
    if category is not None and category in _KNOWN:
        return category  # type: ignore[return-value]
    return "unknown"
