from __future__ import annotations

from typing import Any, ClassVar

from .categorize import ErrorCategory, categorize_error
from .exit_status import ExitStatus, get_exit_status


class CasimirError(Exception):
    __slots__ = ("category", "details", "field", "line", "source")

    default_category: ClassVar[ErrorCategory] = "unknown"

    def __init__(
        self,
        message: str,
        *,
        category: str | None = None,
        field: str | None = None,
        line: int | None = None,
        source: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.category: ErrorCategory = categorize_error(category or self.default_category)
        self.field = field
        self.line = line
        self.source = source
        self.details = details

    # ── helpers ──────────────────────────────────────────────────

    @property
    def exit_status(self) -> ExitStatus:
        return get_exit_status(self.category)

    def is_input_error(self) -> bool:
        return self.exit_status.kind == "invalid_input"

    def diagnostic(self) -> str:
        """One-line ``source:line: field: message`` form used by the CLI."""
        prefix = ""
        if self.source:
            prefix = f"{self.source}:{self.line}: " if self.line is not None else f"{self.source}: "
        elif self.line is not None:
            prefix = f"line {self.line}: "
        if self.field:
            prefix += f"{self.field}: "
        return f"{prefix}{self}"

    # ── serialization ────────────────────────────────────────────

    def to_dict(self) -> dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": str(self),
            "category": self.category,
            "field": self.field,
            "line": self.line,
            "source": self.source,
            "exit_code": self.exit_status.code,
            "details": self.details,
        }


# ── input errors ─────────────────────────────────────────────────────


class ConfigError(CasimirError):
    default_category = "configuration"


class PassivityViolation(CasimirError):
    default_category = "table"


class TableFormatError(CasimirError):
    default_category = "table"


# ── computation errors ───────────────────────────────────────────────


class OutOfTableRange(CasimirError):
    default_category = "domain"


class NotPassive(CasimirError):
    default_category = "domain"


class NotStrictlyPassive(NotPassive):
    pass


class ResonancePole(CasimirError):
    default_category = "resonance"


class MethodNotApplicable(CasimirError):
    default_category = "method"


class SeriesNotApplicable(MethodNotApplicable):
    pass


class NonFiniteIntegrand(CasimirError):
    default_category = "quadrature"
