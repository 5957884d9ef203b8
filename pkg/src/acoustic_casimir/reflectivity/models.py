"""Pydantic models for the plate reflectivity variants."""

from __future__ import annotations

import cmath
import math
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import PassivityViolation, TableFormatError
from ..utils.numbers import format_complex, parse_complex

# Slack allowed on |r| <= 1 for values that went through arithmetic.
PASSIVITY_SLACK = 1e-12


def _coerce_complex(value: Any) -> Any:
    if isinstance(value, str):
        return parse_complex(value)
    if isinstance(value, int | float):
        return complex(value)
    return value


# ── Base ─────────────────────────────────────────────────────────────


class BaseReflectivity(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def describe(self) -> str:
        """Render the spec in the run-config reflectivity grammar."""
        raise NotImplementedError


# ── Built-in models ──────────────────────────────────────────────────


class ConstantReflectivity(BaseReflectivity):
    kind: Literal["constant"] = "constant"
    r: complex

    @field_validator("r", mode="before")
    @classmethod
    def _parse_r(cls, value: Any) -> Any:
        return _coerce_complex(value)

    @model_validator(mode="after")
    def _check_passive(self) -> ConstantReflectivity:
        if not cmath.isfinite(self.r):
            raise PassivityViolation(f"reflectivity {self.r!r} is not finite", field="r")
        if abs(self.r) > 1.0 + PASSIVITY_SLACK:
            raise PassivityViolation(
                f"|r| = {abs(self.r)!r} exceeds 1 for constant reflectivity {self.r!r}",
                field="r",
            )
        return self

    def describe(self) -> str:
        return f"constant:{format_complex(self.r)}"


class PerfectReflector(BaseReflectivity):
    """Rigid wall, r ≡ 1."""

    kind: Literal["perfect"] = "perfect"

    def describe(self) -> str:
        return "perfect"


class PressureRelease(BaseReflectivity):
    """Pressure-release surface, r ≡ -1."""

    kind: Literal["pressure-release"] = "pressure-release"

    def describe(self) -> str:
        return "pressure-release"


# ── Tabulated ────────────────────────────────────────────────────────


class TableReflectivity(BaseReflectivity):
    """Reflectivity sampled at strictly increasing angular frequencies.

    ``source`` records where the samples came from (a file path) and is used
    when the spec is rendered back into a run configuration. ``rows`` holds
    the 1-based file line of each sample for diagnostics.
    """

    kind: Literal["table"] = "table"
    omega: tuple[float, ...]
    r: tuple[complex, ...]
    source: str | None = None
    rows: tuple[int, ...] | None = None

    @field_validator("r", mode="before")
    @classmethod
    def _parse_r(cls, value: Any) -> Any:
        if isinstance(value, list | tuple):
            return tuple(_coerce_complex(v) for v in value)
        return value

    @model_validator(mode="after")
    def _check_samples(self) -> TableReflectivity:
        if len(self.omega) != len(self.r):
            raise TableFormatError(
                f"{len(self.omega)} frequencies but {len(self.r)} reflectivities",
                source=self.source,
            )
        if len(self.omega) < 2:
            raise TableFormatError(
                "a reflectivity table needs at least 2 samples", source=self.source
            )

        for i, (omega, r) in enumerate(zip(self.omega, self.r, strict=True)):
            line = self.rows[i] if self.rows else None
            where = f"row {line}" if line is not None else f"sample {i}"
            if not (math.isfinite(omega) and cmath.isfinite(r)):
                raise TableFormatError(
                    f"{where}: non-finite sample omega = {omega!r}, r = {r!r}",
                    source=self.source,
                    line=line,
                )
            if omega < 0.0:
                raise TableFormatError(
                    f"negative angular frequency {omega!r}", source=self.source, line=line
                )
            if i and omega <= self.omega[i - 1]:
                raise TableFormatError(
                    f"omega {omega!r} is not strictly greater than {self.omega[i - 1]!r}",
                    source=self.source,
                    line=line,
                )
            if abs(r) > 1.0 + PASSIVITY_SLACK:
                raise PassivityViolation(
                    f"{where}: |r| = {abs(r)!r} exceeds 1 at omega = {omega!r}",
                    source=self.source,
                    line=line,
                    field="r",
                )
        return self

    @property
    def omega_min(self) -> float:
        return self.omega[0]

    @property
    def omega_max(self) -> float:
        return self.omega[-1]

    def describe(self) -> str:
        if self.source is None:
            raise ValueError("an in-memory table has no file form")
        return f"table:{self.source}"


ReflectivitySpec = Annotated[
    ConstantReflectivity | PerfectReflector | PressureRelease | TableReflectivity,
    Field(discriminator="kind"),
]
