"""Validated run configuration built from a parsed config file."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Literal

from pydantic import Field, ValidationError, model_validator

from ..errors import CasimirError, ConfigError
from ..pressure import separation_grid
from ..reflectivity import (
    BaseReflectivity,
    ConstantReflectivity,
    PerfectReflector,
    PressureRelease,
    ReflectivitySpec,
    load_reflectivity_table,
)
from ..types import (
    CavityConfig,
    ForceMethod,
    FrozenModel,
    NoiseBand,
    QuadratureSettings,
    SpherePlaneConfig,
)
from ..utils.numbers import format_float, parse_complex
from .parse import SECTIONS, ParsedConfig

# ── Sections ─────────────────────────────────────────────────────────


class CavitySection(FrozenModel):
    separation: float | None = Field(None, gt=0.0, allow_inf_nan=False)
    refl_a: ReflectivitySpec
    refl_b: ReflectivitySpec


class SphereSection(FrozenModel):
    radius: float = Field(gt=0.0, allow_inf_nan=False)


class SweepSection(FrozenModel):
    L_min: float = Field(gt=0.0, allow_inf_nan=False)
    L_max: float = Field(gt=0.0, allow_inf_nan=False)
    points: int = Field(50, ge=2)
    spacing: Literal["linear", "log"] = "linear"
    locate_crossovers: bool = False
    workers: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _check_range(self) -> SweepSection:
        if not self.L_min < self.L_max:
            raise ValueError(f"L_min ({self.L_min!r}) must be below L_max ({self.L_max!r})")
        return self


class DosSection(FrozenModel):
    k_min: float = Field(gt=0.0, allow_inf_nan=False)
    k_max: float = Field(gt=0.0, allow_inf_nan=False)
    points: int = Field(200, ge=2)

    @model_validator(mode="after")
    def _check_range(self) -> DosSection:
        if not self.k_min < self.k_max:
            raise ValueError(f"k_min ({self.k_min!r}) must be below k_max ({self.k_max!r})")
        return self


class RunSection(FrozenModel):
    method: ForceMethod = "adaptive"
    out: str | None = None


class RunConfig(FrozenModel):
    band: NoiseBand
    cavity: CavitySection
    sphere: SphereSection | None = None
    sweep: SweepSection | None = None
    dos: DosSection | None = None
    quadrature: QuadratureSettings = Field(default_factory=QuadratureSettings)
    run: RunSection = Field(default_factory=RunSection)

    # ── helpers ──────────────────────────────────────────────────

    def _separation(self, separation: float | None) -> float:
        value = separation if separation is not None else self.cavity.separation
        if value is None:
            raise ConfigError("missing separation", field="cavity.separation")
        return value

    def cavity_config(self, separation: float | None = None) -> CavityConfig:
        """The plate cavity at ``separation``, defaulting to ``[cavity] separation``."""
        return CavityConfig(
            separation=self._separation(separation),
            refl_a=self.cavity.refl_a,
            refl_b=self.cavity.refl_b,
        )

    def sphere_config(self, separation: float | None = None) -> SpherePlaneConfig:
        if self.sphere is None:
            raise ConfigError("missing [sphere] section", field="sphere")
        return SpherePlaneConfig(
            radius=self.sphere.radius,
            closest_gap=self._separation(separation),
            refl_sphere=self.cavity.refl_a,
            refl_plane=self.cavity.refl_b,
        )

    def separations(self) -> list[float]:
        if self.sweep is None:
            raise ConfigError("missing [sweep] section", field="sweep")
        return separation_grid(
            self.sweep.L_min, self.sweep.L_max, self.sweep.points, self.sweep.spacing
        )


# ── Reflectivity grammar ─────────────────────────────────────────────


def parse_reflectivity_spec(text: str, base_dir: Path | None = None) -> BaseReflectivity:
    """``perfect`` | ``pressure-release`` | ``constant:<complex>`` | ``table:<path>``."""
    kind, _, arg = text.strip().partition(":")
    match kind.strip().lower():
        case "perfect" if not arg:
            return PerfectReflector()
        case "pressure-release" if not arg:
            return PressureRelease()
        case "constant":
            try:
                value = parse_complex(arg)
            except ValueError as exc:
                raise ConfigError(f"invalid constant reflectivity {arg!r}: {exc}") from exc
            return ConstantReflectivity(r=value)
        case "table" if arg.strip():
            path = Path(arg.strip())
            if not path.is_absolute() and base_dir is not None:
                path = base_dir / path
            return load_reflectivity_table(path)
        case _:
            raise ConfigError(
                f"invalid reflectivity {text!r}; expected perfect, pressure-release, "
                "constant:<complex> or table:<path>"
            )


def _cavity_reflectivity(parsed: ParsedConfig, key: str) -> BaseReflectivity:
    entry = parsed.sections["cavity"][key]
    try:
        return parse_reflectivity_spec(entry.value, parsed.base_dir)
    except CasimirError as exc:
        # table errors keep their own file and row
        if exc.source is None:
            exc.source = parsed.source
            exc.line = entry.line
            exc.field = f"cavity.{key}"
        raise


# ── Build / render ───────────────────────────────────────────────────


def _config_error(exc: ValidationError, parsed: ParsedConfig) -> ConfigError:
    items = []
    for err in exc.errors(include_url=False):
        loc = [str(part) for part in err["loc"]]
        section = loc[0] if loc else ""
        key = loc[1] if len(loc) > 1 else None
        items.append(
            {
                "field": ".".join(loc) or None,
                "line": parsed.line_of(section, key),
                "message": err["msg"],
            }
        )

    first = items[0]
    return ConfigError(
        first["message"],
        field=first["field"],
        line=first["line"],
        source=parsed.source,
        details={"errors": items},
    )


def build_run_config(parsed: ParsedConfig) -> RunConfig:
    """Validate a parsed file into a ``RunConfig``.

    Raises:
        ConfigError: Missing, unknown or invalid entries; carries the line.
        PassivityViolation, TableFormatError: Bad reflectivity input.
    """
    data: dict[str, Any] = parsed.as_mapping()
    cavity = data.get("cavity")
    if cavity is not None:
        for key in ("refl_a", "refl_b"):
            if key in cavity:
                cavity[key] = _cavity_reflectivity(parsed, key)

    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise _config_error(exc, parsed) from None


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, BaseReflectivity):
        return value.describe()
    return str(value)


def render_config(cfg: RunConfig) -> str:
    """Render ``cfg`` back to the config grammar, omitting ``run.out``.

    Table paths are absolute, so the text can be re-run from anywhere.
    """
    lines = ["# effective configuration"]
    for name in SECTIONS:
        section = getattr(cfg, name)
        if section is None:
            continue
        lines += ["", f"[{name}]"]
        for key in type(section).model_fields:
            value = getattr(section, key)
            if value is None or (name, key) == ("run", "out"):
                continue
            lines.append(f"{key} = {_format_value(value)}")
    return "\n".join(lines) + "\n"
