"""Domain value types shared by every computation.

Units are SI throughout. Positive forces and pressures are repulsive (plates
pushed apart), negative ones attractive.
"""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .reflectivity.models import ReflectivitySpec

ForceMethod = Literal["adaptive", "series", "mode-sum"]
QuadratureMethod = Literal["adaptive", "series"]


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


# ── Noise field ─────────────────────────────────────────────────────


class NoiseBand(FrozenModel):
    """Broadband noise of constant spectral intensity on ``[omega_lo, omega_hi]``.

    ``spectral_intensity`` is per unit angular frequency (W·s/m²), so its
    integral over the band is the total intensity in W/m².
    """

    omega_lo: float = Field(ge=0.0, allow_inf_nan=False)
    omega_hi: float = Field(gt=0.0, allow_inf_nan=False)
    spectral_intensity: float = Field(gt=0.0, allow_inf_nan=False)
    sound_speed: float = Field(gt=0.0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _check_order(self) -> NoiseBand:
        if not self.omega_lo < self.omega_hi:
            raise ValueError(
                f"omega_lo ({self.omega_lo!r}) must be below omega_hi ({self.omega_hi!r})"
            )
        return self

    @property
    def k_lo(self) -> float:
        return self.omega_lo / self.sound_speed

    @property
    def k_hi(self) -> float:
        return self.omega_hi / self.sound_speed

    @classmethod
    def from_wavenumbers(
        cls,
        k_lo: float,
        k_hi: float,
        *,
        spectral_intensity: float = 1.0,
        sound_speed: float = 343.0,
    ) -> NoiseBand:
        return cls(
            omega_lo=k_lo * sound_speed,
            omega_hi=k_hi * sound_speed,
            spectral_intensity=spectral_intensity,
            sound_speed=sound_speed,
        )


# ── Geometry ────────────────────────────────────────────────────────


class CavityConfig(FrozenModel):
    separation: float = Field(gt=0.0, allow_inf_nan=False)
    refl_a: ReflectivitySpec
    refl_b: ReflectivitySpec

    def with_separation(self, separation: float) -> CavityConfig:
        return CavityConfig(separation=separation, refl_a=self.refl_a, refl_b=self.refl_b)


class SpherePlaneConfig(FrozenModel):
    radius: float = Field(gt=0.0, allow_inf_nan=False)
    closest_gap: float = Field(gt=0.0, allow_inf_nan=False)
    refl_sphere: ReflectivitySpec
    refl_plane: ReflectivitySpec

    @property
    def proximity_valid(self) -> bool:
        return self.closest_gap / self.radius < 1.0

    @property
    def separation(self) -> float:
        return self.closest_gap

    def cavity(self) -> CavityConfig:
        """The parallel-plate cavity at the point of closest approach."""
        return CavityConfig(
            separation=self.closest_gap, refl_a=self.refl_sphere, refl_b=self.refl_plane
        )

    def with_separation(self, separation: float) -> SpherePlaneConfig:
        return SpherePlaneConfig(
            radius=self.radius,
            closest_gap=separation,
            refl_sphere=self.refl_sphere,
            refl_plane=self.refl_plane,
        )


# ── Numerics ────────────────────────────────────────────────────────


class QuadratureSettings(FrozenModel):
    rel_tol: float = Field(1e-10, gt=0.0, allow_inf_nan=False)
    abs_tol: float = Field(1e-15, gt=0.0, allow_inf_nan=False)
    max_subdivisions: int = Field(200_000, ge=1)
    min_panels_per_oscillation: int = Field(2, ge=1)
    series_max_terms: int = Field(20_000, ge=1)
    series_tail_tol: float = Field(1e-14, gt=0.0, allow_inf_nan=False)


# ── Results ─────────────────────────────────────────────────────────


class ForceResult(FrozenModel):
    """A pressure (Pa, plate-plate), energy (J/m²) or force (N, sphere-plane)."""

    value: float
    error_estimate: float = Field(ge=0.0)
    method: ForceMethod
    evaluations: int = Field(0, ge=0)
    warnings: tuple[str, ...] = ()

    @property
    def is_attractive(self) -> bool:
        return self.value < 0.0


class SweepRow(FrozenModel):
    separation: float
    force: float
    error_estimate: float
    method: ForceMethod
    warnings: tuple[str, ...] = ()

    @property
    def failed(self) -> bool:
        return math.isnan(self.force)


class SignChange(FrozenModel):
    lower: float
    upper: float
    crossover: float | None = None


class SweepResult(FrozenModel):
    rows: tuple[SweepRow, ...]
    sign_changes: tuple[SignChange, ...] = ()

    @model_validator(mode="after")
    def _check_increasing(self) -> SweepResult:
        for prev, row in zip(self.rows, self.rows[1:], strict=False):
            if not row.separation > prev.separation:
                raise ValueError("sweep rows must be strictly increasing in separation")
        return self

    @property
    def crossovers(self) -> tuple[float, ...]:
        return tuple(sc.crossover for sc in self.sign_changes if sc.crossover is not None)
