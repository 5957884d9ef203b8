"""Acoustic Casimir pressures between plates of arbitrary reflectivity."""

from .errors import (
    CasimirError,
    ConfigError,
    MethodNotApplicable,
    NonFiniteIntegrand,
    NotPassive,
    NotStrictlyPassive,
    OutOfTableRange,
    PassivityViolation,
    ResonancePole,
    SeriesNotApplicable,
    TableFormatError,
)
from .modes import (
    ModeDensityPoint,
    dos_scan,
    greens_function,
    mode_density_closed,
    mode_density_from_green,
    wronskian,
)
from .pressure import (
    casimir_force,
    casimir_force_perfect,
    energy_sweep,
    force_sweep,
    free_energy,
    locate_crossover,
    pressure_inside,
    pressure_outside,
    separation_grid,
    sphere_plane_force,
)
from .quadrature import IntegrationReport, adaptive_integrate, trig_moments
from .reflectivity import (
    ConstantReflectivity,
    PerfectReflector,
    PressureRelease,
    TableReflectivity,
    eval_reflectivity,
    load_reflectivity_table,
    parse_reflectivity_table,
)
from .types import (
    CavityConfig,
    ForceResult,
    NoiseBand,
    QuadratureSettings,
    SignChange,
    SpherePlaneConfig,
    SweepResult,
    SweepRow,
)

__version__ = "0.1.0"

__all__ = [
    # Types
    "NoiseBand",
    "CavityConfig",
    "SpherePlaneConfig",
    "QuadratureSettings",
    "ForceResult",
    "SweepRow",
    "SweepResult",
    "SignChange",
    # Reflectivity
    "ConstantReflectivity",
    "PerfectReflector",
    "PressureRelease",
    "TableReflectivity",
    "eval_reflectivity",
    "load_reflectivity_table",
    "parse_reflectivity_table",
    # Modes
    "ModeDensityPoint",
    "dos_scan",
    "greens_function",
    "mode_density_closed",
    "mode_density_from_green",
    "wronskian",
    # Quadrature
    "IntegrationReport",
    "adaptive_integrate",
    "trig_moments",
    # Pressure
    "casimir_force",
    "casimir_force_perfect",
    "energy_sweep",
    "force_sweep",
    "free_energy",
    "locate_crossover",
    "pressure_inside",
    "pressure_outside",
    "separation_grid",
    "sphere_plane_force",
    # Errors
    "CasimirError",
    "ConfigError",
    "MethodNotApplicable",
    "NonFiniteIntegrand",
    "NotPassive",
    "NotStrictlyPassive",
    "OutOfTableRange",
    "PassivityViolation",
    "ResonancePole",
    "SeriesNotApplicable",
    "TableFormatError",
]
