from .energy import free_energy, sphere_plane_force
from .plates import (
    casimir_force,
    casimir_force_perfect,
    modulus_bound,
    pressure_inside,
    pressure_outside,
)
from .sweep import (
    energy_sweep,
    evaluate_point,
    force_sweep,
    locate_crossover,
    separation_grid,
    sign_changes,
)

__all__ = [
    "casimir_force",
    "casimir_force_perfect",
    "energy_sweep",
    "evaluate_point",
    "force_sweep",
    "free_energy",
    "locate_crossover",
    "modulus_bound",
    "pressure_inside",
    "pressure_outside",
    "separation_grid",
    "sign_changes",
    "sphere_plane_force",
]
