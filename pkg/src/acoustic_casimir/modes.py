"""Density of modes between two plates.

Two independent constructions are provided: the closed form
``D(k_z) = (1/π) Re[(1 + x) / (1 - x)]`` with ``x = r1 r2 exp(2 i k_z L)``,
and the literal construction from the one-dimensional Green's function

    G(z, z') = φ<(min(z, z')) φ>(max(z, z')) / W
    φ<(z) = exp(-i k_z z) + r1 exp(i k_z z)
    φ>(z) = exp(i k_z (z - L)) + r2 exp(-i k_z (z - L))

whose stress-weighted diagonal ``k_z² G(z, z) + ∂z ∂z' G(z, z')|z'=z`` gives
the same density after the normalization ``1/(2 k_z²)`` and the ``k_z² → k_z``
change of variable (factor ``2 k_z``).
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .errors import ResonancePole
from .reflectivity import BaseReflectivity, eval_reflectivity

POLE_THRESHOLD = 1e-12


@dataclass(frozen=True, slots=True)
class ModeDensityPoint:
    k_z: float
    density: float


# ── basis solutions ─────────────────────────────────────────────────


def _phi_lower(z: float, k_z: float, r1: complex) -> complex:
    return cmath.exp(-1j * k_z * z) + r1 * cmath.exp(1j * k_z * z)


def _dphi_lower(z: float, k_z: float, r1: complex) -> complex:
    return -1j * k_z * (cmath.exp(-1j * k_z * z) - r1 * cmath.exp(1j * k_z * z))


def _phi_upper(z: float, k_z: float, L: float, r2: complex) -> complex:
    return cmath.exp(1j * k_z * (z - L)) + r2 * cmath.exp(-1j * k_z * (z - L))


def _dphi_upper(z: float, k_z: float, L: float, r2: complex) -> complex:
    return 1j * k_z * (cmath.exp(1j * k_z * (z - L)) - r2 * cmath.exp(-1j * k_z * (z - L)))


def _check_pole(k_z: float, L: float, r1: complex, r2: complex) -> None:
    if not k_z > 0.0:
        raise ValueError(f"k_z must be positive, got {k_z!r}")
    if not L > 0.0:
        raise ValueError(f"L must be positive, got {L!r}")
    denominator = 1.0 - r1 * r2 * cmath.exp(2j * k_z * L)
    if abs(denominator) < POLE_THRESHOLD:
        raise ResonancePole(
            f"resonance at k_z = {k_z!r} (|1 - r1 r2 exp(2 i k_z L)| = {abs(denominator):.3e})",
            details={"k_z": k_z, "L": L},
        )


def _check_position(z: float, L: float) -> None:
    if not 0.0 <= z <= L:
        raise ValueError(f"position {z!r} outside the cavity [0, {L!r}]")


# ── Green's function ────────────────────────────────────────────────


def wronskian(z: float, k_z: float, L: float, r1: complex, r2: complex) -> complex:
    """``W = φ< ∂φ> - ∂φ< φ>`` evaluated at ``z`` (independent of ``z``)."""
    return _phi_lower(z, k_z, r1) * _dphi_upper(z, k_z, L, r2) - _dphi_lower(
        z, k_z, r1
    ) * _phi_upper(z, k_z, L, r2)


def greens_function(
    z: float, zp: float, k_z: float, L: float, r1: complex, r2: complex
) -> complex:
    """One-dimensional Helmholtz Green's function between the plates.

    Raises:
        ResonancePole: ``|1 - r1 r2 exp(2 i k_z L)|`` is below 1e-12.
    """
    _check_position(z, L)
    _check_position(zp, L)
    _check_pole(k_z, L, r1, r2)

    lower, upper = min(z, zp), max(z, zp)
    w = wronskian(lower, k_z, L, r1, r2)
    return _phi_lower(lower, k_z, r1) * _phi_upper(upper, k_z, L, r2) / w


def _stress_diagonal(z: float, k_z: float, L: float, r1: complex, r2: complex) -> complex:
    """``k_z² G(z, z) + ∂z ∂z' G(z, z')`` at ``z' = z``."""
    w = wronskian(z, k_z, L, r1, r2)
    value = _phi_lower(z, k_z, r1) * _phi_upper(z, k_z, L, r2)
    mixed = _dphi_lower(z, k_z, r1) * _dphi_upper(z, k_z, L, r2)
    return (k_z * k_z * value + mixed) / w


# ── densities ───────────────────────────────────────────────────────


def mode_density_closed(k_z: float, L: float, r1: complex, r2: complex) -> float:
    """Modes per unit ``k_z``: ``(1/π) Re[(1 + x)/(1 - x)]``."""
    _check_pole(k_z, L, r1, r2)
    x = r1 * r2 * cmath.exp(2j * k_z * L)
    return ((1.0 + x) / (1.0 - x)).real / math.pi


def mode_density_from_green(
    z: float, k_z: float, L: float, r1: complex, r2: complex
) -> float:
    """Density of modes built from the Green's function at an interior point."""
    if not 0.0 < z < L:
        raise ValueError(f"position {z!r} must be strictly inside (0, {L!r})")
    _check_pole(k_z, L, r1, r2)

    density_k2 = -_stress_diagonal(z, k_z, L, r1, r2).imag / math.pi / (2.0 * k_z * k_z)
    return 2.0 * k_z * density_k2


def dos_scan(
    k_values: Iterable[float],
    L: float,
    refl_a: BaseReflectivity,
    refl_b: BaseReflectivity,
    sound_speed: float,
) -> list[ModeDensityPoint]:
    """Closed-form density on a ``k_z`` grid, reflectivities taken at ω = c·k_z."""
    points = []
    for k_z in np.asarray(list(k_values), dtype=float):
        omega = float(k_z) * sound_speed
        r1 = eval_reflectivity(refl_a, omega)
        r2 = eval_reflectivity(refl_b, omega)
        density = mode_density_closed(float(k_z), L, r1, r2)
        points.append(ModeDensityPoint(k_z=float(k_z), density=density))
    return points
