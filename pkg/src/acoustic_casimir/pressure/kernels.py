"""Vectorized integrands shared by the pressure, force and energy paths.

All kernels take the round-trip reflectivity ``ρ = r1 r2`` and the phase
``θ = 2 k L u`` and work with ``x = ρ e^{iθ}`` through the half-angle
identity ``1 - cos ψ = 2 sin²(ψ/2)`` (``ψ = θ + arg ρ``), which stays exact
for |ρ| = 1 and for vanishing θ.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..reflectivity import reflectivity_array
from ..types import CavityConfig

# 2 k_hi L below this switches the force kernel to its small-phase expansion.
SMALL_GAP_PHASE = 1e-6
# The expansion is only used where θ / |1 - ρ| stays below this ratio.
_TAYLOR_RATIO = 1e-4


def reflectivity_product(
    cavity: CavityConfig, sound_speed: float, k: ArrayLike
) -> NDArray[np.complex128]:
    """``r_a(c k) · r_b(c k)`` on an array of wavenumbers."""
    omega = np.asarray(k, dtype=float) * sound_speed
    return reflectivity_array(cavity.refl_a, omega) * reflectivity_array(cavity.refl_b, omega)


def _half_angle(rho: NDArray[np.complex128], theta: NDArray[np.float64]):
    m = np.abs(rho)
    s = np.sin(0.5 * (theta + np.angle(rho)))
    return m, s * s


def force_kernel(
    rho: NDArray[np.complex128], theta: NDArray[np.float64], *, small_gap: bool = False
) -> NDArray[np.float64]:
    """``Re[x / (1 - x)]``."""
    rho = np.asarray(rho, dtype=complex)
    theta = np.asarray(theta, dtype=float)
    if small_gap:
        one_minus = 1.0 - rho
        if np.all(np.abs(theta) <= _TAYLOR_RATIO * np.abs(one_minus)):
            return small_phase_force_kernel(rho, theta)

    m, s2 = _half_angle(rho, theta)
    num = m * ((1.0 - m) - 2.0 * s2)
    den = (1.0 - m) ** 2 + 4.0 * m * s2
    return num / den


def small_phase_force_kernel(
    rho: NDArray[np.complex128], theta: NDArray[np.float64]
) -> NDArray[np.float64]:
    """Second-order expansion of ``Re[x / (1 - x)]`` about θ = 0."""
    one_minus = 1.0 - rho
    h = (
        rho / one_minus
        + 1j * theta * rho / one_minus**2
        - theta**2 * rho * (1.0 + rho) / (2.0 * one_minus**3)
    )
    return h.real


def density_kernel(rho: NDArray[np.complex128], theta: NDArray[np.float64]) -> NDArray[np.float64]:
    """``π D = Re[(1 + x) / (1 - x)] = (1 - |x|²) / |1 - x|²``."""
    m, s2 = _half_angle(np.asarray(rho, dtype=complex), np.asarray(theta, dtype=float))
    return (1.0 - m * m) / ((1.0 - m) ** 2 + 4.0 * m * s2)


def log_kernel(rho: NDArray[np.complex128], theta: NDArray[np.float64]) -> NDArray[np.float64]:
    """``Im ln(1 - x)`` on the principal branch (|x| < 1)."""
    rho = np.asarray(rho, dtype=complex)
    theta = np.asarray(theta, dtype=float)
    m, s2 = _half_angle(rho, theta)
    psi = theta + np.angle(rho)
    return np.arctan2(-m * np.sin(psi), (1.0 - m) + 2.0 * m * s2)
