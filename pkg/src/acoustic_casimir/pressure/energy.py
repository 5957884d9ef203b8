"""Free energy per unit area and the proximity sphere–plane force."""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.typing import NDArray

from ..errors import MethodNotApplicable, SeriesNotApplicable
from ..quadrature import adaptive_integrate
from ..reflectivity import is_real_valued
from ..types import (
    CavityConfig,
    ForceMethod,
    ForceResult,
    NoiseBand,
    QuadratureSettings,
    SpherePlaneConfig,
)
from .kernels import log_kernel, reflectivity_product
from .plates import require_strictly_passive, scaled_result
from .series import M1S_BOUND, energy_series, plan_series

logger = logging.getLogger(__name__)


def free_energy(
    band: NoiseBand,
    cavity: CavityConfig,
    settings: QuadratureSettings | None = None,
    method: ForceMethod = "adaptive",
) -> ForceResult:
    """Interaction free energy per unit area (J/m²), vanishing as L → ∞.

    ``E = (I_ω/2π) ∫dk/k ∫du u Im ln(1 - x)``, so that ``f = -∂E/∂L``.

    Raises:
        NotStrictlyPassive: ``|r1 r2|`` reaches 1 in the band.
        SeriesNotApplicable: ``method="series"`` with complex reflectivities.
        MethodNotApplicable: ``method="mode-sum"``.
    """
    settings = settings or QuadratureSettings()
    if method == "mode-sum":
        raise MethodNotApplicable("the free energy has no mode-sum path")

    bound = require_strictly_passive(band, cavity)
    L = cavity.separation
    c = band.sound_speed
    scale = band.spectral_intensity / (2.0 * math.pi)

    if method == "series":
        if not (is_real_valued(cavity.refl_a) and is_real_valued(cavity.refl_b)):
            raise SeriesNotApplicable("the series path needs real reflectivities")
        plan = plan_series(bound, M1S_BOUND, settings)
        extra: tuple[str, ...] = ()
        if plan.truncated:
            extra = (f"series truncated at {plan.terms} terms (tail bound {plan.tail_bound:.3e})",)
            logger.warning("%s", extra[0])

        def series_integrand(k: NDArray[np.float64]) -> NDArray[np.float64]:
            rho = reflectivity_product(cavity, c, k).real
            return energy_series(rho, k, L, plan.terms) / k

        report = adaptive_integrate(
            series_integrand,
            (band.k_lo, band.k_hi),
            oscillation_scale=2.0 * L * min(plan.terms, max(1.0, 1.0 / (1.0 - bound))),
            settings=settings,
        )
        return scaled_result(scale, report, "series", extra)

    def integrand(k: NDArray[np.float64], u: NDArray[np.float64]) -> NDArray[np.float64]:
        rho = reflectivity_product(cavity, c, k)
        return u * log_kernel(rho, 2.0 * k * L * u) / k

    report = adaptive_integrate(
        integrand,
        ((band.k_lo, band.k_hi), (0.0, 1.0)),
        oscillation_scale=(2.0 * L, 2.0 * band.k_hi * L),
        settings=settings,
    )
    return scaled_result(scale, report, "adaptive")


def sphere_plane_force(
    band: NoiseBand,
    cfg: SpherePlaneConfig,
    settings: QuadratureSettings | None = None,
    method: ForceMethod = "adaptive",
) -> ForceResult:
    """Force (N) on a sphere near a plate in the proximity approximation: ``2πR·E(L)``.

    The result carries a warning when ``L/R >= 1``, where the approximation
    no longer holds.
    """
    energy = free_energy(band, cfg.cavity(), settings, method)
    factor = 2.0 * math.pi * cfg.radius

    extra: tuple[str, ...] = ()
    if not cfg.proximity_valid:
        ratio = cfg.closest_gap / cfg.radius
        extra = (f"proximity approximation needs L/R < 1, got {ratio:.6g}",)
        logger.warning("%s", extra[0])

    return ForceResult(
        value=factor * energy.value,
        error_estimate=factor * energy.error_estimate,
        method=energy.method,
        evaluations=energy.evaluations,
        warnings=energy.warnings + extra,
    )
