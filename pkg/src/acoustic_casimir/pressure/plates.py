"""Radiation pressures and the Casimir force per unit area between two plates.

Every band-shell integral runs over ``k ∈ [k_lo, k_hi]`` and ``u = cos θ ∈ [0, 1]``
after the azimuthal integration, where ``k_z²/k⁴ d³k = 2π u² du dk``. With
the conventions

    P_out = (I_ω / 4π²) ∫ k_z²/k⁴ d³k
    P_in  = (I_ω / 4π)  ∫ D(k_z) k_z²/k⁴ d³k

the force ``f = P_in - P_out = (I_ω/π) ∫dk ∫du u² Re[x/(1 - x)]`` with
``x = r1(ck) r2(ck) e^{2ikLu}``. Negative values are attractive.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.typing import NDArray

from ..errors import MethodNotApplicable, NotPassive, NotStrictlyPassive, SeriesNotApplicable
from ..quadrature import IntegrationReport, adaptive_integrate
from ..reflectivity import band_modulus_bound, band_product, is_real_valued
from ..reflectivity.models import PASSIVITY_SLACK
from ..types import CavityConfig, ForceMethod, ForceResult, NoiseBand, QuadratureSettings
from .kernels import SMALL_GAP_PHASE, density_kernel, force_kernel, reflectivity_product
from .series import M2C_BOUND, force_series, plan_series

logger = logging.getLogger(__name__)

_EPS = float(np.finfo(float).eps)


# ── shared helpers ───────────────────────────────────────────────────


def modulus_bound(band: NoiseBand, cavity: CavityConfig) -> float:
    """Upper bound of ``|r1 r2|`` over the band."""
    return band_modulus_bound(cavity.refl_a, cavity.refl_b, band.omega_lo, band.omega_hi)


def require_passive(band: NoiseBand, cavity: CavityConfig) -> float:
    bound = modulus_bound(band, cavity)
    if bound > 1.0 + PASSIVITY_SLACK:
        raise NotPassive(f"|r1 r2| reaches {bound!r} > 1 in the band", details={"bound": bound})
    return bound


def require_strictly_passive(band: NoiseBand, cavity: CavityConfig) -> float:
    bound = require_passive(band, cavity)
    if bound >= 1.0:
        raise NotStrictlyPassive(
            f"|r1 r2| reaches {bound!r} in the band; a strictly passive cavity is required",
            details={"bound": bound},
        )
    return bound


def band_constant_product(band: NoiseBand, cavity: CavityConfig) -> complex | None:
    return band_product(cavity.refl_a, cavity.refl_b, band.omega_lo, band.omega_hi)


def _is_perfect(product: complex | None) -> bool:
    return product is not None and abs(product - 1.0) <= PASSIVITY_SLACK


def _is_lossless(product: complex | None) -> bool:
    return product is not None and abs(abs(product) - 1.0) <= PASSIVITY_SLACK


def scaled_result(
    scale: float, report: IntegrationReport, method: ForceMethod, extra: tuple[str, ...] = ()
) -> ForceResult:
    return ForceResult(
        value=scale * report.value,
        error_estimate=abs(scale) * report.error_estimate,
        method=method,
        evaluations=report.evaluations,
        warnings=report.warnings + extra,
    )


# ── pressures ────────────────────────────────────────────────────────


def pressure_outside(band: NoiseBand) -> float:
    """Radiation pressure of the free noise field: ``I_ω (k_hi - k_lo) / 6π``."""
    return band.spectral_intensity * (band.k_hi - band.k_lo) / (6.0 * math.pi)


def pressure_inside(
    band: NoiseBand, cavity: CavityConfig, settings: QuadratureSettings | None = None
) -> ForceResult:
    """Radiation pressure of the modes between the plates.

    A product that is constant over the band with ``|r1 r2| = 1`` other than ``+1``
    has a vanishing density of modes away from isolated poles, so the
    pressure is exactly zero; ``r1 r2 = 1`` belongs to the mode sum.

    Raises:
        NotStrictlyPassive: ``|r1 r2|`` reaches 1 somewhere in the band.
    """
    settings = settings or QuadratureSettings()
    product = band_constant_product(band, cavity)
    if _is_lossless(product) and not _is_perfect(product):
        return ForceResult(value=0.0, error_estimate=0.0, method="adaptive")

    require_strictly_passive(band, cavity)
    L = cavity.separation
    c = band.sound_speed

    def integrand(k: NDArray[np.float64], u: NDArray[np.float64]) -> NDArray[np.float64]:
        rho = reflectivity_product(cavity, c, k)
        return u * u * density_kernel(rho, 2.0 * k * L * u)

    report = adaptive_integrate(
        integrand,
        ((band.k_lo, band.k_hi), (0.0, 1.0)),
        oscillation_scale=(2.0 * L, 2.0 * band.k_hi * L),
        settings=settings,
    )
    # (I/4π) · 2π · (1/π) ∫∫ u² πD
    return scaled_result(band.spectral_intensity / (2.0 * math.pi), report, "adaptive")


# ── forces ───────────────────────────────────────────────────────────


def casimir_force_perfect(band: NoiseBand, L: float) -> ForceResult:
    """Force per area between perfect reflectors by summing the modes k_z = nπ/L.

    Each mode contributes the in-band annulus of its (k_x, k_y) plane in
    closed form, so no quadrature is involved.
    """
    if not L > 0.0:
        raise ValueError(f"L must be positive, got {L!r}")

    k0 = math.pi / L
    k_lo, k_hi = band.k_lo, band.k_hi
    intensity = band.spectral_intensity
    count = math.floor(k_hi / k0)

    inside = 0.0
    if count >= 1:
        kz2 = (np.arange(1, count + 1, dtype=float) * k0) ** 2
        terms = kz2 * (1.0 / np.maximum(kz2, k_lo * k_lo) - 1.0 / (k_hi * k_hi))
        inside = intensity * k0 / (4.0 * math.pi) * math.fsum(terms)

    outside = pressure_outside(band)
    return ForceResult(
        value=inside - outside,
        error_estimate=4.0 * _EPS * (abs(inside) + outside) * max(1.0, math.log2(count + 1)),
        method="mode-sum",
        evaluations=count,
    )


def _force_adaptive(
    band: NoiseBand,
    cavity: CavityConfig,
    settings: QuadratureSettings,
    extra: tuple[str, ...] = (),
) -> ForceResult:
    L = cavity.separation
    c = band.sound_speed
    small_gap = 2.0 * band.k_hi * L < SMALL_GAP_PHASE

    def integrand(k: NDArray[np.float64], u: NDArray[np.float64]) -> NDArray[np.float64]:
        rho = reflectivity_product(cavity, c, k)
        return u * u * force_kernel(rho, 2.0 * k * L * u, small_gap=small_gap)

    report = adaptive_integrate(
        integrand,
        ((band.k_lo, band.k_hi), (0.0, 1.0)),
        oscillation_scale=(2.0 * L, 2.0 * band.k_hi * L),
        settings=settings,
    )
    return scaled_result(band.spectral_intensity / math.pi, report, "adaptive", extra)


def _force_series(
    band: NoiseBand, cavity: CavityConfig, bound: float, settings: QuadratureSettings
) -> ForceResult:
    if bound >= 1.0:
        raise SeriesNotApplicable(
            f"the series path needs sup |r1 r2| < 1, got {bound!r}", details={"bound": bound}
        )
    if not (is_real_valued(cavity.refl_a) and is_real_valued(cavity.refl_b)):
        raise SeriesNotApplicable("the series path needs real reflectivities")

    plan = plan_series(bound, M2C_BOUND, settings)
    extra: tuple[str, ...] = ()
    if plan.truncated:
        extra = (f"series truncated at {plan.terms} terms (tail bound {plan.tail_bound:.3e})",)
        logger.warning("%s", extra[0])

    L = cavity.separation
    c = band.sound_speed

    def integrand(k: NDArray[np.float64]) -> NDArray[np.float64]:
        rho = reflectivity_product(cavity, c, k).real
        return force_series(rho, k, L, plan.terms)

    report = adaptive_integrate(
        integrand,
        (band.k_lo, band.k_hi),
        oscillation_scale=2.0 * L * min(plan.terms, max(1.0, 1.0 / (1.0 - bound))),
        settings=settings,
    )
    return scaled_result(band.spectral_intensity / math.pi, report, "series", extra)


def casimir_force(
    band: NoiseBand,
    cavity: CavityConfig,
    method: ForceMethod = "adaptive",
    settings: QuadratureSettings | None = None,
) -> ForceResult:
    """Acoustic Casimir force per unit area (Pa) between the plates of ``cavity``.

    A cavity whose reflectivity product is identically ``+1`` over the band,
    whether written with constants or tables, has a Dirac comb for its
    density of modes and is always served by the mode sum. A product that
    varies across the band and touches ``|r1 r2| = 1`` is integrated
    adaptively with a warning on the result; the density of modes is
    singular at those frequencies.

    Raises:
        NotPassive: ``|r1 r2| > 1`` somewhere in the band.
        SeriesNotApplicable: ``method="series"`` with sup |r1 r2| >= 1 or
            complex reflectivities.
        MethodNotApplicable: ``method="mode-sum"`` for a cavity that is not
            perfectly reflecting.
    """
    settings = settings or QuadratureSettings()

    product = band_constant_product(band, cavity)
    if _is_perfect(product):
        if method != "mode-sum":
            logger.debug("r1 r2 = 1: using the mode sum instead of %s", method)
        return casimir_force_perfect(band, cavity.separation)
    if method == "mode-sum":
        raise MethodNotApplicable("the mode sum needs r1 r2 = 1 (perfect reflectors)")

    bound = require_passive(band, cavity)
    match method:
        case "adaptive":
            extra: tuple[str, ...] = ()
            if bound >= 1.0 and product is None:
                extra = (f"|r1 r2| reaches {bound!r} in the band; modes there are undamped",)
                logger.warning("%s", extra[0])
            return _force_adaptive(band, cavity, settings, extra)
        case "series":
            return _force_series(band, cavity, bound, settings)
        case _:
            raise MethodNotApplicable(f"unknown method {method!r}")
