"""Geometric-series evaluation of the u-integrals for real ρ.

``Re[x/(1-x)] = Σ ρⁿ cos(2nkLu)`` and ``Im ln(1-x) = -Σ ρⁿ sin(2nkLu)/n`` turn
the inner u-integrals into sums of closed-form moments, leaving a 1D
k-integral for the adaptive engine.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..quadrature import m1s, m2c
from ..types import QuadratureSettings

_BLOCK = 64

# Uniform bounds of the term kernels on [0, 1].
M2C_BOUND = 1.0 / 3.0
M1S_BOUND = 0.5


@dataclass(frozen=True, slots=True)
class SeriesPlan:
    terms: int
    truncated: bool
    tail_bound: float


def plan_series(sup_rho: float, kernel_bound: float, settings: QuadratureSettings) -> SeriesPlan:
    """Smallest N with ``|ρ|^(N+1) / (1 - |ρ|) · bound < series_tail_tol``."""
    if sup_rho <= 0.0:
        return SeriesPlan(terms=1, truncated=False, tail_bound=0.0)

    scale = kernel_bound / (1.0 - sup_rho)
    needed = math.log(settings.series_tail_tol / scale) / math.log(sup_rho) - 1.0
    terms = max(1, math.ceil(needed))
    truncated = terms > settings.series_max_terms
    terms = min(terms, settings.series_max_terms)
    return SeriesPlan(terms=terms, truncated=truncated, tail_bound=sup_rho ** (terms + 1) * scale)


def _sum_terms(
    rho: NDArray[np.float64],
    phase: NDArray[np.float64],
    terms: int,
    term: Callable[[NDArray[np.float64], NDArray[np.int64]], NDArray[np.float64]],
) -> NDArray[np.float64]:
    total = np.zeros_like(phase)
    for start in range(1, terms + 1, _BLOCK):
        n = np.arange(start, min(start + _BLOCK, terms + 1))
        weights = rho[..., None] ** n
        total += np.sum(weights * term(phase[..., None] * n, n), axis=-1)
    return total


def force_series(
    rho: NDArray[np.float64], k: NDArray[np.float64], L: float, terms: int
) -> NDArray[np.float64]:
    """``∫₀¹ u² Re[x/(1-x)] du = Σ ρⁿ M2c(2nkL)``."""
    return _sum_terms(rho, 2.0 * k * L, terms, lambda a, n: m2c(a))


def energy_series(
    rho: NDArray[np.float64], k: NDArray[np.float64], L: float, terms: int
) -> NDArray[np.float64]:
    """``∫₀¹ u Im ln(1-x) du = -Σ ρⁿ M1s(2nkL) / n``."""
    return -_sum_terms(rho, 2.0 * k * L, terms, lambda a, n: m1s(a) / n)
