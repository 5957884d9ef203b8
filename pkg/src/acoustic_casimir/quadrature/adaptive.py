"""Globally adaptive Gauss–Kronrod integration over intervals and rectangles.

Integrands are vectorized: a 1D integrand is called as ``f(x)`` and a 2D one
as ``f(x0, x1)`` with NumPy arrays of equal shape, and must return values of
that shape (a scalar is broadcast). All panels of a refinement generation
are evaluated in one call per chunk.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray

from ..errors import NonFiniteIntegrand
from ..types import QuadratureSettings
from .kronrod import GAUSS_WEIGHTS, KRONROD_NODES, KRONROD_WEIGHTS, NODES_PER_AXIS

logger = logging.getLogger(__name__)

Integrand = Callable[..., Any]
Interval = tuple[float, float]

_EPS = float(np.finfo(float).eps)
_ROUNDOFF_FACTOR = 50.0 * _EPS
_CHUNK_2D = 2048
_CHUNK_1D = 2048


@dataclass(frozen=True, slots=True)
class IntegrationReport:
    value: float
    error_estimate: float
    panels_used: int
    converged: bool
    evaluations: int = 0
    warnings: tuple[str, ...] = ()


@dataclass(slots=True)
class _Panels:
    lo: NDArray[np.float64]
    hi: NDArray[np.float64]
    value: NDArray[np.float64]
    error: NDArray[np.float64]
    floor: NDArray[np.float64]
    axis: NDArray[np.intp]


# ── domain handling ──────────────────────────────────────────────────


def _normalize_domain(domain: Interval | Sequence[Interval]) -> NDArray[np.float64]:
    arr = np.asarray(domain, dtype=float)
    if arr.shape == (2,):
        arr = arr.reshape(1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] not in (1, 2):
        raise ValueError("domain must be an interval (a, b) or a rectangle ((a0, b0), (a1, b1))")
    if not np.all(np.isfinite(arr)):
        raise ValueError("domain must be finite")
    return arr


def _normalize_scales(scale: float | Sequence[float] | None, dim: int) -> tuple[float, ...]:
    if scale is None:
        return (0.0,) * dim
    if isinstance(scale, int | float):
        return (float(scale),) * dim
    values = tuple(float(s) for s in scale)
    if len(values) != dim:
        raise ValueError(f"oscillation_scale needs {dim} entries, got {len(values)}")
    return values


def _initial_edges(
    bounds: NDArray[np.float64],
    scales: tuple[float, ...],
    per_oscillation: int,
) -> list[NDArray[np.float64]]:
    edges = []
    for (a, b), scale in zip(bounds, scales, strict=True):
        width = abs(b - a)
        count = 1
        if scale > 0.0 and width > 0.0:
            # panel width <= 2π / (per_oscillation · scale)
            count = max(1, math.ceil(width * scale * per_oscillation / (2.0 * math.pi)))
        edges.append(np.linspace(a, b, count + 1))
    return edges


# ── panel evaluation ─────────────────────────────────────────────────


def _raise_non_finite(points: Sequence[NDArray[np.float64]], y: NDArray[np.float64]) -> None:
    idx = np.unravel_index(int(np.flatnonzero(~np.isfinite(y))[0]), y.shape)
    where = tuple(float(p[idx]) for p in points)
    raise NonFiniteIntegrand(
        f"integrand returned {float(y[idx])!r} at {where}",
        details={"point": where},
    )


def _eval_1d(
    f: Integrand, lo: NDArray[np.float64], hi: NDArray[np.float64]
) -> tuple[NDArray[np.float64], ...]:
    mid = 0.5 * (lo[:, 0] + hi[:, 0])
    half = 0.5 * (hi[:, 0] - lo[:, 0])
    x = mid[:, None] + half[:, None] * KRONROD_NODES[None, :]
    y = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    if not np.all(np.isfinite(y)):
        _raise_non_finite((x,), y)

    kronrod = half * (y @ KRONROD_WEIGHTS)
    gauss = half * (y @ GAUSS_WEIGHTS)
    resabs = np.abs(half) * (np.abs(y) @ KRONROD_WEIGHTS)
    axis = np.zeros(lo.shape[0], dtype=np.intp)
    return kronrod, np.abs(kronrod - gauss), _ROUNDOFF_FACTOR * resabs, axis


def _eval_2d(
    f: Integrand, lo: NDArray[np.float64], hi: NDArray[np.float64]
) -> tuple[NDArray[np.float64], ...]:
    n = lo.shape[0]
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    shape = (n, NODES_PER_AXIS, NODES_PER_AXIS)
    x0 = mid[:, 0, None, None] + half[:, 0, None, None] * KRONROD_NODES[None, :, None]
    x1 = mid[:, 1, None, None] + half[:, 1, None, None] * KRONROD_NODES[None, None, :]
    x0, x1 = np.broadcast_to(x0, shape), np.broadcast_to(x1, shape)
    y = np.broadcast_to(np.asarray(f(x0, x1), dtype=float), shape)
    if not np.all(np.isfinite(y)):
        _raise_non_finite((x0, x1), y)

    area = half[:, 0] * half[:, 1]
    kk = area * np.einsum("nij,i,j->n", y, KRONROD_WEIGHTS, KRONROD_WEIGHTS)
    gk = area * np.einsum("nij,i,j->n", y, GAUSS_WEIGHTS, KRONROD_WEIGHTS)
    kg = area * np.einsum("nij,i,j->n", y, KRONROD_WEIGHTS, GAUSS_WEIGHTS)
    resabs = np.abs(area) * np.einsum("nij,i,j->n", np.abs(y), KRONROD_WEIGHTS, KRONROD_WEIGHTS)

    err0 = np.abs(kk - gk)
    err1 = np.abs(kk - kg)
    axis = np.where(err0 >= err1, 0, 1).astype(np.intp)
    return kk, err0 + err1, _ROUNDOFF_FACTOR * resabs, axis


def _evaluate(f: Integrand, lo: NDArray[np.float64], hi: NDArray[np.float64]) -> _Panels:
    dim = lo.shape[1]
    rule = _eval_1d if dim == 1 else _eval_2d
    chunk = _CHUNK_1D if dim == 1 else _CHUNK_2D

    parts = [rule(f, lo[i : i + chunk], hi[i : i + chunk]) for i in range(0, lo.shape[0], chunk)]
    value, raw_error, floor, axis = (np.concatenate(cols) for cols in zip(*parts, strict=True))
    return _Panels(lo, hi, value, np.maximum(raw_error, floor), floor, axis)


def _split(p: _Panels, chosen: NDArray[np.intp]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    lo, hi = p.lo[chosen], p.hi[chosen]
    rows = np.arange(chosen.size)
    axis = p.axis[chosen]
    mid = 0.5 * (lo[rows, axis] + hi[rows, axis])

    left_hi = hi.copy()
    left_hi[rows, axis] = mid
    right_lo = lo.copy()
    right_lo[rows, axis] = mid
    return np.concatenate([lo, right_lo]), np.concatenate([left_hi, hi])


def _concat(a: _Panels, b: _Panels) -> _Panels:
    return _Panels(
        np.concatenate([a.lo, b.lo]),
        np.concatenate([a.hi, b.hi]),
        np.concatenate([a.value, b.value]),
        np.concatenate([a.error, b.error]),
        np.concatenate([a.floor, b.floor]),
        np.concatenate([a.axis, b.axis]),
    )


def _select(p: _Panels, keep: NDArray[np.bool_]) -> _Panels:
    return _Panels(
        p.lo[keep], p.hi[keep], p.value[keep], p.error[keep], p.floor[keep], p.axis[keep]
    )


# ── public entry point ───────────────────────────────────────────────


def adaptive_integrate(
    f: Integrand,
    domain: Interval | Sequence[Interval],
    *,
    oscillation_scale: float | Sequence[float] | None = None,
    settings: QuadratureSettings | None = None,
) -> IntegrationReport:
    """Integrate ``f`` over an interval or a rectangle.

    Args:
        f: Vectorized integrand of one or two variables.
        domain: ``(a, b)`` or ``((a0, b0), (a1, b1))``.
        oscillation_scale: Fastest angular rate of ``f`` along each axis
            (rad per unit). Initial panels are then no wider than
            ``2π / (min_panels_per_oscillation · scale)``.
        settings: Tolerances and the subdivision budget.

    Returns:
        IntegrationReport. Exhausting the budget or hitting the roundoff
        floor gives ``converged=False`` with a warning, never an exception.

    Raises:
        NonFiniteIntegrand: ``f`` returned NaN or ±inf at a node.
    """
    settings = settings or QuadratureSettings()
    bounds = _normalize_domain(domain)
    dim = bounds.shape[0]
    scales = _normalize_scales(oscillation_scale, dim)
    warnings: list[str] = []

    edges = _initial_edges(bounds, scales, settings.min_panels_per_oscillation)
    lo_axes = np.meshgrid(*(e[:-1] for e in edges), indexing="ij")
    hi_axes = np.meshgrid(*(e[1:] for e in edges), indexing="ij")
    lo = np.stack([a.ravel() for a in lo_axes], axis=1)
    hi = np.stack([a.ravel() for a in hi_axes], axis=1)

    panels = _evaluate(f, lo, hi)
    evaluated = lo.shape[0]
    subdivisions = 0
    converged = False
    min_width = 1e-13 * np.maximum(np.abs(bounds[:, 1] - bounds[:, 0]), 1e-300)

    while True:
        value = math.fsum(panels.value)
        error = math.fsum(panels.error)
        tol = max(settings.abs_tol, settings.rel_tol * abs(value))
        if error <= tol:
            converged = True
            break

        budget = settings.max_subdivisions - subdivisions
        if budget <= 0:
            warnings.append(
                f"subdivision budget of {settings.max_subdivisions} exhausted "
                f"(error {error:.3e} > tolerance {tol:.3e})"
            )
            break

        widths = np.abs(panels.hi - panels.lo)[np.arange(panels.lo.shape[0]), panels.axis]
        reducible = (panels.error > panels.floor) & (widths > min_width[panels.axis])
        candidates = np.flatnonzero(reducible & (panels.error > tol / panels.error.size))
        if candidates.size == 0:
            candidates = np.flatnonzero(reducible)
        if candidates.size == 0:
            warnings.append(
                f"roundoff limited: error {error:.3e} cannot reach tolerance {tol:.3e}"
            )
            break

        order = candidates[np.argsort(-panels.error[candidates], kind="stable")]
        chosen = np.sort(order[:budget])
        keep = np.ones(panels.lo.shape[0], dtype=bool)
        keep[chosen] = False

        child_lo, child_hi = _split(panels, chosen)
        panels = _concat(_select(panels, keep), _evaluate(f, child_lo, child_hi))
        evaluated += child_lo.shape[0]
        subdivisions += chosen.size

    nodes = NODES_PER_AXIS**dim
    report = IntegrationReport(
        value=value,
        error_estimate=error,
        panels_used=int(panels.lo.shape[0]),
        converged=converged,
        evaluations=int(evaluated * nodes),
        warnings=tuple(warnings),
    )
    if converged:
        logger.debug(
            "integrated over %d panels (%d evaluations): %.17g ± %.3e",
            report.panels_used,
            report.evaluations,
            value,
            error,
        )
    else:
        logger.warning("quadrature did not converge: %s", "; ".join(warnings))
    return report
