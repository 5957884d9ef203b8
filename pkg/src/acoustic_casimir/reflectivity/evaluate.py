"""Evaluate reflectivity specs at angular frequencies."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import OutOfTableRange
from .models import (
    PASSIVITY_SLACK,
    BaseReflectivity,
    ConstantReflectivity,
    PerfectReflector,
    PressureRelease,
    TableReflectivity,
)


def reflectivity_array(spec: BaseReflectivity, omega: ArrayLike) -> NDArray[np.complex128]:
    """Vectorized evaluation; returns an array shaped like ``omega``."""
    w = np.asarray(omega, dtype=float)

    match spec:
        case ConstantReflectivity(r=r):
            return np.full(w.shape, r, dtype=complex)
        case PerfectReflector():
            return np.ones(w.shape, dtype=complex)
        case PressureRelease():
            return np.full(w.shape, -1.0 + 0.0j, dtype=complex)
        case TableReflectivity():
            return _interpolate_table(spec, w)
        case _:
            raise TypeError(f"unsupported reflectivity spec {type(spec).__name__}")


def eval_reflectivity(spec: BaseReflectivity, omega: float) -> complex:
    """Complex reflectivity of ``spec`` at angular frequency ``omega`` (rad/s)."""
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    return complex(reflectivity_array(spec, omega)[()])


def _interpolate_table(spec: TableReflectivity, w: NDArray[np.float64]) -> NDArray[np.complex128]:
    knots = np.asarray(spec.omega)
    if w.size and (w.min() < knots[0] or w.max() > knots[-1]):
        bad = w.min() if w.min() < knots[0] else w.max()
        raise OutOfTableRange(
            f"omega = {float(bad)!r} outside table range [{knots[0]!r}, {knots[-1]!r}]",
            source=spec.source,
            details={"omega": float(bad), "omega_min": spec.omega_min, "omega_max": spec.omega_max},
        )
    values = np.asarray(spec.r, dtype=complex)
    re = np.interp(w, knots, values.real)
    im = np.interp(w, knots, values.imag)
    return re + 1j * im


# ── Band-level properties ────────────────────────────────────────────


def is_real_valued(spec: BaseReflectivity) -> bool:
    match spec:
        case ConstantReflectivity(r=r):
            return r.imag == 0.0
        case TableReflectivity(r=r):
            return all(v.imag == 0.0 for v in r)
        case _:
            return True


def is_constant(spec: BaseReflectivity) -> bool:
    return not isinstance(spec, TableReflectivity)


def modulus_knots(spec: BaseReflectivity, omega_lo: float, omega_hi: float) -> NDArray[np.float64]:
    """Frequencies in ``[omega_lo, omega_hi]`` where ``|r|`` can attain its extrema."""
    points = [omega_lo, omega_hi]
    if isinstance(spec, TableReflectivity):
        points.extend(w for w in spec.omega if omega_lo < w < omega_hi)
    return np.unique(np.asarray(points, dtype=float))


def band_modulus_bound(
    refl_a: BaseReflectivity,
    refl_b: BaseReflectivity,
    omega_lo: float,
    omega_hi: float,
) -> float:
    """Upper bound of ``|r_a · r_b|`` over the band.

    Both reflectivities are piecewise linear between the union of their
    knots, and the modulus of a linear function is convex, so on every
    segment the product is bounded by the product of end-point maxima.
    """
    knots = np.union1d(
        modulus_knots(refl_a, omega_lo, omega_hi),
        modulus_knots(refl_b, omega_lo, omega_hi),
    )
    mod_a = np.abs(reflectivity_array(refl_a, knots))
    mod_b = np.abs(reflectivity_array(refl_b, knots))
    if knots.size == 1:
        return float(mod_a[0] * mod_b[0])
    seg_a = np.maximum(mod_a[:-1], mod_a[1:])
    seg_b = np.maximum(mod_b[:-1], mod_b[1:])
    return float(np.max(seg_a * seg_b))


def constant_product(refl_a: BaseReflectivity, refl_b: BaseReflectivity) -> complex | None:
    """``r_a · r_b`` when both specs are frequency independent, else ``None``."""
    if not (is_constant(refl_a) and is_constant(refl_b)):
        return None
    return complex(reflectivity_array(refl_a, 1.0)[()] * reflectivity_array(refl_b, 1.0)[()])


def band_product(
    refl_a: BaseReflectivity,
    refl_b: BaseReflectivity,
    omega_lo: float,
    omega_hi: float,
) -> complex | None:
    """``r_a · r_b`` when the product takes one value across the band, else ``None``.

    Between consecutive knots the product of two linear interpolants is a
    quadratic, so agreeing at the knots and at the segment midpoints makes
    it constant on the whole band.
    """
    constant = constant_product(refl_a, refl_b)
    if constant is not None:
        return constant
    knots = np.union1d(
        modulus_knots(refl_a, omega_lo, omega_hi),
        modulus_knots(refl_b, omega_lo, omega_hi),
    )
    samples = np.union1d(knots, 0.5 * (knots[:-1] + knots[1:]))
    values = reflectivity_array(refl_a, samples) * reflectivity_array(refl_b, samples)
    if np.all(np.abs(values - values[0]) <= PASSIVITY_SLACK):
        return complex(values[0])
    return None
