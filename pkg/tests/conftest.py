"""Shared fixtures for the acoustic-casimir test suite."""

from __future__ import annotations

import math
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from acoustic_casimir.quadrature import m1s
from acoustic_casimir.reflectivity import ConstantReflectivity
from acoustic_casimir.types import CavityConfig, NoiseBand, QuadratureSettings

STAND_IN_OMEGA_LO = 2.0 * math.pi * 5_000.0
STAND_IN_OMEGA_HI = 2.0 * math.pi * 15_000.0


@pytest.fixture()
def stand_in_band() -> NoiseBand:
    """5–15 kHz, unit spectral intensity, c = 343 m/s."""
    return NoiseBand(
        omega_lo=STAND_IN_OMEGA_LO,
        omega_hi=STAND_IN_OMEGA_HI,
        spectral_intensity=1.0,
        sound_speed=343.0,
    )


@pytest.fixture()
def test_band() -> NoiseBand:
    """k ∈ [90, 275] rad/m."""
    return NoiseBand.from_wavenumbers(90.0, 275.0)


@pytest.fixture()
def tight_settings() -> QuadratureSettings:
    return QuadratureSettings(rel_tol=1e-12, abs_tol=1e-16)


@pytest.fixture()
def write_config(tmp_path: Path) -> Callable[..., Path]:
    """Write a run-config file into ``tmp_path`` and return its path."""

    def _write(text: str, name: str = "run.cfg") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


def constant_cavity(r1: complex, r2: complex, separation: float) -> CavityConfig:
    return CavityConfig(
        separation=separation,
        refl_a=ConstantReflectivity(r=r1),
        refl_b=ConstantReflectivity(r=r2),
    )


def force_oracle(band: NoiseBand, rho: float, L: float, terms: int = 200) -> float:
    """Closed-form k-integral of the force series for a constant real ρ.

    ``f = (I/π) Σ ρⁿ [M1s(2n k_hi L) - M1s(2n k_lo L)] / (2nL)``
    """
    n = np.arange(1, terms + 1, dtype=float)
    upper = m1s(2.0 * n * band.k_hi * L)
    lower = m1s(2.0 * n * band.k_lo * L)
    total = math.fsum(rho**n * (upper - lower) / (2.0 * n * L))
    return band.spectral_intensity / math.pi * total


def build_config(
    *,
    refl_a: str = "constant:0.5",
    refl_b: str = "constant:0.5",
    separation: float | None = 0.02,
    extra: str = "",
) -> str:
    """Run-config text on the analytic test band k ∈ [90, 275] rad/m."""
    lines = [
        "# test configuration",
        "[band]",
        f"omega_lo = {90.0 * 343.0!r}",
        f"omega_hi = {275.0 * 343.0!r}",
        "spectral_intensity = 1.0",
        "sound_speed = 343.0",
        "",
        "[cavity]",
    ]
    if separation is not None:
        lines.append(f"separation = {separation!r}")
    lines += [f"refl_a = {refl_a}", f"refl_b = {refl_b}", ""]
    return "\n".join(lines) + extra


REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--update-golden",
        action="store_true",
        default=False,
        help="Rewrite the golden CSVs under tests/golden from the current code.",
    )


@pytest.fixture()
def update_golden(request: pytest.FixtureRequest) -> bool:
    return bool(request.config.getoption("--update-golden"))
