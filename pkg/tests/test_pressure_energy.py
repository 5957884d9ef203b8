"""Tests for pressure/energy.py — free energy and the sphere–plane force."""

import math

import pytest

from acoustic_casimir.errors import MethodNotApplicable, NotStrictlyPassive, SeriesNotApplicable
from acoustic_casimir.pressure import casimir_force, free_energy, sphere_plane_force
from acoustic_casimir.reflectivity import ConstantReflectivity, PerfectReflector, PressureRelease
from acoustic_casimir.types import CavityConfig, SpherePlaneConfig

from .conftest import constant_cavity


class TestFreeEnergy:
    def test_force_is_minus_gradient(self, stand_in_band, tight_settings):
        L, h = 0.01, 1e-6

        def energy(sep: float) -> float:
            cavity = constant_cavity(0.5, 1.0, sep)
            return free_energy(stand_in_band, cavity, tight_settings, "series").value

        gradient = (energy(L + h) - energy(L - h)) / (2.0 * h)
        force = casimir_force(stand_in_band, constant_cavity(0.5, 1.0, L), "series", tight_settings)
        assert -gradient == pytest.approx(force.value, rel=1e-5)

    def test_series_matches_adaptive(self, test_band, tight_settings):
        cavity = constant_cavity(0.8, -0.9, 0.015)
        adaptive = free_energy(test_band, cavity, tight_settings, "adaptive")
        series = free_energy(test_band, cavity, tight_settings, "series")
        assert series.method == "series"
        assert series.value == pytest.approx(adaptive.value, rel=1e-9)

    def test_decays_with_separation(self, stand_in_band):
        near = free_energy(stand_in_band, constant_cavity(0.5, 1.0, 0.005)).value
        far = free_energy(stand_in_band, constant_cavity(0.5, 1.0, 0.1)).value
        assert abs(far) < 0.05 * abs(near)

    def test_open_cavity_is_zero(self, test_band):
        assert free_energy(test_band, constant_cavity(0.0, 0.0, 0.02)).value == 0.0

    def test_complex_reflectivities_adaptive_only(self, test_band):
        cavity = constant_cavity(0.7j, 0.7, 0.02)
        assert math.isfinite(free_energy(test_band, cavity).value)
        with pytest.raises(SeriesNotApplicable):
            free_energy(test_band, cavity, method="series")

    def test_mode_sum_rejected(self, test_band):
        with pytest.raises(MethodNotApplicable):
            free_energy(test_band, constant_cavity(0.5, 0.5, 0.02), method="mode-sum")

    @pytest.mark.parametrize(
        "refl_b", [PerfectReflector(), PressureRelease()], ids=["perfect", "pressure-release"]
    )
    def test_unit_modulus_rejected(self, test_band, refl_b):
        cavity = CavityConfig(separation=0.02, refl_a=PerfectReflector(), refl_b=refl_b)
        with pytest.raises(NotStrictlyPassive) as exc_info:
            free_energy(test_band, cavity)
        assert exc_info.value.exit_status.code == 3


class TestSpherePlaneForce:
    def _config(self, gap: float, radius: float = 0.2) -> SpherePlaneConfig:
        return SpherePlaneConfig(
            radius=radius,
            closest_gap=gap,
            refl_sphere=ConstantReflectivity(r=0.8),
            refl_plane=ConstantReflectivity(r=0.9),
        )

    def test_proximity_factor(self, test_band):
        cfg = self._config(0.02)
        energy = free_energy(test_band, cfg.cavity())
        force = sphere_plane_force(test_band, cfg)
        assert force.value == pytest.approx(2.0 * math.pi * 0.2 * energy.value, rel=1e-15)
        assert force.error_estimate == pytest.approx(2.0 * math.pi * 0.2 * energy.error_estimate)
        assert force.warnings == ()

    def test_linear_in_radius(self, test_band):
        small = sphere_plane_force(test_band, self._config(0.02, radius=0.1)).value
        large = sphere_plane_force(test_band, self._config(0.02, radius=0.2)).value
        assert large == pytest.approx(2.0 * small, rel=1e-12)

    def test_open_cavity(self, test_band):
        cfg = SpherePlaneConfig(
            radius=0.2,
            closest_gap=0.02,
            refl_sphere=ConstantReflectivity(r=0.0),
            refl_plane=PerfectReflector(),
        )
        assert sphere_plane_force(test_band, cfg).value == 0.0

    def test_outside_proximity_regime_warns(self, test_band, caplog):
        with caplog.at_level("WARNING", logger="acoustic_casimir"):
            force = sphere_plane_force(test_band, self._config(0.3))
        assert math.isfinite(force.value)
        assert any("proximity approximation" in w for w in force.warnings)
        assert "proximity approximation" in caplog.text

    def test_series_method(self, test_band):
        cfg = self._config(0.02)
        adaptive = sphere_plane_force(test_band, cfg)
        series = sphere_plane_force(test_band, cfg, method="series")
        assert series.method == "series"
        assert series.value == pytest.approx(adaptive.value, rel=1e-8)
