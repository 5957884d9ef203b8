"""Tests for pressure/plates.py — radiation pressures and plate forces."""

import math

import pytest

from acoustic_casimir.errors import (
    MethodNotApplicable,
    NotPassive,
    NotStrictlyPassive,
    SeriesNotApplicable,
)
from acoustic_casimir.pressure import (
    casimir_force,
    casimir_force_perfect,
    modulus_bound,
    pressure_inside,
    pressure_outside,
)
from acoustic_casimir.reflectivity import (
    ConstantReflectivity,
    PerfectReflector,
    PressureRelease,
    TableReflectivity,
)
from acoustic_casimir.types import CavityConfig, NoiseBand

from .conftest import constant_cavity, force_oracle


def _cavity(refl_a, refl_b, separation: float = 0.02) -> CavityConfig:
    return CavityConfig(separation=separation, refl_a=refl_a, refl_b=refl_b)


class TestPressureOutside:
    def test_value(self, test_band):
        assert pressure_outside(test_band) == pytest.approx(185.0 / (6.0 * math.pi), rel=1e-14)

    def test_scales_with_intensity(self):
        band = NoiseBand.from_wavenumbers(1.0, 2.0, spectral_intensity=3.0)
        assert pressure_outside(band) == pytest.approx(3.0 / (6.0 * math.pi))


class TestPressureInside:
    def test_open_cavity_matches_outside(self, test_band):
        result = pressure_inside(test_band, constant_cavity(0.0, 0.0, 0.02))
        assert result.value == pytest.approx(pressure_outside(test_band), rel=1e-12)

    def test_difference_is_the_force(self, test_band, tight_settings):
        cavity = constant_cavity(0.5, -0.7, 0.013)
        inside = pressure_inside(test_band, cavity, tight_settings).value
        force = casimir_force(test_band, cavity, settings=tight_settings).value
        assert inside - pressure_outside(test_band) == pytest.approx(force, rel=1e-9, abs=1e-12)

    def test_lossless_phase_product_vanishes(self, test_band):
        cavity = _cavity(PerfectReflector(), PressureRelease())
        result = pressure_inside(test_band, cavity)
        assert result.value == 0.0
        assert result.error_estimate == 0.0

    def test_needs_strict_passivity(self, test_band):
        table = TableReflectivity(omega=(0.0, 50_000.0, 1e6), r=(0.5, 1.0, 0.5))
        with pytest.raises(NotStrictlyPassive):
            pressure_inside(test_band, _cavity(table, PerfectReflector()))


class TestCasimirForcePerfect:
    def test_single_mode(self):
        band = NoiseBand.from_wavenumbers(0.0, 1.5)
        result = casimir_force_perfect(band, math.pi)
        assert result.value == pytest.approx(-1.0 / (9.0 * math.pi), rel=1e-13)
        assert result.method == "mode-sum"
        assert result.evaluations == 1

    @pytest.mark.parametrize("L", [0.01, 0.05, 0.1])
    def test_full_band_limit(self, L):
        band = NoiseBand.from_wavenumbers(0.0, 1e4 * math.pi / L)
        result = casimir_force_perfect(band, L)
        assert result.value * L == pytest.approx(-1.0 / 8.0, rel=1e-3)

    def test_no_modes_in_band(self):
        band = NoiseBand.from_wavenumbers(1.0, 2.0)
        result = casimir_force_perfect(band, 1.0)
        assert result.value == pytest.approx(-pressure_outside(band))
        assert result.evaluations == 0

    @pytest.mark.parametrize("L", [0.02, 0.03, 0.04])
    def test_stand_in_band_signs(self, stand_in_band, L):
        value = casimir_force_perfect(stand_in_band, L).value
        assert (value < 0.0) == (L == 0.02)

    def test_error_estimate_is_roundoff(self, stand_in_band):
        result = casimir_force_perfect(stand_in_band, 0.05)
        assert 0.0 < result.error_estimate < 1e-12

    @pytest.mark.parametrize("L", [0.0, -1.0])
    def test_separation_positive(self, stand_in_band, L):
        with pytest.raises(ValueError):
            casimir_force_perfect(stand_in_band, L)


class TestCasimirForce:
    @pytest.mark.parametrize("rho", [0.5, -0.5, 0.8, 0.95])
    @pytest.mark.parametrize("method", ["adaptive", "series"])
    def test_matches_closed_form_series(self, test_band, tight_settings, rho, method):
        L = 0.02
        cavity = constant_cavity(rho, 1.0, L)
        result = casimir_force(test_band, cavity, method, tight_settings)
        assert result.method == method
        assert result.value == pytest.approx(force_oracle(test_band, rho, L, 2000), rel=1e-8)
        assert result.error_estimate < 1e-8 * abs(result.value) + 1e-12

    @pytest.mark.parametrize("r", [0.3, 0.7, 0.9])
    @pytest.mark.parametrize("L", [0.002, 0.005, 0.01, 0.03, 0.1])
    def test_series_matches_adaptive(self, stand_in_band, r, L):
        cavity = constant_cavity(r, r, L)
        adaptive = casimir_force(stand_in_band, cavity, "adaptive").value
        series = casimir_force(stand_in_band, cavity, "series").value
        assert series == pytest.approx(adaptive, rel=1e-6)

    def test_series_matches_adaptive_for_tables(self, test_band):
        table = TableReflectivity(omega=(20_000.0, 60_000.0, 110_000.0), r=(0.3, 0.9, -0.6))
        cavity = _cavity(table, ConstantReflectivity(r=0.8), 0.017)
        adaptive = casimir_force(test_band, cavity, "adaptive").value
        series = casimir_force(test_band, cavity, "series").value
        assert series == pytest.approx(adaptive, rel=1e-8)

    def test_complex_reflectivities(self, test_band, tight_settings):
        # r1 r2 = -0.5 either way
        complex_pair = constant_cavity(0.5j, 1j, 0.02)
        real_pair = constant_cavity(-0.5, 1.0, 0.02)
        a = casimir_force(test_band, complex_pair, settings=tight_settings).value
        b = casimir_force(test_band, real_pair, settings=tight_settings).value
        assert a == pytest.approx(b, rel=1e-10)

    def test_open_cavity_has_no_force(self, test_band):
        assert casimir_force(test_band, constant_cavity(0.0, 0.7, 0.02)).value == 0.0

    @pytest.mark.parametrize("L", [0.001, 0.02, 0.3])
    def test_pressure_release_cancels_outside_pressure(self, test_band, L):
        cavity = _cavity(PerfectReflector(), PressureRelease(), L)
        result = casimir_force(test_band, cavity)
        assert result.value == pytest.approx(-pressure_outside(test_band), rel=1e-10)

    def test_small_gap_limit(self, test_band):
        result = casimir_force(test_band, constant_cavity(0.5, 1.0, 1e-9))
        expected = (185.0 / 3.0) * (0.5 / 0.5) / math.pi
        assert result.value == pytest.approx(expected, rel=1e-6)

    def test_perfect_pair_uses_mode_sum(self, stand_in_band):
        cavity = _cavity(PerfectReflector(), PerfectReflector(), 0.03)
        for method in ("adaptive", "series", "mode-sum"):
            assert casimir_force(stand_in_band, cavity, method).method == "mode-sum"

    def test_approaches_perfect_limit(self):
        L = 0.05
        k0 = math.pi / L
        band = NoiseBand.from_wavenumbers(0.5 * k0, 3.5 * k0)
        perfect = casimir_force_perfect(band, L).value
        near = casimir_force(band, constant_cavity(0.99, 0.99, L), "series").value
        assert perfect < 0.0
        assert near == pytest.approx(perfect, rel=0.02)

    def test_tabulated_perfect_pair_uses_mode_sum(self, test_band):
        unit = TableReflectivity(omega=(0.0, 1e6), r=(1.0, 1.0))
        expected = casimir_force_perfect(test_band, 0.02)
        for cavity in (
            _cavity(unit, PerfectReflector()),
            _cavity(unit, unit),
            _cavity(TableReflectivity(omega=(0.0, 1e6), r=(-1.0, -1.0)), PressureRelease()),
        ):
            result = casimir_force(test_band, cavity)
            assert result.method == "mode-sum"
            assert result.value == expected.value

    def test_tabulated_lossless_product(self, test_band):
        flipped = TableReflectivity(omega=(0.0, 1e6), r=(-1.0, -1.0))
        cavity = _cavity(flipped, PerfectReflector())
        assert pressure_inside(test_band, cavity).value == 0.0
        result = casimir_force(test_band, cavity)
        assert result.value == pytest.approx(-pressure_outside(test_band), rel=1e-10)
        assert result.warnings == ()

    def test_varying_product_touching_unit_modulus_warns(self, test_band, caplog):
        table = TableReflectivity(omega=(0.0, 50_000.0, 1e6), r=(0.5, 1.0, 0.5))
        with caplog.at_level("WARNING", logger="acoustic_casimir"):
            result = casimir_force(test_band, _cavity(table, PerfectReflector()))
        assert result.method == "adaptive"
        assert any("undamped" in w for w in result.warnings)
        assert "undamped" in caplog.text

    def test_mode_sum_needs_perfect_pair(self, test_band):
        with pytest.raises(MethodNotApplicable) as exc_info:
            casimir_force(test_band, constant_cavity(0.5, 0.5, 0.02), "mode-sum")
        assert exc_info.value.exit_status.code == 3

    def test_series_rejects_complex(self, test_band):
        with pytest.raises(SeriesNotApplicable):
            casimir_force(test_band, constant_cavity(0.5j, 0.5, 0.02), "series")

    def test_series_rejects_unit_modulus(self, test_band):
        cavity = _cavity(PerfectReflector(), PressureRelease())
        with pytest.raises(SeriesNotApplicable):
            casimir_force(test_band, cavity, "series")

    def test_not_passive(self, test_band):
        gain = ConstantReflectivity.model_construct(kind="constant", r=1.2 + 0j)
        cavity = CavityConfig.model_construct(
            separation=0.02, refl_a=gain, refl_b=ConstantReflectivity(r=0.9)
        )
        with pytest.raises(NotPassive):
            casimir_force(test_band, cavity)

    def test_modulus_bound(self, test_band):
        assert modulus_bound(test_band, constant_cavity(0.8, -0.5, 0.02)) == pytest.approx(0.4)
