"""Tests for modes.py — Green's function and density of modes."""

import cmath
import math

import numpy as np
import pytest
from scipy import integrate

from acoustic_casimir.errors import ResonancePole
from acoustic_casimir.modes import (
    dos_scan,
    greens_function,
    mode_density_closed,
    mode_density_from_green,
    wronskian,
)
from acoustic_casimir.reflectivity import ConstantReflectivity, PerfectReflector, TableReflectivity

PAIRS = [
    (0.0, 0.0),
    (0.5, 0.5),
    (0.9, 0.9),
    (0.5, -1.0),
    (0.6j, 0.3 - 0.4j),
]


class TestGreensFunction:
    def test_open_cavity(self):
        assert greens_function(0.3, 0.3, 1.0, 1.0, 0.0, 0.0) == pytest.approx(-0.5j)

    @pytest.mark.parametrize("z,zp", [(0.1, 0.7), (0.7, 0.1), (0.4, 0.4)])
    def test_free_space_form(self, z, zp):
        k = 2.0
        expected = cmath.exp(1j * k * abs(z - zp)) / (2j * k)
        assert greens_function(z, zp, k, 1.0, 0.0, 0.0) == pytest.approx(expected, abs=1e-14)

    @pytest.mark.parametrize("r1,r2", PAIRS)
    def test_symmetric(self, r1, r2):
        a = greens_function(0.2, 0.9, 3.0, 1.3, r1, r2)
        b = greens_function(0.9, 0.2, 3.0, 1.3, r1, r2)
        assert a == b

    @pytest.mark.parametrize("z", [-0.1, 1.1])
    def test_position_outside(self, z):
        with pytest.raises(ValueError):
            greens_function(z, 0.5, 1.0, 1.0, 0.5, 0.5)

    def test_resonance(self):
        L = 0.5
        with pytest.raises(ResonancePole) as exc_info:
            greens_function(0.1, 0.2, math.pi / L, L, 1.0, 1.0)
        assert exc_info.value.exit_status.code == 3


class TestWronskian:
    @pytest.mark.parametrize("r1,r2", PAIRS)
    def test_closed_form(self, r1, r2):
        k, L = 2.7, 0.8
        expected = 2j * k * cmath.exp(-1j * k * L) * (1.0 - r1 * r2 * cmath.exp(2j * k * L))
        assert wronskian(0.3, k, L, r1, r2) == pytest.approx(expected, abs=1e-13)

    @pytest.mark.parametrize("r1,r2", PAIRS)
    def test_independent_of_position(self, r1, r2):
        values = [wronskian(z, 2.7, 0.8, r1, r2) for z in (0.0, 0.2, 0.5, 0.8)]
        for w in values[1:]:
            assert w == pytest.approx(values[0], abs=1e-13)


class TestModeDensity:
    @pytest.mark.parametrize(
        "k_z,r1,r2,expected",
        [
            (1.0, 0.0, 0.0, 1.0 / math.pi),
            (math.pi, 0.5, 1.0, 3.0 / math.pi),
            (math.pi, 0.5, -1.0, 1.0 / (3.0 * math.pi)),
            (0.7, -1.0, 1.0, 0.0),
        ],
        ids=["open", "peak", "trough", "lossless"],
    )
    def test_closed_form_values(self, k_z, r1, r2, expected):
        assert mode_density_closed(k_z, 1.0, r1, r2) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("r1,r2", PAIRS)
    def test_green_construction_matches_closed_form(self, r1, r2):
        rng = np.random.default_rng(7)
        L = 0.37
        for k_z in rng.uniform(0.5, 60.0, size=5):
            for z in (0.05, 0.2, 0.33):
                closed = mode_density_closed(float(k_z), L, r1, r2)
                green = mode_density_from_green(z, float(k_z), L, r1, r2)
                assert green == pytest.approx(closed, rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize("r1,r2", PAIRS)
    def test_green_construction_independent_of_position(self, r1, r2):
        L = 0.37
        for k_z in (0.9, 7.3, 41.0):
            values = [
                mode_density_from_green(z, k_z, L, r1, r2) for z in (0.01, 0.1, 0.185, 0.3, 0.36)
            ]
            for value in values[1:]:
                assert value == pytest.approx(values[0], rel=1e-10, abs=1e-12)

    def test_identity_with_force_kernel(self):
        rho = 0.81 * cmath.exp(0.4j)
        for k_z in (0.3, 1.1, 2.9):
            x = rho * cmath.exp(2j * k_z)
            density = mode_density_closed(k_z, 1.0, rho, 1.0)
            assert math.pi * density - 1.0 == pytest.approx(2.0 * (x / (1.0 - x)).real)

    @pytest.mark.parametrize("rho", [0.0, 0.25, 0.5, 0.81, -0.5, 0.3j])
    @pytest.mark.parametrize("start", [1e-9, 0.37, 2.9, 11.2], ids=str)
    def test_one_mode_per_period(self, rho, start):
        L = 0.5
        period = math.pi / L
        value, _ = integrate.quad(
            lambda k: mode_density_closed(k, L, rho, 1.0),
            start,
            start + period,
            epsabs=0.0,
            epsrel=1e-13,
            limit=400,
        )
        assert value == pytest.approx(1.0 / L, rel=1e-9)

    @pytest.mark.parametrize("rho", [0.0, 0.25, 0.81, -0.5, 0.9j])
    def test_positive_below_unit_modulus(self, rho):
        k_values = np.linspace(0.01, 20.0, 401)
        assert all(mode_density_closed(float(k), 0.7, rho, 1.0) > 0.0 for k in k_values)

    def test_green_needs_interior_point(self):
        with pytest.raises(ValueError):
            mode_density_from_green(0.0, 1.0, 1.0, 0.5, 0.5)

    def test_k_z_positive(self):
        with pytest.raises(ValueError):
            mode_density_closed(0.0, 1.0, 0.5, 0.5)


class TestDosScan:
    def test_open_cavity_is_flat(self):
        points = dos_scan(
            [1.0, 5.0, 50.0], 0.1, ConstantReflectivity(r=0.0), ConstantReflectivity(r=0.0), 343.0
        )
        assert [p.k_z for p in points] == [1.0, 5.0, 50.0]
        assert all(p.density == pytest.approx(1.0 / math.pi) for p in points)

    def test_table_sampled_at_sound_speed_times_k(self):
        table = TableReflectivity(omega=(0.0, 200.0), r=(0.0, 0.8))
        (point,) = dos_scan([1.0], math.pi / 2.0, table, PerfectReflector(), 100.0)
        # r(100 rad/s) = 0.4, phase 2 k_z L = π
        assert point.density == pytest.approx((0.6 / 1.4) / math.pi)

    def test_resonance_propagates(self):
        with pytest.raises(ResonancePole):
            dos_scan([math.pi], 1.0, PerfectReflector(), PerfectReflector(), 343.0)
