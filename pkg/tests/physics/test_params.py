# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Tests for physics.params: inputs, effective parameters and regimes."""

import math
from fractions import Fraction

import pytest

from nc_oscillator.physics.errors import ConstraintViolation, DomainError
from nc_oscillator.physics.params import (
    ELECTRON_MASS,
    ELECTRON_OMEGA,
    ELEMENTARY_CHARGE,
    HBAR_SI,
    CaseLabel,
    PhysicalParams,
    QuantumNumbers,
    UnitsMode,
    classify_case,
    effective_params,
    f_exp,
    field_from_f,
    quantum_hall_field,
    theta_from_g,
)


class TestPhysicalParams:
    """Tests for PhysicalParams validation and conversions."""

    def test_dimensionless_constructor(self):
        """dimensionless() fixes m = ω = ħ = 1."""
        p = PhysicalParams.dimensionless(Fraction(1, 2), Fraction(1))
        assert (p.mass, p.omega, p.hbar) == (1, 1, 1)
        assert p.units is UnitsMode.DIMENSIONLESS
        assert p.is_exact

    def test_theta_zero_rejected(self):
        """θ = 0 is not modelled."""
        with pytest.raises(DomainError):
            PhysicalParams.dimensionless(Fraction(0), Fraction(0))

    def test_negative_field_rejected(self):
        """B must be non-negative."""
        with pytest.raises(DomainError):
            PhysicalParams.dimensionless(Fraction(-1), Fraction(1))

    def test_nonpositive_mass_rejected(self):
        """Mass must be positive."""
        with pytest.raises(DomainError):
            PhysicalParams.si(mass=0.0, omega=1.0, B=0.0, theta=1.0)

    def test_dimensionless_requires_unit_scales(self):
        """Dimensionless mode refuses m ≠ 1."""
        with pytest.raises(DomainError):
            PhysicalParams(mass=2, omega=1, B=0, theta=1, hbar=1, units=UnitsMode.DIMENSIONLESS)

    def test_field_theta_above_hbar_rejected(self):
        """Bθ > ħ fails at construction, exact and float alike."""
        with pytest.raises(ConstraintViolation):
            PhysicalParams.dimensionless(Fraction(1), Fraction(3, 2))
        with pytest.raises(ConstraintViolation):
            PhysicalParams.dimensionless(Fraction(1), Fraction(1) + Fraction(1, 10**30))
        with pytest.raises(ConstraintViolation):
            PhysicalParams.dimensionless(2.0, 1.0)
        with pytest.raises(ConstraintViolation):
            PhysicalParams.si(mass=2.0, omega=8.0, B=16.0, theta=1.0, hbar=4.0)

    def test_saturation_accepted(self):
        """Bθ = ħ exactly, or within the float slack, is allowed."""
        assert PhysicalParams.dimensionless(Fraction(1), Fraction(1)).field_theta_product() == 1
        assert PhysicalParams.dimensionless(1.0 + 1e-13, 1.0).B == 1.0 + 1e-13
        with pytest.raises(ConstraintViolation):
            PhysicalParams.dimensionless(1.0 + 1e-13, 1.0, case_tol=1e-15)

    def test_to_dimensionless_exact(self):
        """(b, t) = (B/(mω), θmω/ħ), exact for rational inputs."""
        p = PhysicalParams(
            mass=Fraction(2), omega=Fraction(3), B=Fraction(1, 2), theta=Fraction(1, 10), hbar=Fraction(3, 2)
        )
        assert p.to_dimensionless() == (Fraction(1, 12), Fraction(2, 5))

    def test_electron_preset(self):
        """electron() uses the electron mass and ω = 1.518e16."""
        p = PhysicalParams.electron(B=0.0, theta=5.395e-21)
        assert p.mass == ELECTRON_MASS
        assert p.omega == ELECTRON_OMEGA
        assert p.hbar == HBAR_SI
        assert p.units is UnitsMode.SI

    def test_energy_and_length_units(self):
        """ħω and √(ħ/(mω))."""
        p = PhysicalParams.si(mass=2.0, omega=8.0, B=0.0, theta=1.0, hbar=4.0)
        assert p.energy_scale == 32.0
        assert p.length_unit == pytest.approx(0.5)


class TestEffectiveParams:
    """Tests for effective_params."""

    def test_case1_kappa_one_third(self, case1_params):
        """θ = 1/√2 gives Ω = 3/(2√2) and γ = Ω/3."""
        e = effective_params(case1_params)
        assert e.Omega == pytest.approx(3 / (2 * math.sqrt(2)), rel=1e-14)
        assert e.gamma == pytest.approx(e.Omega / 3, rel=1e-14)
        assert e.M_eff == pytest.approx(8 / 9, rel=1e-14)

    def test_case2_omega_equals_gamma(self, case2_params):
        """B = θ = 1 gives Ω = γ = 1."""
        e = effective_params(case2_params)
        assert e.Omega == pytest.approx(1.0, abs=1e-15)
        assert e.gamma == pytest.approx(1.0, abs=1e-15)
        assert e.M_eff == pytest.approx(2.0)

    def test_omega_at_least_gamma(self, rng):
        """Ω ≥ γ for random admissible (b, t)."""
        for _ in range(200):
            t = float(rng.uniform(0.01, 5.0))
            b = float(rng.uniform(0.0, 1.0)) / t
            e = effective_params(PhysicalParams.dimensionless(b, t))
            assert e.Omega >= e.gamma * (1 - 1e-15)

    def test_frequency_identity(self, rng):
        """Ω² − γ² = ω²(ħBθ − 𝔏)²/(4𝔏ħ²)."""
        for _ in range(100):
            t = float(rng.uniform(0.1, 2.0))
            b = float(rng.uniform(0.0, 0.9)) / t
            e = effective_params(PhysicalParams.dimensionless(b, t))
            rhs = (b * t - e.L_factor) ** 2 / (4 * e.L_factor)
            assert e.Omega**2 - e.gamma**2 == pytest.approx(rhs, rel=1e-12)

    def test_identity_reduces_to_omega_at_zero_field(self, case1_params):
        """At B = 0, Ω² − γ² = ω²."""
        e = effective_params(case1_params)
        assert e.Omega**2 - e.gamma**2 == pytest.approx(1.0, rel=1e-12)

    def test_constraint_violation(self):
        """Bθ > ħ has no real effective mass."""
        with pytest.raises(ConstraintViolation):
            effective_params(PhysicalParams.dimensionless(Fraction(1), Fraction(3, 2)))

    def test_si_matches_dimensionless(self):
        """SI energies equal dimensionless ones times ħω."""
        from nc_oscillator.physics.spectrum import energy

        si = PhysicalParams.si(mass=2.0, omega=3.0, B=0.5, theta=0.1, hbar=1.5)
        b, t = si.to_dimensionless()
        dimless = PhysicalParams.dimensionless(b, t)
        q = QuantumNumbers(2, -3)
        expected = energy(effective_params(dimless), q) * si.energy_scale
        assert energy(effective_params(si), q) == pytest.approx(expected, rel=1e-12)

    def test_length_scale_case1(self, case1_params):
        """ℓ² = √(4 + t²)/2 at B = 0."""
        e = effective_params(case1_params)
        assert e.length_scale**2 == pytest.approx(math.sqrt(4.5) / 2, rel=1e-13)

    def test_length_scale_case2(self):
        """ℓ² = 1/(2b) at bt = 1."""
        e = effective_params(PhysicalParams.dimensionless(Fraction(4), Fraction(1, 4)))
        assert e.length_scale**2 == pytest.approx(1 / 8, rel=1e-13)


class TestClassifyCase:
    """Tests for classify_case."""

    def test_case1(self):
        """B = 0 is Case I."""
        assert classify_case(PhysicalParams.dimensionless(Fraction(0), Fraction(1))) is CaseLabel.CASE_I

    def test_case2_exact(self, case2_params):
        """Bθ = ħ exactly is Case II."""
        assert classify_case(case2_params) is CaseLabel.CASE_II

    def test_case3_worked_point(self):
        """f = 1/10000 with g = 1/400020000 is Case III."""
        p = PhysicalParams.dimensionless(Fraction(1, 10000), Fraction(1, 400020000))
        assert classify_case(p) is CaseLabel.CASE_III

    def test_case2_float_tolerance(self):
        """Float Bθ within tol of ħ maps to Case II."""
        p = PhysicalParams.dimensionless(3.0, 1.0 / 3.0)
        assert classify_case(p) is CaseLabel.CASE_II

    def test_exact_violation(self):
        """Exact Bθ > ħ raises."""
        with pytest.raises(ConstraintViolation):
            classify_case(PhysicalParams.dimensionless(Fraction(1), Fraction(3, 2)))

    def test_float_violation(self):
        """Float Bθ > ħ(1 + tol) raises."""
        with pytest.raises(ConstraintViolation):
            classify_case(PhysicalParams.dimensionless(1.0, 1.5))

    def test_exhaustive(self, rng):
        """Every admissible draw gets exactly one label."""
        for _ in range(100):
            t = float(rng.uniform(0.01, 3.0))
            b = float(rng.choice([0.0, float(rng.uniform(0.0, 1.0)) / t]))
            assert classify_case(PhysicalParams.dimensionless(b, t)) in set(CaseLabel)


class TestQuantumNumbers:
    """Tests for QuantumNumbers."""

    def test_shell(self):
        """shell = 2n_r + |m_l| + 1."""
        assert QuantumNumbers(2, -3).shell == 8

    def test_negative_radial_rejected(self):
        """n_r ≥ 0."""
        with pytest.raises(DomainError):
            QuantumNumbers(-1, 0)

    def test_non_integer_rejected(self):
        """Quantum numbers are integers."""
        with pytest.raises(DomainError):
            QuantumNumbers(0, 1.5)  # type: ignore[arg-type]

    def test_ordering(self):
        """States sort by (n_r, m_l)."""
        assert sorted([QuantumNumbers(1, 0), QuantumNumbers(0, 9)]) == [QuantumNumbers(0, 9), QuantumNumbers(1, 0)]


class TestFieldScales:
    """Tests for f/g conversions and presets."""

    def test_f_round_trip(self):
        """field_from_f inverts f_exp."""
        B = field_from_f(Fraction(1, 10000), ELECTRON_MASS, ELECTRON_OMEGA)
        assert f_exp(B, ELECTRON_MASS, ELECTRON_OMEGA) == pytest.approx(1e-4, rel=1e-14)

    def test_theta_from_g(self):
        """θ = g·ħ/(mω)."""
        assert theta_from_g(Fraction(1, 2), 2.0, 4.0, hbar=8.0) == pytest.approx(0.5)

    def test_quantum_hall_field(self):
        """Twelve units of field times the charge."""
        assert quantum_hall_field() == pytest.approx(12 * ELEMENTARY_CHARGE)
        assert quantum_hall_field(2.0) == 24.0
