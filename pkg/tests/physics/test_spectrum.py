# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Tests for physics.spectrum."""

from fractions import Fraction

import pytest

from nc_oscillator.physics.errors import BudgetExceeded, DomainError
from nc_oscillator.physics.params import QuantumNumbers, effective_params
from nc_oscillator.physics.rational import NotRational
from nc_oscillator.physics.spectrum import (
    energy,
    energy_coefficient,
    energy_coefficient_exact,
    low_lying_table,
    min_energy_steps,
    spectrum_rows,
)


class TestEnergy:
    """Tests for the closed-form energy."""

    def test_ground_state_is_omega(self, case1_effective):
        """(0, 0) has energy ħΩ."""
        assert energy(case1_effective, QuantumNumbers(0, 0)) == pytest.approx(case1_effective.Omega)

    def test_landau_form(self, case2_params):
        """Case II: (0, 5) sits on the lowest Landau level."""
        e = effective_params(case2_params)
        assert energy(e, QuantumNumbers(0, 5)) == pytest.approx(1.0, abs=1e-14)

    def test_kappa_one_third_first_excited(self, case1_effective):
        """(0, 1) at κ = 1/3 is (2 − 1/3)ħΩ."""
        value = energy(case1_effective, QuantumNumbers(0, 1))
        assert value == pytest.approx((2 - 1 / 3) * case1_effective.Omega, rel=1e-13)

    def test_sign_asymmetry(self, case3_params):
        """E(n_r, −m_l) − E(n_r, m_l) = 2m_l ħγ."""
        e = effective_params(case3_params)
        for m_l in range(1, 6):
            diff = energy(e, QuantumNumbers(1, -m_l)) - energy(e, QuantumNumbers(1, m_l))
            assert diff == pytest.approx(2 * m_l * e.gamma, rel=1e-12)

    def test_bounded_below(self, case3_params):
        """Every energy is at least ħ(Ω − γ) > 0."""
        e = effective_params(case3_params)
        floor = e.Omega - e.gamma
        assert floor > 0
        for n_r in range(4):
            for m_l in range(-10, 11):
                assert energy(e, QuantumNumbers(n_r, m_l)) >= floor * (1 - 1e-12)

    def test_float_coefficient(self, case1_effective):
        """energy_coefficient is E/(ħΩ)."""
        assert energy_coefficient(case1_effective, QuantumNumbers(0, 9)) == pytest.approx(7.0, rel=1e-12)


class TestEnergyCoefficientExact:
    """Tests for energy_coefficient_exact."""

    def test_table_positive_row(self):
        """κ = 1/3, (0, 9) → 7."""
        assert energy_coefficient_exact(Fraction(1, 3), QuantumNumbers(0, 9)) == 7

    def test_table_negative_row(self):
        """κ = 1/3, (0, −3) → 5."""
        assert energy_coefficient_exact(Fraction(1, 3), QuantumNumbers(0, -3)) == 5

    def test_ground_state(self):
        """(0, 0) → 1 for any ratio."""
        for ratio in (Fraction(1, 3), Fraction(2, 7), Fraction(1)):
            assert energy_coefficient_exact(ratio, QuantumNumbers(0, 0)) == 1

    def test_landau_limit(self):
        """Ratio 1 gives 2n_r + |m_l| + 1 − m_l."""
        assert energy_coefficient_exact(Fraction(1), QuantumNumbers(2, 4)) == 5
        assert energy_coefficient_exact(Fraction(1), QuantumNumbers(0, -2)) == 5

    def test_float_ratio_rejected(self):
        """Only rational ratios give exact coefficients."""
        with pytest.raises(DomainError):
            energy_coefficient_exact(1 / 3, QuantumNumbers(0, 0))  # type: ignore[arg-type]

    def test_not_rational_rejected(self):
        """NotRational is refused."""
        with pytest.raises(DomainError):
            energy_coefficient_exact(NotRational(0.5), QuantumNumbers(0, 0))  # type: ignore[arg-type]

    def test_out_of_range(self):
        """Ratios outside (0, 1] are refused."""
        with pytest.raises(DomainError):
            energy_coefficient_exact(Fraction(3, 2), QuantumNumbers(0, 0))


class TestMinEnergySteps:
    """Tests for min_energy_steps."""

    def test_one_third(self):
        """κ = 1/3 → (2/3, 4/3, 2)."""
        assert min_energy_steps(Fraction(1, 3)) == (Fraction(2, 3), Fraction(4, 3), Fraction(2))

    def test_one_half(self):
        """κ = 1/2 → (1/2, 3/2, 2)."""
        assert min_energy_steps(Fraction(1, 2)) == (Fraction(1, 2), Fraction(3, 2), Fraction(2))

    def test_near_one_ordering(self):
        """κ = 999/1000 keeps the strict ordering."""
        steps = min_energy_steps(Fraction(999, 1000))
        assert steps == (Fraction(1, 1000), Fraction(1999, 1000), Fraction(2))
        assert steps[0] < steps[1] < steps[2]

    def test_one_rejected(self):
        """κ must be strictly below 1."""
        with pytest.raises(DomainError):
            min_energy_steps(Fraction(1))


class TestSpectrumRows:
    """Tests for spectrum_rows."""

    def test_table_ladder(self, case1_effective):
        """κ = 1/3 coefficients start 1, 5/3, 7/3, 3."""
        rows = spectrum_rows(case1_effective, 3, 0, 11, ratio=Fraction(1, 3))
        coefficients = sorted({row["coefficient"] for row in rows})
        assert coefficients[:4] == [Fraction(1), Fraction(5, 3), Fraction(7, 3), Fraction(3)]

    def test_landau_table_odd_only(self, case2_params):
        """Case II coefficients are the odd integers 1..21 on n_r ≤ 5, |m_l| ≤ 5."""
        rows = spectrum_rows(effective_params(case2_params), 5, -5, 5, ratio=Fraction(1))
        coefficients = {row["coefficient"] for row in rows}
        assert coefficients == {Fraction(c) for c in range(1, 22, 2)}

    def test_float_coefficients_without_ratio(self, case1_effective):
        """Without a ratio the coefficient column is float."""
        rows = spectrum_rows(case1_effective, 0, 0, 1)
        assert isinstance(rows[1]["coefficient"], float)
        assert rows[1]["coefficient"] == pytest.approx(5 / 3, rel=1e-12)

    def test_empty_range(self, case1_effective):
        """m_l_min > m_l_max gives no rows."""
        assert spectrum_rows(case1_effective, 3, 1, 0) == []

    def test_budget(self, case1_effective):
        """Boxes beyond the cap raise BudgetExceeded."""
        with pytest.raises(BudgetExceeded):
            spectrum_rows(case1_effective, 9, 0, 9, state_cap=50)

    def test_energy_column(self, case1_effective):
        """Energy matches energy()."""
        rows = spectrum_rows(case1_effective, 1, -1, 1, ratio=Fraction(1, 3))
        for row in rows:
            q = QuantumNumbers(row["n_r"], row["m_l"])
            assert row["energy"] == energy(case1_effective, q)


class TestLowLyingTable:
    """Tests for low_lying_table."""

    def test_sorted_by_energy(self, case3_params):
        """Rows are sorted by energy and start at the ground state."""
        rows = low_lying_table(effective_params(case3_params), 1, 2)
        assert len(rows) == 2 * 5
        assert (rows[0]["n_r"], rows[0]["m_l"]) == (0, 0)
        energies = [row["energy"] for row in rows]
        assert energies == sorted(energies)

    def test_coefficients(self, case1_effective):
        """omega_coefficient is the shell and gamma_coefficient is m_l."""
        rows = low_lying_table(case1_effective, 0, 1)
        row = next(r for r in rows if r["m_l"] == -1)
        assert (row["omega_coefficient"], row["gamma_coefficient"]) == (2, -1)
