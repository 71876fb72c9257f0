# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Closed-form energy spectrum.

    E(n_r, m_l) = (2n_r + |m_l| + 1)ħΩ − m_l ħγ

In units of ħΩ the coefficient is (2n_r + |m_l| + 1) − m_l·(γ/Ω); when the
ratio is rational the coefficient is exact and degeneracies can be decided
without floating-point comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import BudgetExceeded, DomainError
from .params import EffectiveParams, QuantumNumbers


def energy(e: EffectiveParams, q: QuantumNumbers) -> float:
    """Energy eigenvalue in the units of ``e`` (J in SI mode, ħω otherwise)."""
    return q.shell * e.hbar * e.Omega - q.m_l * e.hbar * e.gamma


def energy_coefficient(e: EffectiveParams, q: QuantumNumbers) -> float:
    """Energy in units of ħΩ (float)."""
    return q.shell - q.m_l * e.ratio


def _check_ratio(ratio: Fraction, allow_one: bool = True) -> Fraction:
    if isinstance(ratio, bool) or not isinstance(ratio, (Fraction, int)):
        raise DomainError(f"Exact coefficients need a rational ratio (got {ratio!r})")
    ratio = Fraction(ratio)
    upper_ok = ratio <= 1 if allow_one else ratio < 1
    if not (ratio > 0 and upper_ok):
        raise DomainError(f"Ratio must lie in (0, 1{']' if allow_one else ')'} (got {ratio})")
    return ratio


def energy_coefficient_exact(kappa_or_xi: Fraction, q: QuantumNumbers) -> Fraction:
    """Exact coefficient of ħΩ: (2n_r + |m_l| + 1) − m_l·ratio.

    Args:
        kappa_or_xi: γ/Ω as a rational in (0, 1]; 1 is the Landau limit.
        q: Quantum numbers.
    """
    ratio = _check_ratio(kappa_or_xi)
    return q.shell - q.m_l * ratio


def min_energy_steps(kappa: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Minimal level spacings in units of ħΩ.

    Returns:
        (1 − κ, 1 + κ, 2): raising m_l ≥ 0 by one, lowering m_l ≤ 0 by one,
        raising n_r by one. Strictly increasing for 0 < κ < 1.
    """
    kappa = _check_ratio(kappa, allow_one=False)
    return (1 - kappa, 1 + kappa, Fraction(2))


def spectrum_rows(
    e: EffectiveParams,
    n_r_max: int,
    m_l_min: int,
    m_l_max: int,
    *,
    ratio: Fraction | None = None,
    state_cap: int | None = None,
) -> list[dict[str, Any]]:
    """Energy rows over the box 0 ≤ n_r ≤ n_r_max, m_l_min ≤ m_l ≤ m_l_max.

    The coefficient of ħΩ is exact when ``ratio`` (γ/Ω as a Fraction) is
    given, float otherwise. An empty m_l range gives no rows.

    Raises:
        BudgetExceeded: If the box holds more than ``state_cap`` states.
    """
    if n_r_max < 0:
        raise DomainError(f"n_r_max must be non-negative (got {n_r_max})")
    count = (n_r_max + 1) * max(0, m_l_max - m_l_min + 1)
    if state_cap is not None and count > state_cap:
        raise BudgetExceeded(f"Table holds {count} states, cap is {state_cap}")
    rows = []
    for n_r in range(n_r_max + 1):
        for m_l in range(m_l_min, m_l_max + 1):
            q = QuantumNumbers(n_r, m_l)
            coefficient = energy_coefficient(e, q) if ratio is None else energy_coefficient_exact(ratio, q)
            rows.append({"n_r": n_r, "m_l": m_l, "coefficient": coefficient, "energy": energy(e, q)})
    return rows


def low_lying_table(e: EffectiveParams, n_r_max: int, m_l_max: int) -> list[dict[str, Any]]:
    """Energies of the lowest states as ``aΩ − bγ`` plus their numeric value.

    Rows cover 0 ≤ n_r ≤ n_r_max and |m_l| ≤ m_l_max, sorted by energy.
    """
    rows = []
    for n_r in range(n_r_max + 1):
        for m_l in range(-m_l_max, m_l_max + 1):
            q = QuantumNumbers(n_r, m_l)
            rows.append(
                {
                    "n_r": n_r,
                    "m_l": m_l,
                    "omega_coefficient": q.shell,
                    "gamma_coefficient": m_l,
                    "energy": energy(e, q),
                }
            )
    rows.sort(key=lambda row: (row["energy"], row["n_r"], row["m_l"]))
    return rows


__all__ = [
    "energy",
    "energy_coefficient",
    "energy_coefficient_exact",
    "low_lying_table",
    "min_energy_steps",
    "spectrum_rows",
]
