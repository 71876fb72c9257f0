# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Spectrum commands: regime classification and energy tables.

Example:
    CLI commands auto-generated::

        ncosc spectrum classify --B 0 --theta 0.70710678
        ncosc spectrum table --n-r-max 3 --m-l-min 0 --m-l-max 11 --ratio 1/3 --theta 0.70710678
        ncosc spectrum steps --ratio 1/3
        ncosc spectrum low-lying --units si --theta 5.395e-21
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ...interface.cli_context import RunConfig
from ...interface.endpoint_base import BaseEndpoint
from ...physics.params import CaseLabel, classify_case
from ...physics.rational import NotRational
from ...physics.spectrum import low_lying_table, min_energy_steps, spectrum_rows

# Denominator bound used to name a float ratio (0.3333333 → 1/3)
APPROX_DENOMINATOR = 1000

RATIO_NAMES = {CaseLabel.CASE_I: "kappa", CaseLabel.CASE_II: "ratio", CaseLabel.CASE_III: "xi"}


class SpectrumEndpoint(BaseEndpoint):
    """Energy spectrum and regime classification.

    Attributes:
        name: CLI group name ("spectrum").
    """

    name = "spectrum"

    async def classify(self, config: RunConfig) -> dict[str, Any]:
        """Print the case label, M, Ω, γ and κ or ξ.

        The ratio γ/Ω is printed as ``p/q`` when it is exactly rational;
        float ratios also carry their nearest small fraction.
        """
        p = config.physical_params()
        case = classify_case(p, config.tolerances["case"])
        e = config.effective()
        ratio = config.ratio()
        result: dict[str, Any] = {
            "params": config.echo(),
            "case": case,
            "M_eff": e.M_eff,
            "Omega": e.Omega,
            "gamma": e.gamma,
            "L_factor": e.L_factor,
            "ratio_name": RATIO_NAMES[case],
        }
        if isinstance(ratio, NotRational):
            result["ratio"] = ratio.value
            result["ratio_approx"] = Fraction(ratio.value).limit_denominator(APPROX_DENOMINATOR)
        else:
            result["ratio"] = ratio
        return result

    async def table(
        self,
        config: RunConfig,
        n_r_max: int = 3,
        m_l_min: int = -3,
        m_l_max: int = 3,
        ratio: str | None = None,
    ) -> dict[str, Any]:
        """Energy table over 0 ≤ n_r ≤ n_r_max, m_l_min ≤ m_l ≤ m_l_max.

        Args:
            n_r_max: Largest radial quantum number.
            m_l_min: Smallest angular momentum.
            m_l_max: Largest angular momentum.
            ratio: Exact γ/Ω (``p/q``) for the coefficient column when the
                params only approximate it.

        Returns:
            Rows of n_r, m_l, coefficient of ħΩ and energy in run units.
        """
        e = config.effective()
        exact = config.ratio(ratio)
        rows = spectrum_rows(
            e,
            n_r_max,
            m_l_min,
            m_l_max,
            ratio=None if isinstance(exact, NotRational) else exact,
            state_cap=config.caps["states"],
        )
        return {"params": config.echo(), "ratio": exact, "rows": rows}

    async def steps(self, config: RunConfig, ratio: str | None = None) -> dict[str, Any]:
        """Minimal level spacings (1 − κ, 1 + κ, 2) in units of ħΩ."""
        kappa = config.ratio(ratio)
        raise_m, lower_m, raise_n = min_energy_steps(kappa)  # type: ignore[arg-type]
        return {
            "params": config.echo(),
            "ratio": kappa,
            "m_l_up": raise_m,
            "m_l_down": lower_m,
            "n_r_up": raise_n,
        }

    async def low_lying(self, config: RunConfig, n_r_max: int = 1, m_l_max: int = 2) -> dict[str, Any]:
        """Lowest energies written as aΩ − bγ, sorted by energy."""
        rows = low_lying_table(config.effective(), n_r_max, m_l_max)
        return {"params": config.echo(), "rows": rows}
