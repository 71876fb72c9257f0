# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Degeneracy commands: θ_d constructions, grouped levels and partners.

Example:
    CLI commands auto-generated::

        ncosc degeneracy case1 1 1 --units si
        ncosc degeneracy case3 20001 20000 --f 1/10000
        ncosc degeneracy scan --kind case3 --f 1/10 --n-max 6 --k-max 5
        ncosc degeneracy levels --ratio 1/3 --m-l-max 11
        ncosc degeneracy profile --ratio 1/3 --coefficient-max 7 --sign nonnegative
        ncosc degeneracy partners --n-r 0 --m-l 9 --ratio 1/3
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Literal

from ...interface.cli_context import RunConfig
from ...interface.endpoint_base import BaseEndpoint
from ...physics.degeneracy import (
    CaseIDegeneracySpec,
    CaseIIIDegeneracySpec,
    EnergyLevel,
    SignFilter,
    case3_specs,
    degeneracy_count_profile,
    f_candidates,
    group_levels,
    kappa_indices,
    partners_case_negative,
    partners_case_positive,
    scan_case1,
    scan_case3,
    theta_d_case1,
    xi_exact,
)
from ...physics.errors import CaseMismatch, DomainError
from ...physics.params import (
    ELEMENTARY_CHARGE,
    CaseLabel,
    QuantumNumbers,
    classify_case,
    f_exp,
    quantum_hall_field,
)
from ...physics.rational import parse_quantity
from ...physics.spectrum import energy_coefficient_exact

logger = logging.getLogger(__name__)

SATURATED_MESSAGE = "every level infinitely degenerate; theta_d = theta"


def _rational(name: str, text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"{name} must be a rational like 1/10000 (got {text!r})") from exc


def _level_rows(levels: list[EnergyLevel], degenerate_only: bool = False) -> list[dict[str, Any]]:
    return [
        {"coefficient": level.coefficient, "degeneracy": level.degeneracy, "states": list(level.states)}
        for level in levels
        if not degenerate_only or level.degeneracy > 1
    ]


def _case1_row(spec: CaseIDegeneracySpec, scales: tuple[float, float, float]) -> dict[str, Any]:
    mass, omega, hbar = scales
    return {
        "n": spec.n,
        "k": spec.k,
        "kappa": spec.kappa,
        "c_squared": spec.c_squared,
        "theta_d": theta_d_case1(mass, omega, hbar, spec),
    }


def _case3_row(spec: CaseIIIDegeneracySpec, scales: tuple[float, float, float]) -> dict[str, Any]:
    mass, omega, hbar = scales
    return {
        "n": spec.n,
        "k": spec.k,
        "branch": spec.branch,
        "f": spec.f_exp,
        "g": spec.g,
        "xi": spec.xi,
        "theta_d": spec.theta_d(mass, omega, hbar),
    }


class DegeneracyEndpoint(BaseEndpoint):
    """Exact degeneracy structure of the spectrum.

    Attributes:
        name: CLI group name ("degeneracy").
    """

    name = "degeneracy"

    def _field_scale(self, config: RunConfig, f: str | None, quantum_hall: bool) -> Fraction:
        if f is not None:
            return _rational("f", f)
        if quantum_hall:
            mass, omega, _ = config.scales()
            charge = self.oscillator.config.charge if self.oscillator else ELEMENTARY_CHARGE
            value = f_exp(quantum_hall_field(charge), mass, omega)
            # one significant digit, as the quantum Hall estimate is quoted
            rounded = Fraction(f"{value:.0e}")
            logger.info("quantum Hall field scale f=%r rounded to %s", value, rounded)
            return rounded
        raise DomainError("pass --f, --g or --quantum-hall")

    async def case1(
        self,
        config: RunConfig,
        n: int,
        k: int,
        n_r_max: int = 3,
        m_l_min: int = 0,
        m_l_max: int = 11,
    ) -> dict[str, Any]:
        """θ_d and grouped levels for κ = k/(2n + k) (no field).

        With Bθ = ħ every level is infinitely degenerate and θ_d = θ.
        """
        if config.theta is not None:
            p = config.physical_params()
            case = classify_case(p, config.tolerances["case"])
            if case is CaseLabel.CASE_II:
                return {"params": config.echo(), "case": case, "message": SATURATED_MESSAGE, "theta_d": p.theta}
            if case is CaseLabel.CASE_III:
                raise CaseMismatch("case1 needs B = 0; use 'degeneracy case3' for 0 < B·theta < hbar")
        elif parse_quantity(config.B) != 0:
            raise CaseMismatch("case1 needs B = 0")

        spec = CaseIDegeneracySpec(n, k)
        levels = group_levels(
            spec.kappa,
            n_r_max,
            m_l_min,
            m_l_max,
            state_cap=config.caps["states"],
            threads=config.threads,
        )
        return {
            "params": config.echo(),
            "case": CaseLabel.CASE_I,
            **_case1_row(spec, config.scales()),
            "levels": _level_rows(levels),
        }

    async def case3(
        self,
        config: RunConfig,
        n: int,
        k: int,
        f: str | None = None,
        g: str | None = None,
        quantum_hall: bool = False,
    ) -> dict[str, Any]:
        """Rational-ξ constructions for 0 < Bθ < ħ.

        With ``--f`` (or ``--quantum-hall``) the field scale is fixed and g is
        solved for; with ``--g`` the noncommutativity is fixed and f is solved for.
        """
        scales = config.scales()
        if g is not None:
            g_exp = _rational("g", g)
            mass, omega, _ = scales
            rows = [
                {"n": n, "k": k, "f": f_value, "g": g_exp, "xi": xi_exact(f_value, g_exp), "B_d": float(f_value) * mass * omega}
                for f_value in f_candidates(g_exp, n, k)
            ]
            return {"params": config.echo(), "g": g_exp, "specs": rows}

        f_value = self._field_scale(config, f, quantum_hall)
        specs = case3_specs(f_value, n, k)
        return {"params": config.echo(), "f": f_value, "specs": [_case3_row(s, scales) for s in specs]}

    async def scan(
        self,
        config: RunConfig,
        kind: Literal["case1", "case3"] = "case1",
        n_max: int = 5,
        k_max: int = 5,
        f: str | None = None,
    ) -> dict[str, Any]:
        """Enumerate (n, k) constructions, sorted by κ (case1) or by (n, k) (case3)."""
        scales = config.scales()
        if kind == "case1":
            rows = [_case1_row(s, scales) for s in scan_case1(n_max, k_max)]
        else:
            if f is None:
                raise DomainError("scan --kind case3 needs --f")
            rows = [_case3_row(s, scales) for s in scan_case3(_rational("f", f), n_max, k_max)]
        return {"params": config.echo(), "kind": kind, "specs": rows}

    async def levels(
        self,
        config: RunConfig,
        n_r_max: int = 3,
        m_l_min: int = 0,
        m_l_max: int = 11,
        ratio: str | None = None,
        degenerate_only: bool = False,
    ) -> dict[str, Any]:
        """Group the states of a box by exact energy coefficient."""
        kappa = config.ratio(ratio)
        levels = group_levels(
            kappa,
            n_r_max,
            m_l_min,
            m_l_max,
            state_cap=config.caps["states"],
            threads=config.threads,
        )
        return {"params": config.echo(), "ratio": kappa, "levels": _level_rows(levels, degenerate_only)}

    async def profile(
        self,
        config: RunConfig,
        coefficient_max: str = "7",
        sign: Literal["all", "nonnegative", "negative"] = "all",
        m_l_max: int | None = None,
        ratio: str | None = None,
    ) -> dict[str, Any]:
        """State count of every level up to a coefficient of ħΩ."""
        kappa = config.ratio(ratio)
        sign_filter: SignFilter = sign
        counts = degeneracy_count_profile(
            kappa,  # type: ignore[arg-type]
            _rational("coefficient_max", coefficient_max),
            sign=sign_filter,
            m_l_max=m_l_max,
            state_cap=config.caps["states"],
            threads=config.threads,
        )
        rows = [{"coefficient": c, "degeneracy": count} for c, count in counts.items()]
        return {"params": config.echo(), "ratio": kappa, "sign": sign, "levels": rows}

    async def partners(
        self,
        config: RunConfig,
        n_r: int = 0,
        m_l: int = 0,
        n: int | None = None,
        k: int | None = None,
        ratio: str | None = None,
        chain: Literal["positive", "negative"] = "positive",
        steps: int = 5,
    ) -> dict[str, Any]:
        """Walk the chain of degenerate partners of (n_r, m_l).

        (n, k) come from ``--n``/``--k`` or are recovered from the ratio.
        Each step is verified exactly; the walk stops at the first gap.
        """
        if n is None or k is None:
            kappa = config.ratio(ratio)
            if not isinstance(kappa, Fraction):
                raise DomainError("partners need a rational ratio; pass --ratio or --n/--k")
            n, k = kappa_indices(kappa)
        kappa = Fraction(k, 2 * n + k)
        step_fn = partners_case_positive if chain == "positive" else partners_case_negative
        origin = QuantumNumbers(n_r, m_l)

        rows = [{"step": 0, "state": origin, "coefficient": energy_coefficient_exact(kappa, origin)}]
        for direction, index in ((1, 0), (-1, 1)):
            current: QuantumNumbers | None = origin
            for i in range(1, steps + 1):
                current = step_fn(current, n, k)[index]
                if current is None:
                    break
                rows.append(
                    {"step": direction * i, "state": current, "coefficient": energy_coefficient_exact(kappa, current)}
                )
        rows.sort(key=lambda row: row["step"])
        return {"params": config.echo(), "n": n, "k": k, "kappa": kappa, "chain": chain, "states": rows}
