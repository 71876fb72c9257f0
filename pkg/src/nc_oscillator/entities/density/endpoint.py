# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Density commands: |Ψ|² rasters, state panels and spread sweeps.

Example:
    CLI commands auto-generated::

        ncosc density grid --n-r 0 --m-l 0 --radius 5e-10 --units si --theta 5.395e-21 \\
            --out ground.pgm --format pgm
        ncosc density panel --size 5 --B 1 --theta 1 --out panel.pgm --format pgm
        ncosc density sweep 0.1,0.2,0.4,0.8 --parameter theta
        ncosc density spread --n-r 2 --m-l 1 --B 1/2 --theta 1
"""

from __future__ import annotations

from typing import Any, Literal

import numpy as np

from ...interface.cli_context import RunConfig
from ...interface.endpoint_base import BaseEndpoint
from ...physics.errors import DomainError
from ...physics.params import QuantumNumbers, classify_case
from ...physics.rational import parse_quantity
from ...physics.wavefunctions import (
    Eigenstate,
    density_grid,
    density_panel,
    density_spread_metric,
    radial_maxima,
    spread_sweep,
)


def _trend(values: list[float]) -> str:
    steps = np.diff(np.asarray(values, dtype=float))
    if steps.size and np.all(steps > 0):
        return "increasing"
    if steps.size and np.all(steps < 0):
        return "decreasing"
    return "mixed"


class DensityEndpoint(BaseEndpoint):
    """Probability densities of the symmetric-gauge eigenstates.

    Radii are in the run's length units (m in SI mode).

    Attributes:
        name: CLI group name ("density").
    """

    name = "density"

    def _state(self, config: RunConfig, n_r: int, m_l: int) -> Eigenstate:
        return Eigenstate(config.effective(), QuantumNumbers(n_r, m_l))

    async def grid(
        self,
        config: RunConfig,
        n_r: int = 0,
        m_l: int = 0,
        radius: float | None = None,
        resolution: int = 257,
    ) -> dict[str, Any]:
        """Sample |Ψ|² on a square raster (PGM or CSV with --out).

        Args:
            n_r: Radial quantum number.
            m_l: Angular momentum.
            radius: Half-width of the raster; default 5·√⟨r²⟩.
            resolution: Pixels per side.
        """
        s = self._state(config, n_r, m_l)
        raster = density_grid(
            s,
            radius,
            resolution,
            resolution_cap=config.caps["resolution"],
            threads=config.threads,
        )
        return {
            "params": config.echo(),
            "case": classify_case(config.physical_params(), config.tolerances["case"]),
            "grid": raster,
            "peak_pixel": list(raster.peak_index),
            "rings": radial_maxima(s, raster.radius),
            "spread": density_spread_metric(s),
        }

    async def panel(
        self,
        config: RunConfig,
        size: int = 5,
        radius: float | None = None,
        resolution: int = 129,
    ) -> dict[str, Any]:
        """Rasters of n_r, |m_l| < size on one shared radius.

        With --out each raster goes to ``<stem>_<n_r>_<|m_l|><suffix>``.
        """
        grids = density_panel(
            config.effective(),
            radius,
            resolution,
            size,
            resolution_cap=config.caps["resolution"],
            threads=config.threads,
        )
        states = [
            {
                "n_r": g.metadata["n_r"],
                "m_l": g.metadata["m_l"],
                "peak_pixel": list(g.peak_index),
                "max_density": float(np.max(g.values)),
            }
            for g in grids
        ]
        return {"params": config.echo(), "radius": grids[0].radius, "grids": grids, "states": states}

    async def sweep(
        self,
        config: RunConfig,
        values: str,
        parameter: Literal["theta", "B", "saturated_B"] = "theta",
        n_r: int = 0,
        m_l: int = 0,
    ) -> dict[str, Any]:
        """√⟨r²⟩ while theta or B runs over comma-separated VALUES.

        ``saturated_B`` moves B along Bθ = ħ (θ = ħ/B).
        """
        try:
            points = [parse_quantity(v) for v in values.split(",") if v.strip()]
        except ValueError as exc:
            raise DomainError(f"values must be comma-separated numbers (got {values!r})") from exc
        if not points:
            raise DomainError("values is empty")
        base = config
        if config.theta is None and parameter != "B":
            # seed only; replaced on every point
            base = config.model_copy(update={"theta": "1"})
        rows = spread_sweep(
            base.physical_params(),
            parameter,
            points,
            QuantumNumbers(n_r, m_l),
            config.tolerances["case"],
        )
        return {
            "params": config.echo(),
            "parameter": parameter,
            "trend": _trend([row["spread"] for row in rows]),
            "rows": rows,
        }

    async def spread(self, config: RunConfig, n_r: int = 0, m_l: int = 0) -> dict[str, Any]:
        """Length scale, rms radius and ring count of one state."""
        s = self._state(config, n_r, m_l)
        return {
            "params": config.echo(),
            "case": classify_case(config.physical_params(), config.tolerances["case"]),
            "length_scale": s.length_scale,
            "spread": density_spread_metric(s),
            "rings": radial_maxima(s),
        }
