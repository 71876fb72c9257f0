# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Verification command: oracle suites against the closed forms.

Example:
    CLI commands auto-generated::

        ncosc verify run --suite commutators --B 1/2 --theta 1
        ncosc verify run --suite fd --theta 0.70710678 --tol fd=1e-7
        ncosc verify run --suite all --B 1/10 --theta 1/10 --out report.json --format json

A failing check makes the command exit with status 1.
"""

from __future__ import annotations

from typing import Any, Literal

from ...interface.cli_context import RunConfig
from ...interface.endpoint_base import BaseEndpoint
from ...oracle.suites import run_suite


class VerifyEndpoint(BaseEndpoint):
    """Oracle verification suites.

    Attributes:
        name: CLI group name ("verify").
    """

    name = "verify"

    async def run(
        self,
        config: RunConfig,
        suite: Literal["commutators", "fd", "residual", "normalization", "all"] = "all",
    ) -> dict[str, Any]:
        """Run oracle suites with the configured tolerances."""
        report = run_suite(suite, config.physical_params(), config.tolerances)
        return {"params": config.echo(), **report}
