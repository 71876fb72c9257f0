# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Process configuration and the application object behind ``ncosc``.

This module defines:
- OscillatorConfig: Process-level defaults (threads, caps, constants)
- config_from_env(): Factory building OscillatorConfig from NC_OSC_* env vars
- OscillatorBase: Holds the config, discovered endpoints and the CLI manager

Configuration via environment variables:
    NC_OSC_THREADS: Worker threads for enumeration and rasters (default: 1)
    NC_OSC_STATE_CAP: State-count cap for level grouping (default: 10000000)
    NC_OSC_RESOLUTION_CAP: Largest density raster side (default: 4096)
    NC_OSC_CASE_TOL: Relative tolerance on Bθ = ħ (default: 1e-12)
    NC_OSC_HBAR: ħ in J·s for SI runs (default: 1.054571817e-34)
    NC_OSC_CHARGE: Unit charge in C for the quantum Hall preset (default: 1.602176634e-19)
    NC_OSC_UNITS: Default units, ``si`` or ``dimensionless`` (default: dimensionless)

Usage:
    config = config_from_env()
    app = OscillatorBase(config=config)
    app.cli.cli()
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from .interface.cli_base import CliManager
from .interface.cli_context import CliContext
from .interface.endpoint_base import EndpointManager
from .physics.degeneracy import DEFAULT_STATE_CAP
from .physics.errors import DomainError
from .physics.params import DEFAULT_CASE_TOL, ELEMENTARY_CHARGE, HBAR_SI, UnitsMode
from .physics.wavefunctions import DEFAULT_RESOLUTION_CAP

logger = logging.getLogger(__name__)


@dataclass
class OscillatorConfig:
    """Process-level configuration.

    Attributes:
        threads: Parallelism cap for enumeration and raster paths.
        state_cap: Largest box accepted by level grouping.
        resolution_cap: Largest raster side accepted by density commands.
        case_tol: Relative tolerance for Case II detection in float mode.
        hbar: Reduced Planck constant used by SI runs.
        charge: Unit charge used by the quantum Hall field preset.
        units: Default units when a run does not say.
    """

    threads: int = 1
    state_cap: int = DEFAULT_STATE_CAP
    resolution_cap: int = DEFAULT_RESOLUTION_CAP
    case_tol: float = DEFAULT_CASE_TOL
    hbar: float = HBAR_SI
    charge: float = ELEMENTARY_CHARGE
    units: UnitsMode = UnitsMode.DIMENSIONLESS


def _env_number(name: str, kind: type, default: int | float) -> int | float:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = kind(raw)
    except ValueError as exc:
        raise DomainError(f"{name}={raw!r} is not a valid {kind.__name__}") from exc
    if not value > 0:
        raise DomainError(f"{name} must be positive (got {raw!r})")
    return value


def config_from_env() -> OscillatorConfig:
    """Build OscillatorConfig from NC_OSC_* environment variables.

    Returns:
        OscillatorConfig populated from the environment.

    Raises:
        DomainError: If a variable is set to an invalid value.
    """
    units = os.environ.get("NC_OSC_UNITS", UnitsMode.DIMENSIONLESS.value).strip().lower()
    try:
        units_mode = UnitsMode(units)
    except ValueError as exc:
        raise DomainError(f"NC_OSC_UNITS must be 'si' or 'dimensionless' (got {units!r})") from exc
    return OscillatorConfig(
        threads=int(_env_number("NC_OSC_THREADS", int, 1)),
        state_cap=int(_env_number("NC_OSC_STATE_CAP", int, DEFAULT_STATE_CAP)),
        resolution_cap=int(_env_number("NC_OSC_RESOLUTION_CAP", int, DEFAULT_RESOLUTION_CAP)),
        case_tol=float(_env_number("NC_OSC_CASE_TOL", float, DEFAULT_CASE_TOL)),
        hbar=float(_env_number("NC_OSC_HBAR", float, HBAR_SI)),
        charge=float(_env_number("NC_OSC_CHARGE", float, ELEMENTARY_CHARGE)),
        units=units_mode,
    )


class OscillatorBase:
    """Foundation layer: config, endpoints, CLI.

    Attributes:
        config: OscillatorConfig with the process defaults.
        endpoints: EndpointManager with autodiscovered Endpoint instances.
        cli: CliManager (creates the Click group lazily).

    Class Attributes (override in subclass):
        entity_package: Package scanned for ``<entity>/endpoint.py``.
    """

    entity_package: str = "nc_oscillator.entities"

    def __init__(self, config: OscillatorConfig | None = None):
        self.config = config or OscillatorConfig()

        self.endpoints = EndpointManager(parent=self)
        self.endpoints.discover(self.entity_package)
        logger.debug("discovered endpoints: %s", ", ".join(self.endpoints))

        self.cli = CliManager(parent=self, cli_context=CliContext(env=self.config))


__all__ = ["OscillatorBase", "OscillatorConfig", "config_from_env"]
