# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Run configuration and its resolution for CLI commands.

Every command works on one frozen RunConfig. Values are resolved in this
order, first hit wins:

    1. Command-line flags (``--B``, ``--theta``, ``--tol fd=1e-7`` ...)
    2. Config file given with ``--config PATH``
    3. Environment (NC_OSC_* variables, see oscillator_base.config_from_env)
    4. Built-in defaults

Config file format is flat ``key = value`` text; tolerance and cap entries
use dotted keys::

    # electron, no field
    units = si
    B = 0
    theta = 5.395e-21
    output_format = json
    tolerances.fd = 1e-7
    caps.resolution = 1024

Physical values are kept as text until :meth:`RunConfig.physical_params`,
so ``1/10000`` stays an exact rational.

Example:
    ::

        ctx = CliContext()
        config = ctx.resolve({"units": "dimensionless", "B": "1", "theta": "1"})
        config.physical_params()     # PhysicalParams(... B=Fraction(1) ...)
"""

from __future__ import annotations

import configparser
import os
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..export.writers import OutputFormat
from ..oracle.suites import DEFAULT_TOLERANCES
from ..physics.degeneracy import DEFAULT_STATE_CAP
from ..physics.errors import DomainError
from ..physics.params import (
    ELECTRON_MASS,
    ELECTRON_OMEGA,
    HBAR_SI,
    EffectiveParams,
    PhysicalParams,
    UnitsMode,
    classify_case,
    effective_params,
)
from ..physics.rational import NotRational, format_quantity, parse_quantity, ratio_exact
from ..physics.wavefunctions import DEFAULT_RESOLUTION_CAP

if TYPE_CHECKING:
    from ..oscillator_base import OscillatorConfig

DEFAULT_CAPS: dict[str, int] = {"states": DEFAULT_STATE_CAP, "resolution": DEFAULT_RESOLUTION_CAP}
_CONFIG_SECTION = "run"
_NESTED_KEYS = ("tolerances", "caps")


class RunConfig(BaseModel):
    """Validated configuration of one command run.

    Attributes:
        units: Interpretation of mass, omega, B, theta, hbar.
        mass, omega, B, theta, hbar: Physical inputs as text; ``p/q`` is exact.
        output_format: File format used with ``output_path``.
        output_path: Where to write the result; None prints only.
        tolerances: Per-check tolerances (case, fd, commutator, residual, normalization).
        caps: Budgets (states, resolution).
        threads: Worker threads for enumeration and raster paths.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    units: UnitsMode = UnitsMode.DIMENSIONLESS
    mass: str | None = None
    omega: str | None = None
    B: str = "0"
    theta: str | None = None
    hbar: str | None = None
    output_format: OutputFormat = OutputFormat.CSV
    output_path: Path | None = None
    tolerances: dict[str, float] = Field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    caps: dict[str, int] = Field(default_factory=lambda: dict(DEFAULT_CAPS))
    threads: int = Field(default=1, ge=1)

    @field_validator("mass", "omega", "B", "theta", "hbar")
    @classmethod
    def _numeric_text(cls, value: str | None) -> str | None:
        if value is not None:
            parse_quantity(value)
        return value

    @field_validator("tolerances")
    @classmethod
    def _known_tolerances(cls, value: dict[str, float]) -> dict[str, float]:
        unknown = set(value) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise ValueError(f"unknown tolerances: {sorted(unknown)}")
        if any(not v > 0 for v in value.values()):
            raise ValueError("tolerances must be positive")
        return {**DEFAULT_TOLERANCES, **value}

    @field_validator("caps")
    @classmethod
    def _known_caps(cls, value: dict[str, int]) -> dict[str, int]:
        unknown = set(value) - set(DEFAULT_CAPS)
        if unknown:
            raise ValueError(f"unknown caps: {sorted(unknown)}")
        if any(v < 1 for v in value.values()):
            raise ValueError("caps must be positive")
        return {**DEFAULT_CAPS, **value}

    @field_validator("output_path")
    @classmethod
    def _writable(cls, value: Path | None) -> Path | None:
        if value is None:
            return value
        if value.is_dir():
            raise ValueError(f"output path {value} is a directory")
        parent = value.parent if str(value.parent) else Path(".")
        if parent.exists() and not os.access(parent, os.W_OK):
            raise ValueError(f"output directory {parent} is not writable")
        return value

    def physical_params(self) -> PhysicalParams:
        """Build PhysicalParams from the text fields.

        Dimensionless mode defaults mass, omega and hbar to 1; SI mode
        defaults to the electron preset and the CODATA ħ.

        Raises:
            DomainError: If theta is missing or the values are invalid.
        """
        if self.theta is None:
            raise DomainError("theta is required (--theta or 'theta' in the config file)")
        B = parse_quantity(self.B)
        theta = parse_quantity(self.theta)
        if self.units is UnitsMode.DIMENSIONLESS:
            return PhysicalParams(
                mass=parse_quantity(self.mass or "1"),
                omega=parse_quantity(self.omega or "1"),
                B=B,
                theta=theta,
                hbar=parse_quantity(self.hbar or "1"),
                units=UnitsMode.DIMENSIONLESS,
                case_tol=self.tolerances["case"],
            )
        return PhysicalParams.si(
            mass=parse_quantity(self.mass) if self.mass else ELECTRON_MASS,
            omega=parse_quantity(self.omega) if self.omega else ELECTRON_OMEGA,
            B=B,
            theta=theta,
            hbar=parse_quantity(self.hbar) if self.hbar else HBAR_SI,
            case_tol=self.tolerances["case"],
        )

    def scales(self) -> tuple[float, float, float]:
        """(m, ω, ħ) as floats; usable without theta."""
        if self.units is UnitsMode.DIMENSIONLESS:
            return tuple(float(parse_quantity(v or "1")) for v in (self.mass, self.omega, self.hbar))  # type: ignore[return-value]
        return (
            float(parse_quantity(self.mass)) if self.mass else ELECTRON_MASS,
            float(parse_quantity(self.omega)) if self.omega else ELECTRON_OMEGA,
            float(parse_quantity(self.hbar)) if self.hbar else HBAR_SI,
        )

    def effective(self) -> EffectiveParams:
        """Effective parameters with the configured Case II tolerance."""
        return effective_params(self.physical_params(), self.tolerances["case"])

    def ratio(self, override: str | None = None) -> Fraction | NotRational:
        """γ/Ω for this run.

        ``override`` (``"1/3"``, ``"0.25"``) is read as an exact rational and
        wins; otherwise the ratio comes from B and theta, exact when both are
        rational in dimensionless mode.

        Raises:
            DomainError: If the override is not a number.
        """
        if override is not None:
            try:
                return Fraction(override.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"ratio must be a rational like 1/3 (got {override!r})") from exc
        p = self.physical_params()
        classify_case(p, self.tolerances["case"])
        b, t = p.to_dimensionless()
        if p.is_exact:
            return ratio_exact(b, t)
        return NotRational(self.effective().ratio)

    def echo(self) -> dict[str, str]:
        """Parameter echo for file headers; only units when theta is unset."""
        if self.theta is None:
            return {"units": self.units.value}
        p = self.physical_params()
        return {
            "units": p.units.value,
            "mass": format_quantity(p.mass),
            "omega": format_quantity(p.omega),
            "B": format_quantity(p.B),
            "theta": format_quantity(p.theta),
            "hbar": format_quantity(p.hbar),
        }


def _merge(base: dict[str, Any], layer: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in layer.items():
        if value is None:
            continue
        if key in _NESTED_KEYS and isinstance(value, dict):
            merged[key] = {**merged.get(key, {}), **value}
        else:
            merged[key] = value
    return merged


class CliContext:
    """Resolves RunConfig from flags, config file and environment.

    Attributes:
        env: Process-level OscillatorConfig (NC_OSC_* variables).
    """

    def __init__(self, env: OscillatorConfig | None = None):
        from ..oscillator_base import config_from_env

        self.env = env or config_from_env()

    def env_defaults(self) -> dict[str, Any]:
        """RunConfig fields supplied by the environment."""
        return {
            "units": self.env.units,
            "tolerances": {"case": self.env.case_tol},
            "caps": {"states": self.env.state_cap, "resolution": self.env.resolution_cap},
            "threads": self.env.threads,
        }

    def read_config_file(self, path: str | Path) -> dict[str, Any]:
        """Parse a flat ``key = value`` file into RunConfig fields.

        Raises:
            DomainError: If the file does not exist or is malformed.
        """
        path = Path(path)
        if not path.is_file():
            raise DomainError(f"Config file not found: {path}")
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str  # type: ignore[assignment,method-assign]
        try:
            parser.read_string(f"[{_CONFIG_SECTION}]\n" + path.read_text(encoding="utf-8"), source=str(path))
        except configparser.Error as exc:
            raise DomainError(f"Malformed config file {path}: {exc}") from exc

        values: dict[str, Any] = {}
        for key, value in parser[_CONFIG_SECTION].items():
            group, dot, name = key.partition(".")
            if dot and group in _NESTED_KEYS:
                values.setdefault(group, {})[name] = value
            else:
                values[key] = value
        return values

    def resolve(self, flags: dict[str, Any] | None = None, config_path: str | Path | None = None) -> RunConfig:
        """Merge the layers and validate.

        Raises:
            pydantic.ValidationError: On unknown keys or invalid values.
            DomainError: If the config file cannot be read.
        """
        merged = self.env_defaults()
        if config_path is not None:
            merged = _merge(merged, self.read_config_file(config_path))
        merged = _merge(merged, flags or {})
        if UnitsMode(merged["units"]) is UnitsMode.SI and not merged.get("hbar"):
            merged["hbar"] = repr(self.env.hbar)
        return RunConfig.model_validate(merged)


__all__ = ["DEFAULT_CAPS", "CliContext", "RunConfig"]
