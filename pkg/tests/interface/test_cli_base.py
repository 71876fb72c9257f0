# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Tests for CLI command generation from endpoints."""

import inspect
from fractions import Fraction
from typing import Any, Literal
from unittest.mock import patch

import click
import numpy as np
import pytest
from click.testing import CliRunner

from nc_oscillator.interface.cli_base import (
    CliManager,
    _annotation_to_click_type,
    _display,
    _key_values,
    _print_result,
    _run_flags,
    register_endpoint,
)
from nc_oscillator.interface.cli_context import CliContext, RunConfig
from nc_oscillator.interface.endpoint_base import BaseEndpoint, endpoint
from nc_oscillator.oscillator_base import OscillatorBase, OscillatorConfig
from nc_oscillator.physics.errors import BudgetExceeded
from nc_oscillator.physics.params import QuantumNumbers
from nc_oscillator.physics.wavefunctions import DensityGrid


class SampleEndpoint(BaseEndpoint):
    """Sample commands."""

    name = "sample"

    async def show(self, config: RunConfig, count: int, label: str = "x", loud: bool = False) -> dict:
        """Echo arguments and the resolved theta."""
        return {"theta": config.theta, "count": count, "label": label, "loud": loud, "threads": config.threads}

    async def explode(self, config: RunConfig) -> dict:
        """Always over budget."""
        raise BudgetExceeded("too many states")

    async def check(self, config: RunConfig) -> dict:
        """A failed verification."""
        return {"passed": False}

    async def rows(self, config: RunConfig) -> dict:
        """A small table."""
        return {"params": config.echo(), "rows": [{"n_r": 0, "coefficient": Fraction(1, 3)}]}

    @endpoint(cli=False)
    async def hidden(self) -> dict:
        return {}


@pytest.fixture
def group():
    """A root group with the sample endpoint registered."""
    root = click.Group()
    register_endpoint(root, SampleEndpoint(), cli_context=CliContext(env=OscillatorConfig()))
    return root


@pytest.fixture
def runner():
    return CliRunner()


class TestAnnotationToClickType:
    """Tests for _annotation_to_click_type function."""

    def test_empty_annotation_returns_str(self):
        """Empty annotation defaults to str."""
        assert _annotation_to_click_type(inspect.Parameter.empty) is str

    def test_any_annotation_returns_str(self):
        """Any annotation defaults to str."""
        assert _annotation_to_click_type(Any) is str

    def test_primitives(self):
        """int, bool and float map to themselves."""
        assert _annotation_to_click_type(int) is int
        assert _annotation_to_click_type(bool) is bool
        assert _annotation_to_click_type(float) is float

    def test_optional_int_returns_int(self):
        """Optional[int] returns int."""
        assert _annotation_to_click_type(int | None) is int

    def test_literal_returns_choice(self):
        """Literal returns click.Choice."""
        result = _annotation_to_click_type(Literal["positive", "negative"])
        assert isinstance(result, click.Choice)
        assert list(result.choices) == ["positive", "negative"]


class TestDisplay:
    """Tests for console formatting of values."""

    def test_fraction(self):
        """Fractions print as p/q."""
        assert _display(Fraction(40003, 800040001)) == "40003/800040001"

    def test_states(self):
        """Lists of states print as pairs."""
        assert _display([QuantumNumbers(0, 9), QuantumNumbers(1, 6)]) == "(0, 9), (1, 6)"

    def test_grid(self):
        """Rasters print as a short summary."""
        grid = DensityGrid(radius=2.0, resolution=3, values=np.zeros((3, 3)), metadata={})
        assert _display(grid) == "<raster 3x3, radius 2>"

    def test_enum_value(self):
        """Enums print their value."""
        from nc_oscillator.physics.params import CaseLabel

        assert _display(CaseLabel.CASE_I) == "CaseI_NoField"


class TestPrintResult:
    """Tests for _print_result function."""

    def test_print_dict(self):
        """Print dict as key-value pairs."""
        with patch("nc_oscillator.interface.cli_base.console") as mock_console:
            _print_result({"key1": "value1", "key2": "value2"})
            assert mock_console.print.call_count == 2

    def test_print_nested_rows_as_table(self):
        """Lists of dicts become one titled table."""
        with patch("nc_oscillator.interface.cli_base.console") as mock_console:
            _print_result({"rows": [{"a": 1}, {"a": 2}]})
            assert mock_console.print.call_count == 1

    def test_print_scalar(self):
        """Scalars print once."""
        with patch("nc_oscillator.interface.cli_base.console") as mock_console:
            _print_result(Fraction(1, 3))
            mock_console.print.assert_called_once_with("1/3")


class TestRunFlags:
    """Tests for run option translation."""

    def test_key_values(self):
        """name=value pairs become a dict."""
        assert _key_values(("fd=1e-7", " residual = 1e-5 "), "--tol") == {"fd": "1e-7", "residual": "1e-5"}

    def test_key_values_malformed(self):
        """Pairs without '=' are a usage error."""
        with pytest.raises(click.BadParameter):
            _key_values(("fd",), "--tol")

    def test_dimensionless_flag(self):
        """--dimensionless sets the units."""
        flags = _run_flags({"dimensionless": True, "units": "si"})
        assert flags["units"] == "dimensionless"

    def test_unset_values_are_none(self):
        """Missing options stay None so lower layers win."""
        flags = _run_flags({})
        assert flags["theta"] is None
        assert flags["tolerances"] is None
        assert flags["caps"] is None


class TestGeneratedCommands:
    """Tests for commands generated by register_endpoint."""

    def test_commands_registered(self, group):
        """Public CLI methods become commands; cli=False ones do not."""
        sample = group.commands["sample"]
        assert set(sample.commands) == {"show", "explode", "check", "rows"}

    def test_arguments_options_and_flags(self, group, runner):
        """Required params are positional, others options, bools toggles."""
        result = runner.invoke(group, ["sample", "show", "3", "--label", "y", "--loud", "--theta", "1/2", "--threads", "2"])
        assert result.exit_code == 0, result.output
        assert "count: 3" in result.output
        assert "label: y" in result.output
        assert "loud: True" in result.output
        assert "theta: 1/2" in result.output
        assert "threads: 2" in result.output

    def test_budget_exit_code(self, group, runner):
        """OscillatorError subclasses exit with their code."""
        result = runner.invoke(group, ["sample", "explode"])
        assert result.exit_code == 3

    def test_invalid_configuration_exit_code(self, group, runner):
        """Invalid run configuration exits with 2."""
        result = runner.invoke(group, ["sample", "rows", "--tol", "bogus=1"])
        assert result.exit_code == 2

    def test_failed_verification_exit_code(self, group, runner):
        """passed = False exits with 1."""
        result = runner.invoke(group, ["sample", "check"])
        assert result.exit_code == 1

    def test_writes_output(self, group, runner, tmp_path):
        """--out writes the result in the requested format."""
        target = tmp_path / "rows.csv"
        result = runner.invoke(group, ["sample", "rows", "--theta", "1", "--out", str(target), "--format", "csv"])
        assert result.exit_code == 0, result.output
        assert target.read_text().splitlines()[-1] == "0,1/3"


class TestCliManager:
    """Tests for CliManager."""

    def test_lazy_group(self):
        """The group is built once on first access."""
        manager = OscillatorBase(OscillatorConfig()).cli
        assert manager._cli is None
        assert manager.cli is manager.cli

    def test_endpoint_groups(self):
        """Every discovered endpoint becomes a subgroup."""
        cli = CliManager(OscillatorBase(OscillatorConfig())).cli
        assert set(cli.commands) == {"spectrum", "degeneracy", "density", "verify"}

    def test_log_level_choice(self):
        """--log-level rejects unknown levels."""
        cli = OscillatorBase(OscillatorConfig()).cli.cli
        result = CliRunner().invoke(cli, ["--log-level", "LOUD", "spectrum", "--help"])
        assert result.exit_code == 2
