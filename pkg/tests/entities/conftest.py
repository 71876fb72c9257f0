# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Shared fixtures for endpoint tests."""

import pytest
from click.testing import CliRunner

from nc_oscillator.oscillator_base import OscillatorBase, OscillatorConfig


@pytest.fixture
def app():
    """OscillatorBase with built-in defaults (no environment)."""
    return OscillatorBase(OscillatorConfig())


@pytest.fixture
def cli(app):
    return app.cli.cli


@pytest.fixture
def runner():
    return CliRunner()
