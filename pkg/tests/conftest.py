# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Shared fixtures: parameter sets for the three regimes."""

import math
from fractions import Fraction

import numpy as np
import pytest

from nc_oscillator.physics.params import PhysicalParams, effective_params


@pytest.fixture
def case1_params():
    """B = 0 with θ = 1/√2, so κ = 1/3."""
    return PhysicalParams.dimensionless(Fraction(0), 1 / math.sqrt(2))


@pytest.fixture
def case2_params():
    """Bθ = ħ exactly (B = θ = 1)."""
    return PhysicalParams.dimensionless(Fraction(1), Fraction(1))


@pytest.fixture
def case3_params():
    """f = g = 1/10."""
    return PhysicalParams.dimensionless(Fraction(1, 10), Fraction(1, 10))


@pytest.fixture
def case1_effective(case1_params):
    return effective_params(case1_params)


@pytest.fixture
def rng():
    """Deterministic generator for property checks."""
    return np.random.default_rng(20250101)
