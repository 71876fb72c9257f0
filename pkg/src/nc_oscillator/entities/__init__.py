# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Command entities (spectrum, degeneracy, density, verify)."""

from .degeneracy import DegeneracyEndpoint
from .density import DensityEndpoint
from .spectrum import SpectrumEndpoint
from .verify import VerifyEndpoint

__all__ = [
    "DegeneracyEndpoint",
    "DensityEndpoint",
    "SpectrumEndpoint",
    "VerifyEndpoint",
]
