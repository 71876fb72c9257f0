# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Probability density rasters and spreads."""

from .endpoint import DensityEndpoint

__all__ = ["DensityEndpoint"]
