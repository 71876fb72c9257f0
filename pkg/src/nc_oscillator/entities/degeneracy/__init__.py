# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Exact degeneracy: κ/ξ constructions, level grouping, partners."""

from .endpoint import DegeneracyEndpoint

__all__ = ["DegeneracyEndpoint"]
