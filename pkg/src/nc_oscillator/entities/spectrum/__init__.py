# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Energy spectrum and regime classification."""

from .endpoint import SpectrumEndpoint

__all__ = ["SpectrumEndpoint"]
