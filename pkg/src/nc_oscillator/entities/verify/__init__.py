# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Oracle verification suites."""

from .endpoint import VerifyEndpoint

__all__ = ["VerifyEndpoint"]
