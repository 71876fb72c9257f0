# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Interface layer: endpoints, run configuration and the generated CLI.

- endpoint_base: BaseEndpoint with introspection, EndpointManager discovery
- cli_base: Click command generation from endpoint signatures
- cli_context: RunConfig and its resolution (flags, config file, environment)

Example:
    ::

        from nc_oscillator.interface import BaseEndpoint, RunConfig, endpoint

        class SpectrumEndpoint(BaseEndpoint):
            name = "spectrum"

            async def steps(self, config: RunConfig, ratio: str | None = None) -> dict:
                ...

            @endpoint(cli=False)
            async def raw(self, config: RunConfig) -> dict:
                \"\"\"Library only.\"\"\"
                ...
"""

from .cli_base import CliManager, console, register_endpoint, setup_logging
from .cli_context import DEFAULT_CAPS, CliContext, RunConfig
from .endpoint_base import CONTEXT_PARAM, BaseEndpoint, EndpointManager, endpoint, endpoint_class_of

__all__ = [
    # CLI
    "CliContext",
    "CliManager",
    "DEFAULT_CAPS",
    "RunConfig",
    "console",
    "register_endpoint",
    "setup_logging",
    # Endpoints
    "CONTEXT_PARAM",
    "BaseEndpoint",
    "EndpointManager",
    "endpoint",
    "endpoint_class_of",
]
