# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Base class for endpoint introspection and command dispatch.

Endpoints are thin adapters over the library: each public async method is
one CLI command, its signature is the command's parameter list, and every
number it returns comes from a library call.

Components:
    endpoint: Decorator to configure method channels.
    BaseEndpoint: Base class with introspection capabilities.
    EndpointManager: Endpoint discovery from the entities package.

Example:
    Define an endpoint::

        from nc_oscillator.interface.endpoint_base import BaseEndpoint, endpoint

        class SpectrumEndpoint(BaseEndpoint):
            name = "spectrum"

            async def classify(self, config: RunConfig) -> dict:
                \"\"\"Print the case label.\"\"\"
                return {"case": classify_case(config.physical_params()).value}

            @endpoint(cli=False)
            async def internal(self, config: RunConfig) -> dict:
                \"\"\"Library-only, no CLI command.\"\"\"
                ...

Note:
    A parameter named ``config`` is context-resolved: the CLI never exposes
    it as an option and injects the command's RunConfig instead.
"""

from __future__ import annotations

import importlib
import inspect
import logging
import pkgutil
from collections.abc import Callable, Iterator, ValuesView
from types import ModuleType
from typing import TYPE_CHECKING, Any, get_type_hints

from pydantic import ConfigDict, create_model

if TYPE_CHECKING:
    from ..oscillator_base import OscillatorBase

logger = logging.getLogger(__name__)

CONTEXT_PARAM = "config"


def endpoint(*, cli: bool | None = None) -> Callable[[Callable], Callable]:
    """Configure endpoint method channels.

    When a parameter is None, the class default is used.

    Args:
        cli: Expose via CLI command. None = use class default.

    Returns:
        Decorator function that sets method attributes.
    """

    def decorator(method: Callable) -> Callable:
        if cli is not None:
            method._endpoint_cli = cli  # type: ignore[attr-defined]
        return method

    return decorator


class BaseEndpoint:
    """Base class for all endpoints with introspection capabilities.

    Class Attributes:
        name: Endpoint name used as CLI group.
        _default_cli: Expose methods via CLI (default True).

    Instance Attributes:
        oscillator: Owning OscillatorBase (process config, managers).
    """

    name: str = ""

    _default_cli: bool = True

    # Methods excluded from CLI generation (internal use only)
    _internal_methods = {"invoke"}

    def __init__(self, oscillator: OscillatorBase | None = None):
        self.oscillator = oscillator

    def get_methods(self) -> list[tuple[str, Callable]]:
        """Return all public async methods for CLI generation."""
        methods = []
        for method_name in dir(self):
            if method_name.startswith("_"):
                continue
            if method_name in self._internal_methods:
                continue
            method = getattr(self, method_name)
            if callable(method) and inspect.iscoroutinefunction(method):
                methods.append((method_name, method))
        return methods

    def is_available_for_channel(self, method_name: str, channel: str) -> bool:
        """Check method attribute first, then fall back to the class default."""
        method = getattr(self, method_name)
        attr_name = f"_endpoint_{channel}"
        if hasattr(method, attr_name):
            return getattr(method, attr_name)
        return getattr(self, f"_default_{channel}", True)

    def create_request_model(self, method_name: str) -> type:
        """Create a Pydantic model from the method signature.

        Args:
            method_name: Name of the method to introspect.

        Returns:
            Dynamically created Pydantic model class.
        """
        method = getattr(self, method_name)
        sig = inspect.signature(method)

        try:
            hints = get_type_hints(method)
        except Exception:
            hints = {}

        fields = {}
        for param_name, param in sig.parameters.items():
            if param_name == "self":
                continue
            annotation = hints.get(param_name, param.annotation)
            if annotation is inspect.Parameter.empty:
                annotation = Any
            fields[param_name] = self._annotation_to_field(annotation, param.default)

        model_name = f"{method_name.title().replace('_', '')}Request"
        return create_model(  # type: ignore[call-overload]
            model_name, __config__=ConfigDict(arbitrary_types_allowed=True), **fields
        )

    def _annotation_to_field(self, annotation: Any, default: Any) -> tuple[Any, Any]:
        """Convert Python annotation to Pydantic field tuple (type, default)."""
        if default is inspect.Parameter.empty:
            return (annotation, ...)
        return (annotation, default)

    async def invoke(self, method_name: str, params: dict[str, Any]) -> Any:
        """Validate parameters and call the endpoint method.

        Single entry point for the CLI and for tests.

        Raises:
            ValidationError: If params don't match the method signature.
            ValueError: If the method does not exist.
        """
        method = getattr(self, method_name, None)
        if method is None or not callable(method):
            raise ValueError(f"Method '{method_name}' not found on {self.name}")

        model_class = self.create_request_model(method_name)
        validated = model_class.model_validate(params)
        # model_dump would turn the RunConfig back into a dict
        kwargs = {name: getattr(validated, name) for name in model_class.model_fields}
        return await method(**kwargs)


class EndpointManager:
    """Endpoints by name, discovered from one entities package.

    Each subpackage ``<package>.<entity>`` with an ``endpoint`` module
    contributes the named BaseEndpoint subclass defined there.

    Attributes:
        oscillator: Parent OscillatorBase, handed to every endpoint.
    """

    def __init__(self, parent: OscillatorBase):
        self.oscillator = parent
        self._endpoints: dict[str, BaseEndpoint] = {}

    def discover(self, package: str) -> list[BaseEndpoint]:
        """Import ``<package>.<entity>.endpoint`` modules and instantiate their endpoints.

        Returns:
            The endpoints registered so far. Empty when the package is missing.
        """
        try:
            root = importlib.import_module(package)
        except ModuleNotFoundError:
            logger.warning("entity package %s not found", package)
            return list(self._endpoints.values())

        for info in pkgutil.iter_modules(getattr(root, "__path__", []), prefix=f"{package}."):
            if not info.ispkg:
                continue
            module_name = f"{info.name}.endpoint"
            try:
                module = importlib.import_module(module_name)
            except ModuleNotFoundError as exc:
                if exc.name != module_name:
                    raise
                continue
            endpoint_class = endpoint_class_of(module)
            if endpoint_class is not None:
                self._endpoints[endpoint_class.name] = endpoint_class(self.oscillator)
        return list(self._endpoints.values())

    def __getitem__(self, name: str) -> BaseEndpoint:
        if name not in self._endpoints:
            raise KeyError(f"Endpoint '{name}' not found")
        return self._endpoints[name]

    def __contains__(self, name: str) -> bool:
        return name in self._endpoints

    def __iter__(self) -> Iterator[str]:
        return iter(self._endpoints)

    def values(self) -> ValuesView[BaseEndpoint]:
        return self._endpoints.values()


def endpoint_class_of(module: ModuleType) -> type[BaseEndpoint] | None:
    """The named BaseEndpoint subclass defined in ``module`` itself, if any."""
    for obj in vars(module).values():
        if (
            isinstance(obj, type)
            and issubclass(obj, BaseEndpoint)
            and obj.__module__ == module.__name__
            and obj.name
        ):
            return obj
    return None


__all__ = ["CONTEXT_PARAM", "BaseEndpoint", "EndpointManager", "endpoint", "endpoint_class_of"]
