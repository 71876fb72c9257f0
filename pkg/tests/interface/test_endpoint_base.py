# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Tests for BaseEndpoint introspection and EndpointManager discovery."""

from types import ModuleType, SimpleNamespace

import pytest
from pydantic import ValidationError

from nc_oscillator.interface.cli_context import RunConfig
from nc_oscillator.interface.endpoint_base import BaseEndpoint, EndpointManager, endpoint, endpoint_class_of


class SampleEndpoint(BaseEndpoint):
    """Endpoint used to exercise introspection."""

    name = "sample"

    async def table(self, config: RunConfig, n_r_max: int, ratio: str | None = None) -> dict:
        """Return the parsed arguments."""
        return {"theta": config.theta, "n_r_max": n_r_max, "ratio": ratio}

    async def whole(self, config: RunConfig) -> dict:
        return {"config": config}

    async def plain(self, count: int = 1) -> dict:
        return {"count": count}

    @endpoint(cli=False)
    async def hidden(self) -> dict:
        return {}

    def sync_helper(self) -> None:
        pass

    async def _private(self) -> None:
        pass


@pytest.fixture
def sample():
    return SampleEndpoint()


class TestEndpointDecorator:
    """Tests for the endpoint decorator."""

    def test_marks_cli_channel(self):
        """cli=False sets the channel attribute."""

        @endpoint(cli=False)
        async def method():
            pass

        assert method._endpoint_cli is False

    def test_none_leaves_default(self):
        """cli=None sets nothing."""

        @endpoint()
        async def method():
            pass

        assert not hasattr(method, "_endpoint_cli")


class TestBaseEndpoint:
    """Tests for BaseEndpoint introspection."""

    def test_get_methods(self, sample):
        """Only public async methods are listed."""
        names = {name for name, _ in sample.get_methods()}
        assert names == {"table", "whole", "plain", "hidden"}

    def test_channel_availability(self, sample):
        """Decorated methods override the class default."""
        assert sample.is_available_for_channel("table", "cli") is True
        assert sample.is_available_for_channel("hidden", "cli") is False

    def test_request_model_required_vs_optional(self, sample):
        """Required params have no default in the model."""
        model = sample.create_request_model("table")
        fields = model.model_fields
        assert set(fields) == {"config", "n_r_max", "ratio"}
        assert fields["n_r_max"].is_required()
        assert not fields["ratio"].is_required()

    def test_oscillator_reference(self):
        """The owning oscillator is stored."""
        owner = SimpleNamespace()
        assert SampleEndpoint(owner).oscillator is owner


class TestInvoke:
    """Tests for BaseEndpoint.invoke."""

    async def test_coerces_types(self, sample):
        """Text arguments are coerced to the annotated types."""
        result = await sample.invoke("table", {"config": RunConfig(theta="1/2"), "n_r_max": "4"})
        assert result == {"theta": "1/2", "n_r_max": 4, "ratio": None}

    async def test_config_instance_passed_through(self, sample):
        """The RunConfig instance reaches the method unchanged."""
        config = RunConfig(theta="1")
        result = await sample.invoke("whole", {"config": config})
        assert result["config"] is config

    async def test_validation_error(self, sample):
        """Missing required params raise ValidationError."""
        with pytest.raises(ValidationError):
            await sample.invoke("table", {"config": RunConfig()})

    async def test_unknown_method(self, sample):
        """Unknown methods raise ValueError."""
        with pytest.raises(ValueError):
            await sample.invoke("nope", {})


class TestEndpointManager:
    """Tests for endpoint discovery."""

    def test_discovers_entities(self):
        """The shipped entity package holds four endpoints."""
        owner = SimpleNamespace()
        manager = EndpointManager(parent=owner)
        found = manager.discover("nc_oscillator.entities")
        assert {e.name for e in found} == {"spectrum", "degeneracy", "density", "verify"}
        assert "spectrum" in manager
        assert set(manager) == {"spectrum", "degeneracy", "density", "verify"}
        assert all(e.oscillator is owner for e in manager.values())

    def test_missing_package(self):
        """An unknown package registers nothing."""
        manager = EndpointManager(parent=SimpleNamespace())
        assert manager.discover("nc_oscillator.no_such_package") == []

    def test_plain_package(self):
        """Subpackages without an endpoint module are skipped."""
        manager = EndpointManager(parent=SimpleNamespace())
        assert manager.discover("nc_oscillator") == []

    def test_getitem_missing(self):
        """Unknown names raise KeyError."""
        manager = EndpointManager(parent=SimpleNamespace())
        with pytest.raises(KeyError):
            manager["spectrum"]


class TestEndpointClassOf:
    """Tests for endpoint_class_of."""

    def test_skips_base_and_nameless(self):
        """BaseEndpoint and classes without a name are not picked."""
        nameless = type("NamelessEndpoint", (BaseEndpoint,), {"__module__": "fake"})
        module = ModuleType("fake")
        module.BaseEndpoint = BaseEndpoint
        module.NamelessEndpoint = nameless
        assert endpoint_class_of(module) is None

    def test_ignores_imported_classes(self):
        """Only classes defined in the module itself count."""
        local = type("LocalEndpoint", (BaseEndpoint,), {"name": "local", "__module__": "fake"})
        module = ModuleType("fake")
        module.SampleEndpoint = SampleEndpoint
        module.LocalEndpoint = local
        assert endpoint_class_of(module) is local

    def test_shipped_module(self):
        """The spectrum entity module yields SpectrumEndpoint."""
        from nc_oscillator.entities.spectrum import endpoint as spectrum_module

        assert endpoint_class_of(spectrum_module) is spectrum_module.SpectrumEndpoint
