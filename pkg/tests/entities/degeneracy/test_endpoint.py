# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Tests for DegeneracyEndpoint."""

import json
from fractions import Fraction

import pytest

from nc_oscillator.entities.degeneracy.endpoint import SATURATED_MESSAGE, DegeneracyEndpoint
from nc_oscillator.interface.cli_context import RunConfig
from nc_oscillator.physics.errors import CaseMismatch, DomainError
from nc_oscillator.physics.params import UnitsMode


@pytest.fixture
def endpoint():
    return DegeneracyEndpoint()


def _states(level):
    return [s.as_tuple() for s in level["states"]]


class TestCase1:
    """Tests for DegeneracyEndpoint.case1()."""

    async def test_kappa_third_levels(self, endpoint):
        """(1, 1) reproduces the four-fold level 7."""
        result = await endpoint.case1(RunConfig(), 1, 1)
        assert result["kappa"] == Fraction(1, 3)
        assert result["theta_d"] == pytest.approx(2**-0.5)
        level = next(lv for lv in result["levels"] if lv["coefficient"] == 7)
        assert _states(level) == [(0, 9), (1, 6), (2, 3), (3, 0)]

    async def test_electron_theta_d(self, endpoint):
        """SI units give θ_d ≈ 5.395e-21 for the electron preset."""
        result = await endpoint.case1(RunConfig(units=UnitsMode.SI), 1, 1)
        assert result["theta_d"] == pytest.approx(5.395e-21, rel=1e-3)

    async def test_saturated(self, endpoint):
        """Bθ = ħ reports infinite degeneracy and θ_d = θ."""
        result = await endpoint.case1(RunConfig(B="1", theta="1"), 1, 1)
        assert result["message"] == SATURATED_MESSAGE
        assert result["theta_d"] == 1

    async def test_intermediate_field(self, endpoint):
        """0 < Bθ < ħ belongs to case3."""
        with pytest.raises(CaseMismatch):
            await endpoint.case1(RunConfig(B="1/10", theta="1/10"), 1, 1)

    async def test_field_without_theta(self, endpoint):
        """B ≠ 0 is refused even without theta."""
        with pytest.raises(CaseMismatch):
            await endpoint.case1(RunConfig(B="1"), 1, 1)


class TestCase3:
    """Tests for DegeneracyEndpoint.case3()."""

    async def test_fixed_f(self, endpoint):
        """f = 1/10000 with (20001, 20000) gives the worked ξ."""
        result = await endpoint.case3(RunConfig(), 20001, 20000, f="1/10000")
        [spec] = result["specs"]
        assert spec["g"] == Fraction(1, 400020000)
        assert spec["xi"] == Fraction(40003, 800040001)

    async def test_fixed_g(self, endpoint):
        """Fixing g recovers f = 1/10000."""
        result = await endpoint.case3(RunConfig(), 20001, 20000, g="1/400020000")
        assert Fraction(1, 10000) in [row["f"] for row in result["specs"]]

    async def test_quantum_hall(self, endpoint):
        """The quantum Hall preset rounds f to 1/10000 for the electron."""
        result = await endpoint.case3(RunConfig(units=UnitsMode.SI), 20001, 20000, quantum_hall=True)
        assert result["f"] == Fraction(1, 10000)
        assert result["specs"][0]["theta_d"] > 0

    async def test_needs_scale(self, endpoint):
        """Without --f, --g or --quantum-hall there is nothing to solve."""
        with pytest.raises(DomainError):
            await endpoint.case3(RunConfig(), 20001, 20000)

    async def test_bad_rational(self, endpoint):
        """f must be a rational."""
        with pytest.raises(DomainError):
            await endpoint.case3(RunConfig(), 3, 2, f="tiny")


class TestScanLevelsProfile:
    """Tests for scan(), levels() and profile()."""

    async def test_scan_case1(self, endpoint):
        """Specs are sorted by κ."""
        result = await endpoint.scan(RunConfig(), "case1", 2, 2)
        assert [(s["n"], s["k"]) for s in result["specs"]] == [(2, 1), (1, 1), (2, 2), (1, 2)]

    async def test_scan_case3_needs_f(self, endpoint):
        """case3 scans need a field scale."""
        with pytest.raises(DomainError):
            await endpoint.scan(RunConfig(), "case3")

    async def test_levels_degenerate_only(self, endpoint):
        """degenerate_only drops singleton levels."""
        result = await endpoint.levels(RunConfig(), 3, 0, 11, "1/3", True)
        assert result["levels"]
        assert all(level["degeneracy"] > 1 for level in result["levels"])

    async def test_levels_exact_from_params(self, endpoint):
        """Rational inputs give the ratio without an override."""
        result = await endpoint.levels(RunConfig(theta="3/2"), 2, 0, 5)
        assert result["ratio"] == Fraction(3, 5)

    async def test_profile(self, endpoint):
        """κ = 1/3 nonnegative side counts 1, 2, 3, 4."""
        result = await endpoint.profile(RunConfig(), "7", "nonnegative", None, "1/3")
        counts = {row["coefficient"]: row["degeneracy"] for row in result["levels"]}
        assert [counts[Fraction(c)] for c in (1, 3, 5, 7)] == [1, 2, 3, 4]

    async def test_profile_irrational(self, endpoint):
        """Profiles need an exact ratio."""
        with pytest.raises(DomainError):
            await endpoint.profile(RunConfig(theta="2"))


class TestPartners:
    """Tests for DegeneracyEndpoint.partners()."""

    async def test_positive_chain(self, endpoint):
        """From (0, 9) at κ = 1/3 the chain holds (1, 6), (2, 3), (3, 0)."""
        result = await endpoint.partners(RunConfig(), 0, 9, ratio="1/3")
        assert (result["n"], result["k"]) == (1, 1)
        assert [row["state"].as_tuple() for row in result["states"]] == [(3, 0), (2, 3), (1, 6), (0, 9)]
        assert {row["coefficient"] for row in result["states"]} == {7}

    async def test_negative_chain(self, endpoint):
        """From (0, −12) the negative chain climbs to (8, 0)."""
        result = await endpoint.partners(RunConfig(), 0, -12, n=1, k=1, chain="negative")
        assert [row["state"].as_tuple() for row in result["states"]] == [
            (0, -12),
            (2, -9),
            (4, -6),
            (6, -3),
            (8, 0),
        ]

    async def test_steps_limit(self, endpoint):
        """steps bounds the walk in each direction."""
        result = await endpoint.partners(RunConfig(), 0, -12, n=1, k=1, chain="negative", steps=2)
        assert [row["step"] for row in result["states"]] == [0, 1, 2]

    async def test_irrational(self, endpoint):
        """Float params without --ratio or --n/--k are refused."""
        with pytest.raises(DomainError):
            await endpoint.partners(RunConfig(theta="0.5"))


class TestDegeneracyCli:
    """Tests for the generated degeneracy commands."""

    def test_case3_arguments(self, cli, runner, tmp_path):
        """n and k are positional."""
        target = tmp_path / "case3.json"
        result = runner.invoke(
            cli, ["degeneracy", "case3", "20001", "20000", "--f", "1/10000", "--out", str(target), "--format", "json"]
        )
        assert result.exit_code == 0, result.output
        assert json.loads(target.read_text())["specs"][0]["xi"] == "40003/800040001"

    def test_case3_empty_exit_code(self, cli, runner):
        """No admissible g exits with 4."""
        result = runner.invoke(cli, ["degeneracy", "case3", "2", "1", "--f", "1"])
        assert result.exit_code == 4

    def test_levels_json(self, cli, runner, tmp_path):
        """Levels write to JSON with exact coefficients."""
        target = tmp_path / "levels.json"
        result = runner.invoke(
            cli,
            ["degeneracy", "levels", "--ratio", "1/3", "--degenerate-only", "--out", str(target), "--format", "json"],
        )
        assert result.exit_code == 0, result.output
        levels = json.loads(target.read_text())["levels"]
        assert {"coefficient": "7", "degeneracy": 4, "states": [[0, 9], [1, 6], [2, 3], [3, 0]]} in levels
