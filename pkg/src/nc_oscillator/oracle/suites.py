# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Verification suites run by ``ncosc verify``.

Each suite compares closed-form results with an independent oracle and
returns a JSON-able report::

    {"suite": "fd", "passed": true, "checks": [
        {"name": "m_l=0 j=0", "value": 3.1e-09, "tolerance": 1e-06, "passed": true}, ...]}

The constraint Bθ ≤ ħ is checked before any suite runs.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any, Literal

from ..physics.errors import DomainError
from ..physics.params import PhysicalParams, QuantumNumbers, classify_case, effective_params
from ..physics.spectrum import energy
from ..physics.wavefunctions import Eigenstate, normalization_check, orthogonality_check
from .operators import build_nc_operators, commutator_residuals, hermiticity_residuals
from .radial import richardson_eigenvalues
from .residual import hamiltonian_residual

logger = logging.getLogger(__name__)

SuiteName = Literal["commutators", "fd", "residual", "normalization", "all"]

DEFAULT_TOLERANCES: dict[str, float] = {
    "case": 1e-12,
    "fd": 1e-6,
    "commutator": 1e-10,
    "residual": 1e-6,
    "normalization": 1e-8,
}

FD_ANGULAR_MOMENTA = (-2, 0, 3)
FD_EIGENVALUES = 4
FD_POINTS = (2000, 4000)
RESIDUAL_STATES = (QuantumNumbers(0, 0), QuantumNumbers(2, 3), QuantumNumbers(1, -2))
NORMALIZATION_BOX = 3
COMMUTATOR_N_1D = 16
COMMUTATOR_MARGIN = 4
HERMITICITY_TOL = 1e-13


def _check(name: str, value: float, tolerance: float) -> dict[str, Any]:
    return {"name": name, "value": value, "tolerance": tolerance, "passed": bool(value <= tolerance)}


def _commutators(p: PhysicalParams, tolerances: dict[str, float]) -> list[dict[str, Any]]:
    ops = build_nc_operators(p, COMMUTATOR_N_1D)
    checks = [
        _check(label, value, tolerances["commutator"])
        for label, value in commutator_residuals(ops, p, COMMUTATOR_MARGIN).items()
    ]
    checks.extend(
        _check(f"hermitian {name}", value, HERMITICITY_TOL)
        for name, value in hermiticity_residuals(ops).items()
    )
    return checks


def _fd(p: PhysicalParams, tolerances: dict[str, float]) -> list[dict[str, Any]]:
    e = effective_params(p, tolerances["case"])
    checks = []
    for m_l in FD_ANGULAR_MOMENTA:
        numeric = richardson_eigenvalues(e, m_l, FD_EIGENVALUES, FD_POINTS)
        for j, value in enumerate(numeric):
            exact = energy(e, QuantumNumbers(j, m_l))
            checks.append(_check(f"m_l={m_l} j={j}", abs(value - exact) / abs(exact), tolerances["fd"]))
    return checks


def _residual(p: PhysicalParams, tolerances: dict[str, float]) -> list[dict[str, Any]]:
    e = effective_params(p, tolerances["case"])
    return [
        _check(f"state {q.as_tuple()}", hamiltonian_residual(e, q), tolerances["residual"])
        for q in RESIDUAL_STATES
    ]


def _normalization(p: PhysicalParams, tolerances: dict[str, float]) -> list[dict[str, Any]]:
    e = effective_params(p, tolerances["case"])
    tol = tolerances["normalization"]
    states = [
        Eigenstate(e, QuantumNumbers(n_r, m_l))
        for n_r in range(NORMALIZATION_BOX + 1)
        for m_l in range(-NORMALIZATION_BOX, NORMALIZATION_BOX + 1)
    ]
    checks = [_check(f"norm {s.q.as_tuple()}", abs(normalization_check(s) - 1.0), tol) for s in states]
    for s1 in states:
        for s2 in states:
            if s1.q < s2.q and s1.q.m_l == s2.q.m_l:
                overlap = abs(orthogonality_check(s1, s2))
                checks.append(_check(f"overlap {s1.q.as_tuple()}|{s2.q.as_tuple()}", overlap, tol))
    return checks


SUITES: dict[str, Callable[[PhysicalParams, dict[str, float]], list[dict[str, Any]]]] = {
    "commutators": _commutators,
    "fd": _fd,
    "residual": _residual,
    "normalization": _normalization,
}


def run_suite(
    name: SuiteName, p: PhysicalParams, tolerances: dict[str, float] | None = None
) -> dict[str, Any]:
    """Run one suite (or ``all``) and return its report.

    Raises:
        ConstraintViolation: If Bθ > ħ, before anything runs.
        DomainError: For an unknown suite name.
    """
    merged = {**DEFAULT_TOLERANCES, **(tolerances or {})}
    label = classify_case(p, merged["case"])
    if name != "all" and name not in SUITES:
        raise DomainError(f"Unknown suite {name!r}; expected one of {sorted(SUITES)} or 'all'")
    selected = list(SUITES) if name == "all" else [name]

    checks: list[dict[str, Any]] = []
    for suite in selected:
        suite_checks = SUITES[suite](p, merged)
        for check in suite_checks:
            check["suite"] = suite
        checks.extend(suite_checks)
        failures = sum(1 for c in suite_checks if not c["passed"])
        logger.info("suite %s: %d checks, %d failed", suite, len(suite_checks), failures)

    return {
        "suite": name,
        "case": label.value,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


__all__ = ["DEFAULT_TOLERANCES", "SUITES", "SuiteName", "run_suite"]
