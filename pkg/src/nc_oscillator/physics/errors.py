# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Exception hierarchy shared by the physics, oracle and interface layers.

Every exception carries a stable ``exit_code`` that the CLI adapter returns
to the shell:

    0  success
    1  verification or numerical failure
    2  domain / constraint / case errors (including invalid configuration)
    3  budget caps exceeded
    4  empty result
"""

from __future__ import annotations


class OscillatorError(Exception):
    """Base class for all nc-oscillator errors."""

    exit_code: int = 1


class DomainError(OscillatorError):
    """Raised when an input lies outside the domain of an operation."""

    exit_code = 2


class ConstraintViolation(DomainError):
    """Raised when B·θ exceeds ħ (the effective mass would be complex)."""

    pass


class CaseMismatch(DomainError):
    """Raised when a case-specific quantity is requested in another case."""

    pass


class BudgetExceeded(OscillatorError):
    """Raised when an enumeration box or raster exceeds its configured cap."""

    exit_code = 3


class EmptyResult(OscillatorError):
    """Raised when a generator yields no admissible value."""

    exit_code = 4


class QuadratureFailure(OscillatorError):
    """Raised when adaptive quadrature does not meet its tolerance."""

    pass


class ConvergenceFailure(OscillatorError):
    """Raised when eigenvalue extraction fails."""

    pass


class GridTooCoarse(OscillatorError):
    """Raised when a radial grid cannot deliver the requested eigenvalues."""

    pass


class SingularSample(OscillatorError):
    """Raised when a residual sample falls inside the guard band of a node."""

    pass


__all__ = [
    "BudgetExceeded",
    "CaseMismatch",
    "ConstraintViolation",
    "ConvergenceFailure",
    "DomainError",
    "EmptyResult",
    "GridTooCoarse",
    "OscillatorError",
    "QuadratureFailure",
    "SingularSample",
]
