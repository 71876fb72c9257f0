# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Independent verification engines for the closed-form results.

Components:
    radial: Finite-difference radial eigensolver with Richardson extrapolation.
    operators: Truncated ladder-operator algebra, commutators, matrix Hamiltonian.
    residual: Hamiltonian residual of the analytic eigenfunctions.
    suites: ``run_suite`` used by ``ncosc verify``.
"""

from .operators import (
    COMMUTATORS,
    OperatorMatrix,
    build_nc_operators,
    commutator_residuals,
    commutator_targets,
    hermiticity_residuals,
    matrix_hamiltonian_spectrum,
)
from .radial import (
    RadialGrid,
    default_r_max,
    fd_radial_eigenvalues,
    fd_radial_matrix,
    richardson_eigenvalues,
)
from .residual import default_samples, hamiltonian_residual, radial_nodes
from .suites import DEFAULT_TOLERANCES, SUITES, run_suite

__all__ = [
    "COMMUTATORS",
    "DEFAULT_TOLERANCES",
    "SUITES",
    "OperatorMatrix",
    "RadialGrid",
    "build_nc_operators",
    "commutator_residuals",
    "commutator_targets",
    "default_r_max",
    "default_samples",
    "fd_radial_eigenvalues",
    "fd_radial_matrix",
    "hamiltonian_residual",
    "hermiticity_residuals",
    "matrix_hamiltonian_spectrum",
    "radial_nodes",
    "richardson_eigenvalues",
    "run_suite",
]
