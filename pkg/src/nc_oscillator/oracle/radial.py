# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Finite-difference radial eigensolver.

Works on the dimensionless radial problem (lengths in ℓ = √(ħ/(MΩ)),
energies in ħΩ)

    −½(f'' + f'/ρ − m²f/ρ²) + ½ρ²f = ε f

discretized conservatively on cell centres ρ_i = (i − ½)h, i = 1..N, with
h = ρ_max/(N + ½). The face at the origin carries no flux and f vanishes at
ρ_max. Scaling the unknowns by √ρ_i makes the matrix symmetric tridiagonal,
so eigenvalues come from LAPACK bisection (stebz) with no iterative-solver
nondeterminism. The physical energy is ε·ħΩ − m_l ħγ.

Components:
    RadialGrid: Physical domain size and node count.
    fd_radial_matrix: Diagonal and off-diagonal of the symmetric operator.
    fd_radial_eigenvalues: Lowest eigenvalues on one grid.
    richardson_eigenvalues: Two-grid extrapolation.
    default_r_max: Domain size meeting the accuracy precondition.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from ..physics.errors import ConvergenceFailure, DomainError, GridTooCoarse
from ..physics.params import EffectiveParams

logger = logging.getLogger(__name__)

# r_max must reach this many ℓ·√(2n_eig + |m_l|)
_DOMAIN_FACTOR = 8.0


@dataclass(frozen=True)
class RadialGrid:
    """Radial domain [0, r_max] with ``n_points`` interior cell centres.

    The Dirichlet node sits at r_max; the origin is a zero-flux face, not a
    node.
    """

    r_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not self.r_max > 0:
            raise DomainError(f"r_max must be positive (got {self.r_max})")
        if self.n_points < 2:
            raise DomainError(f"n_points must be at least 2 (got {self.n_points})")

    @property
    def spacing(self) -> float:
        # nodes at (i - ½)h for i = 1..N and the Dirichlet node at (N + ½)h = r_max;
        # r_max/(N + 1) would put a node on the origin instead of a face
        return self.r_max / (self.n_points + 0.5)

    @property
    def nodes(self) -> np.ndarray:
        return (np.arange(1, self.n_points + 1) - 0.5) * self.spacing

    def scaled(self, length: float) -> RadialGrid:
        """Same grid with lengths measured in units of ``length``."""
        return RadialGrid(self.r_max / length, self.n_points)


def default_r_max(e: EffectiveParams, m_l: int, n_eig: int) -> float:
    """A domain 25% wider than the smallest accepted by :func:`fd_radial_eigenvalues`."""
    return 1.25 * _DOMAIN_FACTOR * e.length_scale * math.sqrt(max(1, 2 * n_eig + abs(m_l)))


def fd_radial_matrix(m_l: int, grid: RadialGrid) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric tridiagonal operator on a dimensionless grid.

    Args:
        m_l: Angular momentum quantum number.
        grid: Grid in units of ℓ.

    Returns:
        (diagonal, off_diagonal) of lengths N and N − 1. The result depends
        only on (m_l, grid), so equal inputs give bit-identical arrays.
    """
    h = grid.spacing
    rho = grid.nodes
    outer = rho + 0.5 * h
    inner = rho - 0.5 * h
    diagonal = (outer + inner) / (2.0 * h * h * rho) + (m_l * m_l) / (2.0 * rho * rho) + 0.5 * rho * rho
    off_diagonal = -outer[:-1] / (2.0 * h * h * np.sqrt(rho[:-1] * rho[1:]))
    return diagonal, off_diagonal


def _check_request(e: EffectiveParams, m_l: int, grid: RadialGrid, n_eig: int) -> None:
    if n_eig < 1:
        raise DomainError(f"n_eig must be positive (got {n_eig})")
    if n_eig > grid.n_points / 4:
        raise GridTooCoarse(f"{n_eig} eigenvalues need at least {4 * n_eig} points (got {grid.n_points})")
    needed = _DOMAIN_FACTOR * e.length_scale * math.sqrt(2 * n_eig + abs(m_l))
    if grid.r_max < needed:
        raise GridTooCoarse(f"r_max {grid.r_max!r} is below {needed!r} for m_l={m_l}, n_eig={n_eig}")


def fd_radial_eigenvalues(e: EffectiveParams, m_l: int, grid: RadialGrid, n_eig: int) -> list[float]:
    """Lowest ``n_eig`` energies for angular momentum m_l, in the units of ``e``.

    Each converges to (2j + |m_l| + 1)ħΩ − m_l ħγ at O(h²).

    Raises:
        GridTooCoarse: If n_eig > n_points/4 or r_max < 8ℓ√(2n_eig + |m_l|).
        ConvergenceFailure: If LAPACK reports a failure.
    """
    _check_request(e, m_l, grid, n_eig)
    diagonal, off_diagonal = fd_radial_matrix(m_l, grid.scaled(e.length_scale))
    try:
        values = eigh_tridiagonal(
            diagonal,
            off_diagonal,
            eigvals_only=True,
            select="i",
            select_range=(0, n_eig - 1),
            lapack_driver="stebz",
        )
    except LinAlgError as exc:
        raise ConvergenceFailure(f"Tridiagonal eigensolver failed: {exc}") from exc
    scale = e.hbar * e.Omega
    shift = m_l * e.hbar * e.gamma
    return [float(v) * scale - shift for v in np.sort(values)]


def richardson_eigenvalues(
    e: EffectiveParams,
    m_l: int,
    n_eig: int,
    n_points: tuple[int, int] = (2000, 4000),
    r_max: float | None = None,
) -> list[float]:
    """Two-grid Richardson extrapolation of :func:`fd_radial_eigenvalues`.

    Removes the h² error term using the actual spacing of each grid:
    E = (E_f·h_c² − E_c·h_f²)/(h_c² − h_f²).
    """
    if r_max is None:
        r_max = default_r_max(e, m_l, n_eig)
    coarse, fine = (RadialGrid(r_max, n) for n in sorted(n_points))
    if coarse.n_points == fine.n_points:
        raise DomainError("Richardson extrapolation needs two different grids")
    e_coarse = fd_radial_eigenvalues(e, m_l, coarse, n_eig)
    e_fine = fd_radial_eigenvalues(e, m_l, fine, n_eig)
    hc2, hf2 = coarse.spacing**2, fine.spacing**2
    logger.debug("richardson m_l=%d on %d/%d points", m_l, coarse.n_points, fine.n_points)
    return [(ef * hc2 - ec * hf2) / (hc2 - hf2) for ec, ef in zip(e_coarse, e_fine)]


__all__ = [
    "RadialGrid",
    "default_r_max",
    "fd_radial_eigenvalues",
    "fd_radial_matrix",
    "richardson_eigenvalues",
]
