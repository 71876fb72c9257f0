# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Truncated operator algebra for the noncommutative coordinates.

Builds x̂, ŷ, p̂_x, p̂_y on the tensor product of two truncated 1D number
bases (ladder matrices a with √1..√(N−1) on the superdiagonal), then the
symmetric-gauge representation

    X̂  = x̂ − (θ/2ħ) p̂_y              Ŷ  = ŷ + (θ/2ħ) p̂_x
    Π̂_x = c_B ŷ + c_p p̂_x             Π̂_y = −c_B x̂ + c_p p̂_y

with c_B = ħB/(ħ + √(ħ(ħ − Bθ))) and c_p = (ħ + √(ħ(ħ − Bθ)))/(2ħ).
Everything is built in dimensionless form (ħ = m = ω = 1, ladder length
scale √(ħ/(mω)) = 1), so commutator targets are i·t, i·b and i.

Truncation corrupts commutators only on the top excitation shell, so the
checks project onto total excitation n_x + n_y ≤ N_1d − margin.

Components:
    OperatorMatrix: Named dense matrix on the truncated basis.
    build_nc_operators: x, y, p_x, p_y, X, Y, Pi_x, Pi_y, L_z.
    commutator_residuals: Six commutation relations on the projected block.
    hermiticity_residuals: Max-norm of A − A† per operator.
    matrix_hamiltonian_spectrum: Diagonalized truncated Hamiltonian vs closed form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..physics.errors import BudgetExceeded, CaseMismatch, DomainError
from ..physics.params import (
    CaseLabel,
    PhysicalParams,
    QuantumNumbers,
    classify_case,
    effective_params,
)
from ..physics.spectrum import energy

logger = logging.getLogger(__name__)

MIN_N_1D = 4
DEFAULT_MARGIN = 4
_MAX_ANALYTIC_M = 10_000

COMMUTATORS: dict[str, tuple[str, str]] = {
    "[X,Y]": ("X", "Y"),
    "[Pi_x,Pi_y]": ("Pi_x", "Pi_y"),
    "[X,Pi_x]": ("X", "Pi_x"),
    "[Y,Pi_y]": ("Y", "Pi_y"),
    "[X,Pi_y]": ("X", "Pi_y"),
    "[Y,Pi_x]": ("Y", "Pi_x"),
}


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense matrix of one operator on the N_1d² truncated basis.

    Basis index is n_x·N_1d + n_y.
    """

    name: str
    entries: np.ndarray
    n_1d: int
    length_scale: float = 1.0

    @property
    def dim(self) -> int:
        return self.n_1d * self.n_1d

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))


def _ladder(n_1d: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, n_1d, dtype=float)), k=1).astype(complex)


def _symmetric_gauge_coefficients(b: float, t: float) -> tuple[float, float]:
    """(c_B, c_p) in units ħ = 1."""
    root = math.sqrt(max(0.0, 1.0 - b * t))
    return b / (1.0 + root), 0.5 * (1.0 + root)


def build_nc_operators(p: PhysicalParams, N_1d: int) -> dict[str, OperatorMatrix]:
    """Truncated matrices of the commutative and noncommutative operators.

    Args:
        p: Physical params; converted to (b, t) = (B/(mω), θmω/ħ).
        N_1d: Size of each 1D number basis (≥ 4).

    Returns:
        Operators keyed by name: x, y, p_x, p_y, X, Y, Pi_x, Pi_y, L_z.

    Raises:
        DomainError: If N_1d < 4.
        ConstraintViolation: If Bθ > ħ.
    """
    if N_1d < MIN_N_1D:
        raise DomainError(f"N_1d must be at least {MIN_N_1D} (got {N_1d})")
    classify_case(p)
    b, t = (float(v) for v in p.to_dimensionless())

    a = _ladder(N_1d)
    ad = a.conj().T
    eye = np.eye(N_1d, dtype=complex)
    x1 = (a + ad) / math.sqrt(2.0)
    p1 = 1j * (ad - a) / math.sqrt(2.0)

    x = np.kron(x1, eye)
    y = np.kron(eye, x1)
    px = np.kron(p1, eye)
    py = np.kron(eye, p1)
    c_B, c_p = _symmetric_gauge_coefficients(b, t)

    raw = {
        "x": x,
        "y": y,
        "p_x": px,
        "p_y": py,
        "X": x - 0.5 * t * py,
        "Y": y + 0.5 * t * px,
        "Pi_x": c_B * y + c_p * px,
        "Pi_y": -c_B * x + c_p * py,
        "L_z": x @ py - y @ px,
    }
    logger.debug("built %d operators on N_1d=%d (b=%r, t=%r)", len(raw), N_1d, b, t)
    return {name: OperatorMatrix(name, entries, N_1d) for name, entries in raw.items()}


def _projected_indices(n_1d: int, margin: int) -> np.ndarray:
    n_x, n_y = np.divmod(np.arange(n_1d * n_1d), n_1d)
    return np.flatnonzero(n_x + n_y <= n_1d - margin)


def commutator_targets(p: PhysicalParams) -> dict[str, complex]:
    """Expected c-number value of each commutator (dimensionless)."""
    b, t = (float(v) for v in p.to_dimensionless())
    return {
        "[X,Y]": 1j * t,
        "[Pi_x,Pi_y]": 1j * b,
        "[X,Pi_x]": 1j,
        "[Y,Pi_y]": 1j,
        "[X,Pi_y]": 0j,
        "[Y,Pi_x]": 0j,
    }


def commutator_residuals(
    ops: dict[str, OperatorMatrix], p: PhysicalParams, margin: int = DEFAULT_MARGIN
) -> dict[str, float]:
    """Max-norm of [A, B] − target·I on the projected block, per relation.

    Residuals are divided by max(1, |target|) so the [X, Y] check stays
    meaningful when θ is large.

    Raises:
        DomainError: If margin < 2 or no basis state survives the projection.
    """
    if margin < 2:
        raise DomainError(f"margin must be at least 2 (got {margin})")
    n_1d = ops["X"].n_1d
    keep = _projected_indices(n_1d, margin)
    if keep.size == 0:
        raise DomainError(f"margin {margin} leaves no states for N_1d={n_1d}")
    block = np.ix_(keep, keep)
    identity = np.eye(keep.size)

    residuals = {}
    for label, target in commutator_targets(p).items():
        left, right = (ops[name].entries for name in COMMUTATORS[label])
        commutator = (left @ right - right @ left)[block]
        residuals[label] = float(np.max(np.abs(commutator - target * identity))) / max(1.0, abs(target))
    return residuals


def hermiticity_residuals(ops: dict[str, OperatorMatrix]) -> dict[str, float]:
    return {name: op.hermiticity_residual() for name, op in ops.items()}


def _analytic_lowest(p: PhysicalParams, n_levels: int) -> list[float]:
    """The lowest ``n_levels`` closed-form energies in units of ħω."""
    b, t = p.to_dimensionless()
    e = effective_params(PhysicalParams.dimensionless(b, t, p.case_tol), p.case_tol)
    ceiling = (2 * n_levels + 1) * e.Omega
    gap = e.Omega - e.gamma
    m_max = math.ceil(ceiling / gap)
    if m_max > _MAX_ANALYTIC_M:
        raise BudgetExceeded(f"Closed-form enumeration needs |m_l| up to {m_max}")
    values = sorted(
        energy(e, QuantumNumbers(n_r, m_l))
        for n_r in range(n_levels + 1)
        for m_l in range(-m_max, m_max + 1)
    )
    return values[:n_levels]


def matrix_hamiltonian_spectrum(
    p: PhysicalParams, N_1d: int, n_levels: int = 4
) -> tuple[list[float], list[float]]:
    """Diagonalize H = (Π_x² + Π_y²)/2 + (X² + Y²)/2 on the truncated basis.

    Returns:
        (numeric, analytic): the lowest ``n_levels`` eigenvalues of the
        truncated matrix and of the closed-form spectrum, both in units of
        ħω. The gap closes as N_1d grows.

    Raises:
        CaseMismatch: At Bθ = ħ, where every level is infinitely degenerate.
    """
    if classify_case(p) is CaseLabel.CASE_II:
        raise CaseMismatch("Truncated Hamiltonian cannot resolve infinitely degenerate Landau levels")
    if not 1 <= n_levels <= N_1d * N_1d:
        raise DomainError(f"n_levels must lie in [1, {N_1d * N_1d}] (got {n_levels})")
    ops = build_nc_operators(p, N_1d)
    X, Y = ops["X"].entries, ops["Y"].entries
    Px, Py = ops["Pi_x"].entries, ops["Pi_y"].entries
    hamiltonian = 0.5 * (Px @ Px + Py @ Py + X @ X + Y @ Y)
    hamiltonian = 0.5 * (hamiltonian + hamiltonian.conj().T)
    numeric = np.linalg.eigvalsh(hamiltonian)[:n_levels]
    return [float(v) for v in numeric], _analytic_lowest(p, n_levels)


__all__ = [
    "COMMUTATORS",
    "DEFAULT_MARGIN",
    "OperatorMatrix",
    "build_nc_operators",
    "commutator_residuals",
    "commutator_targets",
    "hermiticity_residuals",
    "matrix_hamiltonian_spectrum",
]
