# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Hamiltonian residual of the closed-form eigenfunctions.

Applies the radial operator (units ℓ and ħΩ)

    −½(f'' + f'/ρ − m²f/ρ²) + ½ρ²f − m(γ/Ω)f

to the analytic radial amplitude with five-point stencils and compares
against the closed-form eigenvalue. Samples close to a radial node make the
relative residual meaningless and are rejected.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy.special import roots_genlaguerre

from ..physics.errors import DomainError, SingularSample
from ..physics.params import EffectiveParams, QuantumNumbers
from ..physics.wavefunctions import Eigenstate, radial_wavefunction

logger = logging.getLogger(__name__)

# five-point stencil: truncation ~ step⁴, roundoff ~ eps/step²; near 1e-5 the
# roundoff alone reaches the 1e-6 residual tolerance
DEFAULT_STEP = 1e-3
DEFAULT_GUARD = 1e-2


def radial_nodes(q: QuantumNumbers) -> np.ndarray:
    """Radii (in units of ℓ) where the radial amplitude vanishes, excluding r = 0."""
    if q.n_r == 0:
        return np.empty(0)
    roots, _ = roots_genlaguerre(q.n_r, abs(q.m_l))
    return np.sqrt(np.sort(roots))


def default_samples(e: EffectiveParams, q: QuantumNumbers) -> list[float]:
    """Three points in each gap between consecutive nodes, in the units of ``e``.

    The last gap runs to √(2(2n_r + |m_l| + 1)) + 2, past the classical
    turning point.
    """
    ell = e.length_scale
    edges = np.concatenate(([0.0], radial_nodes(q), [math.sqrt(2.0 * q.shell) + 2.0]))
    fractions = np.array([0.25, 0.5, 0.75])
    rho = (edges[:-1, None] + fractions[None, :] * np.diff(edges)[:, None]).ravel()
    return [float(v) * ell for v in rho]


def hamiltonian_residual(
    e: EffectiveParams,
    q: QuantumNumbers,
    sample_r: Sequence[float] | None = None,
    step: float = DEFAULT_STEP,
    guard: float = DEFAULT_GUARD,
) -> float:
    """max |(H − E)R|/(|E|·|R|) over the sample radii.

    Args:
        e: Effective params.
        q: Quantum numbers.
        sample_r: Radii in the units of ``e``; defaults to :func:`default_samples`.
        step: Stencil step in units of ℓ.
        guard: Minimum distance from any node, in units of ℓ.

    Raises:
        SingularSample: If a sample lies within ``guard`` of a node, or
            within two steps of the origin.
    """
    if not step > 0:
        raise DomainError(f"step must be positive (got {step})")
    ell = e.length_scale
    samples = default_samples(e, q) if sample_r is None else list(sample_r)
    rho = np.asarray(samples, dtype=float) / ell
    if rho.size == 0:
        raise DomainError("At least one sample radius is required")

    if np.any(rho <= 2.0 * step):
        raise SingularSample(f"Samples must lie beyond {2.0 * step}·ℓ from the origin")
    nodes = radial_nodes(q)
    if nodes.size:
        distance = np.min(np.abs(rho[:, None] - nodes[None, :]), axis=1)
        if np.any(distance < guard):
            bad = float(rho[int(np.argmin(distance))] * ell)
            raise SingularSample(f"Sample r={bad!r} lies within the guard band of a radial node")

    s = Eigenstate(e, q)

    def f(x: np.ndarray) -> np.ndarray:
        return np.asarray(radial_wavefunction(s, x * ell))

    h = step
    f_m2, f_m1, f_0, f_p1, f_p2 = (f(rho + k * h) for k in (-2, -1, 0, 1, 2))
    first = (f_m2 - 8.0 * f_m1 + 8.0 * f_p1 - f_p2) / (12.0 * h)
    second = (-f_m2 + 16.0 * f_m1 - 30.0 * f_0 + 16.0 * f_p1 - f_p2) / (12.0 * h * h)
    m = q.m_l
    applied = -0.5 * (second + first / rho - m * m * f_0 / (rho * rho)) + 0.5 * rho * rho * f_0 - m * e.ratio * f_0
    eigenvalue = q.shell - m * e.ratio
    residual = float(np.max(np.abs(applied - eigenvalue * f_0) / (abs(eigenvalue) * np.abs(f_0))))
    logger.debug("residual for %s: %.3e over %d samples", q, residual, rho.size)
    return residual


__all__ = ["DEFAULT_STEP", "default_samples", "hamiltonian_residual", "radial_nodes"]
