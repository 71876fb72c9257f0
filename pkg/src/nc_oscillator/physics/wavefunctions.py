# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Symmetric-gauge eigenfunctions and probability densities.

    |Ψ_{n_r,m_l}(r, φ)|² = (MΩ/πħ)·(n_r!/(n_r + |m_l|)!)·u^|m_l|·e^(−u)·[L_{n_r}^{|m_l|}(u)]²

with u = MΩr²/ħ = (r/ℓ)². The density does not depend on φ. Factorial
ratios are evaluated with log-gamma so states beyond n_r + |m_l| ≈ 170 do
not overflow.

Components:
    Eigenstate: Effective params plus quantum numbers.
    DensityGrid: |Ψ|² raster with parameter echo.
    laguerre: Associated Laguerre polynomial by three-term recurrence.
    psi_squared, radial_wavefunction: Pointwise evaluation.
    normalization_check, orthogonality_check: Quadrature oracles.
    density_grid, density_panel: Rasters.
    density_spread_metric, radial_maxima, spread_sweep: Shape measures.

Example:
    ::

        p = PhysicalParams.dimensionless(B=Fraction(0), theta=Fraction(1))
        s = Eigenstate.from_physical(p, QuantumNumbers(2, 3))
        normalization_check(s)      # 1.0 ± 1e-10
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Literal

import numpy as np

from .errors import BudgetExceeded, DomainError, QuadratureFailure
from .params import (
    DEFAULT_CASE_TOL,
    EffectiveParams,
    PhysicalParams,
    QuantumNumbers,
    classify_case,
    effective_params,
)
from .rational import Quantity

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION_CAP = 4096
QUADRATURE_TOL = 1e-12
_GL_NODES = 32
_MIN_PANELS = 4
_MAX_PANELS = 1024

SweepParameter = Literal["theta", "B", "saturated_B"]


@dataclass(frozen=True)
class Eigenstate:
    """An eigenstate (n_r, m_l) of the effective oscillator.

    ``length_scale`` = √(ħ/(MΩ)) is derived from ``params``.
    """

    params: EffectiveParams
    q: QuantumNumbers
    length_scale: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "length_scale", self.params.length_scale)

    @classmethod
    def from_physical(
        cls, p: PhysicalParams, q: QuantumNumbers, tol: float = DEFAULT_CASE_TOL
    ) -> Eigenstate:
        return cls(effective_params(p, tol), q)


@dataclass(frozen=True, eq=False)
class DensityGrid:
    """|Ψ|² sampled at pixel centres over the square [−radius, radius]².

    Row 0 is the top edge (y = +radius side), column 0 the left edge. With
    an odd resolution the centre pixel sits exactly at r = 0. Values
    outside the inscribed disc are evaluated, not masked.
    """

    radius: float
    resolution: int
    values: np.ndarray
    metadata: dict[str, Any]

    @property
    def peak_index(self) -> tuple[int, int]:
        row, col = np.unravel_index(int(np.argmax(self.values)), self.values.shape)
        return int(row), int(col)


def laguerre(n: int, alpha: int, x: float | np.ndarray) -> float | np.ndarray:
    """Associated Laguerre polynomial L_n^α(x).

    Uses L_j = ((2j − 1 + α − x)·L_{j−1} − (j − 1 + α)·L_{j−2})/j, starting
    from L_0 = 1 and L_1 = 1 + α − x. Accepts scalars or numpy arrays.

    Raises:
        DomainError: If n or α is negative.
    """
    if n < 0 or alpha < 0:
        raise DomainError(f"Laguerre indices must be non-negative (got n={n}, alpha={alpha})")
    x_arr = np.asarray(x, dtype=float)
    prev = np.ones_like(x_arr)
    if n == 0:
        return prev if x_arr.ndim else float(prev)
    cur = 1.0 + alpha - x_arr
    for j in range(2, n + 1):
        prev, cur = cur, ((2 * j - 1 + alpha - x_arr) * cur - (j - 1 + alpha) * prev) / j
    return cur if x_arr.ndim else float(cur)


def _log_norm(q: QuantumNumbers) -> float:
    """log(n_r!/(n_r + |m_l|)!)."""
    return math.lgamma(q.n_r + 1) - math.lgamma(q.n_r + abs(q.m_l) + 1)


def _envelope(q: QuantumNumbers, u: np.ndarray, log_scale: float) -> np.ndarray:
    """exp(log_scale + |m_l|·log u − u), zero at u = 0 for m_l ≠ 0."""
    alpha = abs(q.m_l)
    if alpha == 0:
        return np.exp(log_scale - u)
    with np.errstate(divide="ignore"):
        return np.exp(log_scale + alpha * np.log(u) - u)


def psi_squared(s: Eigenstate, r: float | np.ndarray, phi: float | np.ndarray = 0.0) -> float | np.ndarray:
    """Probability density |Ψ(r, φ)|² in units of length⁻².

    ``phi`` is accepted for completeness; the density is rotationally
    symmetric and the result broadcasts over ``r`` and ``phi``.
    """
    r_arr, _ = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(phi, dtype=float))
    if np.any(r_arr < 0):
        raise DomainError("r must be non-negative")
    ell = s.length_scale
    u = (r_arr / ell) ** 2
    poly = laguerre(s.q.n_r, abs(s.q.m_l), u)
    value = _envelope(s.q, u, _log_norm(s.q)) * poly * poly / (math.pi * ell * ell)
    return value if value.ndim else float(value)


def radial_wavefunction(s: Eigenstate, r: float | np.ndarray) -> float | np.ndarray:
    """Signed radial amplitude R with Ψ = R(r)·e^(i m_l φ)/√(2π).

    Normalized so that ∫₀^∞ R² r dr = 1; the sign follows the Laguerre
    factor, so R changes sign exactly n_r times.
    """
    r_arr = np.asarray(r, dtype=float)
    ell = s.length_scale
    u = (r_arr / ell) ** 2
    poly = laguerre(s.q.n_r, abs(s.q.m_l), u)
    value = math.sqrt(2.0) / ell * np.sqrt(_envelope(s.q, u, _log_norm(s.q))) * poly
    return value if value.ndim else float(value)


def _composite_legendre(func: Callable[[np.ndarray], np.ndarray], upper: float, panels: int) -> float:
    nodes, weights = np.polynomial.legendre.leggauss(_GL_NODES)
    edges = np.linspace(0.0, upper, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    points = mid[:, None] + half[:, None] * nodes[None, :]
    return float(np.sum(half[:, None] * weights[None, :] * func(points)))


def _cutoff(q1: QuantumNumbers, q2: QuantumNumbers) -> float:
    """r_cut/ℓ = √(2(2n_r + |m_l|) + 40) for the wider of the two states."""
    excitation = max(2 * q1.n_r + abs(q1.m_l), 2 * q2.n_r + abs(q2.m_l))
    return math.sqrt(2.0 * excitation + 40.0)


def _laguerre_tail(q1: QuantumNumbers, q2: QuantumNumbers, u_cut: float) -> float:
    """∫_{u_cut}^∞ of the product density in u = (r/ℓ)², exact by Gauss–Laguerre.

    After u = u_cut + v the integrand is e^(−v) times a polynomial of degree
    |m_l| + n_r1 + n_r2, which the chosen node count integrates exactly.
    """
    alpha = abs(q1.m_l)
    count = (alpha + q1.n_r + q2.n_r) // 2 + 2
    nodes, weights = np.polynomial.laguerre.laggauss(count)
    u = u_cut + nodes
    log_scale = 0.5 * (_log_norm(q1) + _log_norm(q2)) - u_cut
    envelope = np.exp(log_scale + alpha * np.log(u))
    return float(np.sum(weights * envelope * laguerre(q1.n_r, alpha, u) * laguerre(q2.n_r, alpha, u)))


def _radial_overlap(s1: Eigenstate, s2: Eigenstate, tol: float) -> float:
    """∫₀^∞ R1·R2 r dr: composite Gauss–Legendre on [0, r_cut] plus tail."""
    ell = s1.length_scale
    rho_cut = _cutoff(s1.q, s2.q)

    def integrand(r: np.ndarray) -> np.ndarray:
        return radial_wavefunction(s1, r) * radial_wavefunction(s2, r) * r

    panels = _MIN_PANELS
    previous = _composite_legendre(integrand, rho_cut * ell, panels)
    while panels < _MAX_PANELS:
        panels *= 2
        current = _composite_legendre(integrand, rho_cut * ell, panels)
        if abs(current - previous) <= tol:
            tail = _laguerre_tail(s1.q, s2.q, rho_cut * rho_cut)
            logger.debug("overlap %s/%s converged with %d panels, tail %.3e", s1.q, s2.q, panels, tail)
            return current + tail
        previous = current
    raise QuadratureFailure(f"Overlap of {s1.q} and {s2.q} did not converge with {_MAX_PANELS} panels")


def normalization_check(s: Eigenstate, tol: float = QUADRATURE_TOL) -> float:
    """∫∫ |Ψ|² r dφ dr; equals 1 for every state.

    Raises:
        QuadratureFailure: If successive refinements disagree by more than
            ``tol`` at the maximum panel count.
    """
    return _radial_overlap(s, s, tol)


def orthogonality_check(s1: Eigenstate, s2: Eigenstate, tol: float = QUADRATURE_TOL) -> float:
    """Overlap ⟨Ψ1|Ψ2⟩ of two distinct states with the same params.

    Different m_l integrate to zero over φ and return 0.0 without
    quadrature.

    Raises:
        DomainError: If the states share quantum numbers or differ in params.
        QuadratureFailure: As in :func:`normalization_check`.
    """
    if s1.params != s2.params:
        raise DomainError("Overlap requires both states to share the same params")
    if s1.q == s2.q:
        raise DomainError(f"Overlap requires distinct states (got {s1.q} twice)")
    if s1.q.m_l != s2.q.m_l:
        return 0.0
    return _radial_overlap(s1, s2, tol)


def density_spread_metric(s: Eigenstate) -> float:
    """Root-mean-square radius √⟨r²⟩ = ℓ·√(2n_r + |m_l| + 1)."""
    return s.length_scale * math.sqrt(s.q.shell)


def _pixel_centres(radius: float, resolution: int) -> np.ndarray:
    step = 2.0 * radius / resolution
    return -radius + (np.arange(resolution) + 0.5) * step


def density_grid(
    s: Eigenstate,
    radius: float | None = None,
    resolution: int = 257,
    *,
    resolution_cap: int = DEFAULT_RESOLUTION_CAP,
    threads: int = 1,
) -> DensityGrid:
    """Sample |Ψ|² on a resolution × resolution raster.

    Args:
        s: Eigenstate to draw.
        radius: Half-width of the square; defaults to 5·√⟨r²⟩.
        resolution: Pixels per side (≥ 2).
        resolution_cap: Largest accepted resolution.
        threads: Worker threads; rows are split into contiguous bands.

    Raises:
        DomainError: On nonpositive radius or resolution < 2.
        BudgetExceeded: If resolution exceeds ``resolution_cap``.
    """
    if radius is None:
        radius = 5.0 * density_spread_metric(s)
    if not radius > 0:
        raise DomainError(f"radius must be positive (got {radius})")
    if resolution < 2:
        raise DomainError(f"resolution must be at least 2 (got {resolution})")
    if resolution > resolution_cap:
        raise BudgetExceeded(f"resolution {resolution} exceeds cap {resolution_cap}")

    xs = _pixel_centres(radius, resolution)
    ys = xs[::-1]

    def band(rows: np.ndarray) -> np.ndarray:
        return np.asarray(psi_squared(s, np.hypot(xs[None, :], ys[rows][:, None])))

    bands = np.array_split(np.arange(resolution), max(1, min(threads, resolution)))
    if len(bands) > 1:
        with ThreadPoolExecutor(max_workers=len(bands)) as pool:
            values = np.vstack(list(pool.map(band, bands)))
    else:
        values = band(bands[0])

    e = s.params
    metadata = {
        "n_r": s.q.n_r,
        "m_l": s.q.m_l,
        "radius": radius,
        "resolution": resolution,
        "length_scale": s.length_scale,
        "M_eff": e.M_eff,
        "Omega": e.Omega,
        "gamma": e.gamma,
        "sampling": "pixel centres, row 0 at y = +radius",
        "outside_disc": "evaluated",
    }
    return DensityGrid(radius=radius, resolution=resolution, values=values, metadata=metadata)


def radial_maxima(s: Eigenstate, radius: float | None = None, samples: int = 4001) -> int:
    """Number of local maxima of |Ψ|² along a ray from the origin.

    The origin counts when the density decreases away from it (m_l = 0),
    so the result is n_r + 1 for every state.
    """
    if radius is None:
        radius = 5.0 * density_spread_metric(s)
    r = np.linspace(0.0, radius, samples)
    values = np.asarray(psi_squared(s, r))
    inner = (values[1:-1] > values[:-2]) & (values[1:-1] >= values[2:])
    return int(np.count_nonzero(inner)) + int(values[0] > values[1])


def density_panel(
    e: EffectiveParams,
    radius: float | None = None,
    resolution: int = 129,
    size: int = 5,
    *,
    resolution_cap: int = DEFAULT_RESOLUTION_CAP,
    threads: int = 1,
) -> list[DensityGrid]:
    """Rasters for n_r, |m_l| ∈ 0..size−1, row-major in (n_r, |m_l|).

    All panels share one radius (default: 5·√⟨r²⟩ of the widest state) so
    ring sizes compare across the panel.
    """
    if size < 1:
        raise DomainError(f"size must be positive (got {size})")
    states = [Eigenstate(e, QuantumNumbers(n_r, m_l)) for n_r in range(size) for m_l in range(size)]
    if radius is None:
        radius = 5.0 * max(density_spread_metric(s) for s in states)
    return [
        density_grid(s, radius, resolution, resolution_cap=resolution_cap, threads=threads)
        for s in states
    ]


def spread_sweep(
    base: PhysicalParams,
    parameter: SweepParameter,
    values: Sequence[Quantity],
    q: QuantumNumbers = QuantumNumbers(0, 0),
    tol: float = DEFAULT_CASE_TOL,
) -> list[dict[str, Any]]:
    """√⟨r²⟩ of state ``q`` while one input varies.

    ``theta`` and ``B`` replace that field of ``base``; ``saturated_B`` sets
    B and keeps Bθ = ħ by taking θ = ħ/B (the Landau case).
    """
    rows = []
    for value in values:
        if parameter == "theta":
            p = replace(base, theta=value)
        elif parameter == "B":
            p = replace(base, B=value)
        else:
            p = replace(base, B=value, theta=base.hbar / value)
        s = Eigenstate.from_physical(p, q, tol)
        rows.append(
            {
                "value": value,
                "case": classify_case(p, tol).value,
                "length_scale": s.length_scale,
                "spread": density_spread_metric(s),
            }
        )
    return rows


__all__ = [
    "DEFAULT_RESOLUTION_CAP",
    "DensityGrid",
    "Eigenstate",
    "density_grid",
    "density_panel",
    "density_spread_metric",
    "laguerre",
    "normalization_check",
    "orthogonality_check",
    "psi_squared",
    "radial_maxima",
    "radial_wavefunction",
    "spread_sweep",
]
