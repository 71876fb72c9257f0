# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Exact degeneracy machinery.

Levels (n_r, m_l) and (n_r', m_l') are degenerate exactly when their
coefficients (2n_r + |m_l| + 1) − m_l·ρ agree, with ρ = γ/Ω. That can only
happen for rational ρ, so all grouping here is done on Fractions (or on
integer keys scaled by the denominator), never on floats.

Case I (B = 0): ρ = κ = k/(2n + k) for θ = (ħ/mω)·k/√(n(n + k)).
Case II (Bθ = ħ): ρ = 1, Landau levels, every level infinitely degenerate.
Case III (0 < Bθ < ħ): ρ = ξ = (f + g)/√(4 + (f − g)²) with B = f·mω and
θ = g·ħ/(mω); ξ is rational when f − g equals 4nk/(n² − k²) or
(n² − k²)/(nk) for coprime n > k, not both odd.

Components:
    CaseIDegeneracySpec, CaseIIIDegeneracySpec, Branch, EnergyLevel: Types.
    kappa_from_spec, theta_d_case1, kappa_from_params: Case I.
    xi_from_params, xi_exact, g_candidates, f_candidates, case3_specs: Case III.
    scan_case1, scan_case3: Spec enumeration.
    kappa_indices: Rational ratio → (n, k).
    partners_case_positive, partners_case_negative: Degenerate partners.
    group_levels, degeneracy_count_profile: Brute-force grouping.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Literal

import numpy as np

from .errors import BudgetExceeded, CaseMismatch, DomainError, EmptyResult
from .params import CaseLabel, PhysicalParams, QuantumNumbers, classify_case, effective_params
from .rational import NotRational, ratio_exact
from .spectrum import energy_coefficient_exact

logger = logging.getLogger(__name__)

DEFAULT_STATE_CAP = 10_000_000
MAX_BOX_EXTENT = 10_000
# int64 headroom for the scaled level keys
_INT64_SAFE = 2**62

SignFilter = Literal["all", "nonnegative", "negative"]


class Branch(str, Enum):
    """Which difference f − g makes 4 + (f − g)² a rational square."""

    FOUR_NK = "4nk/(n^2-k^2)"
    N_SQUARED_MINUS_K_SQUARED = "(n^2-k^2)/(nk)"

    def difference(self, n: int, k: int) -> Fraction:
        if self is Branch.FOUR_NK:
            return Fraction(4 * n * k, n * n - k * k)
        return Fraction(n * n - k * k, n * k)


def _require_positive_int(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive integer (got {value!r})")


def _check_case3_indices(n: int, k: int) -> None:
    _require_positive_int("n", n)
    _require_positive_int("k", k)
    if n <= k:
        raise DomainError(f"n must exceed k (got n={n}, k={k})")
    if math.gcd(n, k) != 1:
        raise DomainError(f"n and k must be coprime (got n={n}, k={k})")
    if n % 2 == 1 and k % 2 == 1:
        raise DomainError(f"n and k must not both be odd (got n={n}, k={k})")


@dataclass(frozen=True)
class CaseIDegeneracySpec:
    """Indices (n, k) of c_{n,k} = k/√(n(n + k))."""

    n: int
    k: int

    def __post_init__(self) -> None:
        _require_positive_int("n", self.n)
        _require_positive_int("k", self.k)

    @property
    def c_squared(self) -> Fraction:
        return Fraction(self.k * self.k, self.n * (self.n + self.k))

    @property
    def kappa(self) -> Fraction:
        return kappa_from_spec(self)


@dataclass(frozen=True)
class CaseIIIDegeneracySpec:
    """A rational-ξ construction: field scale f, indices (n, k) and branch.

    Raises:
        DomainError: If (n, k) are not coprime, both odd, n ≤ k, or the
            resulting g violates g > 0 and f·g < 1.
    """

    f_exp: Fraction
    n: int
    k: int
    branch: Branch

    def __post_init__(self) -> None:
        _check_case3_indices(self.n, self.k)
        if not Fraction(self.f_exp) > 0:
            raise DomainError(f"f_exp must be positive (got {self.f_exp})")
        g = self.g
        if not (g > 0 and Fraction(self.f_exp) * g < 1):
            raise DomainError(f"g = {g} violates g > 0 and f·g < 1")

    @property
    def g(self) -> Fraction:
        return Fraction(self.f_exp) - self.branch.difference(self.n, self.k)

    @property
    def xi(self) -> Fraction:
        value = xi_exact(Fraction(self.f_exp), self.g)
        assert isinstance(value, Fraction)
        return value

    def theta_d(self, mass: float, omega: float, hbar: float) -> float:
        """Degenerate noncommutativity θ_d = g·ħ/(mω)."""
        return float(self.g) * hbar / (mass * omega)


@dataclass(frozen=True)
class EnergyLevel:
    """One energy level: coefficient of ħΩ and the states sharing it.

    ``coefficient`` is a Fraction for rational ratios; for an irrational
    ratio every level is a singleton carrying a float coefficient.
    """

    coefficient: Fraction | float
    states: tuple[QuantumNumbers, ...]

    @property
    def degeneracy(self) -> int:
        return len(self.states)


# ----------------------------------------------------------------- Case I


def kappa_from_spec(s: CaseIDegeneracySpec) -> Fraction:
    """κ = k/(2n + k), equal to √(c²/(4 + c²)) with c² = k²/(n(n + k))."""
    return Fraction(s.k, 2 * s.n + s.k)


def theta_d_case1(mass: float, omega: float, hbar: float, s: CaseIDegeneracySpec) -> float:
    """Degenerate noncommutativity θ_d = (ħ/(mω))·k/√(n(n + k))."""
    return (hbar / (mass * omega)) * s.k / math.sqrt(s.n * (s.n + s.k))


def kappa_from_params(p: PhysicalParams) -> float:
    """κ = γ/Ω = √(1 − 4ħ²/(4ħ² + m²ω²θ²)) for B = 0.

    Evaluated as t/√(4 + t²) with t = θmω/ħ, which has no cancellation for
    small θ.

    Raises:
        CaseMismatch: If B ≠ 0.
    """
    if p.B != 0:
        raise CaseMismatch("kappa is defined for B = 0 only; use xi_from_params")
    _, t = p.to_dimensionless()
    t = float(t)
    return t / math.sqrt(4.0 + t * t)


def scan_case1(n_max: int, k_max: int) -> list[CaseIDegeneracySpec]:
    """All (n, k) with 1 ≤ n ≤ n_max, 1 ≤ k ≤ k_max, sorted by κ then (n, k)."""
    _require_positive_int("n_max", n_max)
    _require_positive_int("k_max", k_max)
    specs = [CaseIDegeneracySpec(n, k) for n in range(1, n_max + 1) for k in range(1, k_max + 1)]
    specs.sort(key=lambda s: (s.kappa, s.n, s.k))
    return specs


# ----------------------------------------------------------------- Case III


def xi_from_params(p: PhysicalParams) -> float:
    """ξ = γ/Ω for 0 < Bθ < ħ.

    Raises:
        CaseMismatch: Outside Case III.
    """
    label = classify_case(p)
    if label is not CaseLabel.CASE_III:
        raise CaseMismatch(f"xi is defined for 0 < B·theta < hbar only (got {label.value})")
    return effective_params(p).ratio


def xi_exact(f: Fraction, g: Fraction) -> Fraction | NotRational:
    """ξ = (f + g)/√(4 + (f − g)²), exact when the radicand is a rational square.

    Raises:
        DomainError: If f ≤ 0, g ≤ 0 or f·g > 1.
    """
    f, g = Fraction(f), Fraction(g)
    if not (f > 0 and g > 0):
        raise DomainError(f"f and g must be positive (got f={f}, g={g})")
    if f * g > 1:
        raise DomainError(f"f·g = {f * g} exceeds 1")
    return ratio_exact(f, g)


def _admissible(f: Fraction, g: Fraction) -> bool:
    return f > 0 and g > 0 and f * g < 1


def case3_specs(f_exp: Fraction, n: int, k: int) -> list[CaseIIIDegeneracySpec]:
    """Admissible constructions for field scale f_exp, one per surviving branch.

    Raises:
        DomainError: If (n, k) violate coprimality, parity or n > k.
        EmptyResult: If neither branch yields g > 0 with f·g < 1.
    """
    _check_case3_indices(n, k)
    f_exp = Fraction(f_exp)
    specs = [
        CaseIIIDegeneracySpec(f_exp, n, k, branch)
        for branch in Branch
        if _admissible(f_exp, f_exp - branch.difference(n, k))
    ]
    if not specs:
        raise EmptyResult(f"No admissible g for f={f_exp}, n={n}, k={k}")
    return specs


def g_candidates(f_exp: Fraction, n: int, k: int) -> list[Fraction]:
    """g values with rational ξ for fixed field scale f_exp.

    Candidates are f − 4nk/(n² − k²) and f − (n² − k²)/(nk), in that order,
    filtered to g > 0 and f·g < 1.
    """
    return [spec.g for spec in case3_specs(f_exp, n, k)]


def f_candidates(g_exp: Fraction, n: int, k: int) -> list[Fraction]:
    """f values with rational ξ for fixed noncommutativity scale g_exp.

    ξ is symmetric in (f, g), so f = g + 4nk/(n² − k²) or g + (n² − k²)/(nk).

    Raises:
        EmptyResult: If no candidate satisfies f·g < 1.
    """
    _check_case3_indices(n, k)
    g_exp = Fraction(g_exp)
    result = [
        g_exp + branch.difference(n, k)
        for branch in Branch
        if _admissible(g_exp + branch.difference(n, k), g_exp)
    ]
    if not result:
        raise EmptyResult(f"No admissible f for g={g_exp}, n={n}, k={k}")
    return result


def scan_case3(f_exp: Fraction, n_max: int, k_max: int) -> list[CaseIIIDegeneracySpec]:
    """All admissible constructions with k < n ≤ n_max, k ≤ k_max.

    Raises:
        EmptyResult: If no pair yields an admissible g.
    """
    _require_positive_int("n_max", n_max)
    _require_positive_int("k_max", k_max)
    specs: list[CaseIIIDegeneracySpec] = []
    for n in range(2, n_max + 1):
        for k in range(1, min(n - 1, k_max) + 1):
            if math.gcd(n, k) != 1 or (n % 2 == 1 and k % 2 == 1):
                continue
            try:
                specs.extend(case3_specs(f_exp, n, k))
            except EmptyResult:
                continue
    if not specs:
        raise EmptyResult(f"No admissible construction for f={f_exp} up to n={n_max}")
    return specs


# ----------------------------------------------------------------- Partners


def kappa_indices(ratio: Fraction) -> tuple[int, int]:
    """Smallest (n, k) with k/(2n + k) = ratio, for rational 0 < ratio < 1."""
    if not isinstance(ratio, (Fraction, int)) or isinstance(ratio, bool):
        raise DomainError(f"Ratio must be rational (got {ratio!r})")
    ratio = Fraction(ratio)
    if not 0 < ratio < 1:
        raise DomainError(f"Ratio must lie in (0, 1) (got {ratio})")
    p, q = ratio.numerator, ratio.denominator
    if (q - p) % 2 == 0:
        return (q - p) // 2, p
    return q - p, 2 * p


def _verified(
    q: QuantumNumbers, n_r: int, m_l: int, kappa: Fraction
) -> QuantumNumbers | None:
    if n_r < 0:
        return None
    partner = QuantumNumbers(n_r, m_l)
    if energy_coefficient_exact(kappa, partner) != energy_coefficient_exact(kappa, q):
        return None
    return partner


def partners_case_positive(
    q: QuantumNumbers, n: int, k: int
) -> tuple[QuantumNumbers | None, QuantumNumbers | None]:
    """Neighbours of q along the m_l ≥ 0 degeneracy chain for κ = k/(2n + k).

    Candidates (n_r − n, m_l + 2n + k) and (n_r + n, m_l − (2n + k)); each is
    kept only if n_r ≥ 0 and its exact coefficient equals that of q.
    """
    _require_positive_int("n", n)
    _require_positive_int("k", k)
    kappa = Fraction(k, 2 * n + k)
    step = 2 * n + k
    return (
        _verified(q, q.n_r - n, q.m_l + step, kappa),
        _verified(q, q.n_r + n, q.m_l - step, kappa),
    )


def partners_case_negative(
    q: QuantumNumbers, n: int, k: int
) -> tuple[QuantumNumbers | None, QuantumNumbers | None]:
    """Neighbours of q along the m_l ≤ 0 degeneracy chain for κ = k/(2n + k).

    Candidates (n_r + n + k, m_l + 2n + k) and (n_r − (n + k), m_l − (2n + k)),
    verified exactly as in :func:`partners_case_positive`.
    """
    _require_positive_int("n", n)
    _require_positive_int("k", k)
    kappa = Fraction(k, 2 * n + k)
    step = 2 * n + k
    return (
        _verified(q, q.n_r + n + k, q.m_l + step, kappa),
        _verified(q, q.n_r - (n + k), q.m_l - step, kappa),
    )


# ----------------------------------------------------------------- Grouping


def _check_box(n_r_max: int, m_l_min: int, m_l_max: int, state_cap: int) -> int:
    if n_r_max < 0:
        raise DomainError(f"n_r_max must be non-negative (got {n_r_max})")
    if n_r_max > MAX_BOX_EXTENT or max(abs(m_l_min), abs(m_l_max)) > MAX_BOX_EXTENT:
        raise DomainError(f"Box bounds must not exceed {MAX_BOX_EXTENT}")
    count = (n_r_max + 1) * max(0, m_l_max - m_l_min + 1)
    if count > state_cap:
        raise BudgetExceeded(f"Box holds {count} states, cap is {state_cap}")
    return count


def _keys_chunk(n_values: np.ndarray, m_values: np.ndarray, p: int, q: int) -> tuple[np.ndarray, ...]:
    n_grid, m_grid = np.meshgrid(n_values, m_values, indexing="ij")
    n_flat = n_grid.ravel()
    m_flat = m_grid.ravel()
    keys = (2 * n_flat + np.abs(m_flat) + 1) * q - m_flat * p
    return keys, n_flat, m_flat


def group_levels(
    kappa: Fraction | NotRational,
    n_r_max: int,
    m_l_min: int,
    m_l_max: int,
    *,
    state_cap: int = DEFAULT_STATE_CAP,
    threads: int = 1,
) -> list[EnergyLevel]:
    """Group every state of the box 0 ≤ n_r ≤ n_r_max, m_l_min ≤ m_l ≤ m_l_max by energy.

    Rational ratios are grouped on the exact integer key
    q·coefficient = (2n_r + |m_l| + 1)·q − m_l·p for κ = p/q. The box may be
    split across threads by n_r; output order does not depend on the split.

    Returns:
        Levels sorted by coefficient, states within a level sorted by (n_r, m_l).

    Raises:
        BudgetExceeded: If the box holds more than ``state_cap`` states.
    """
    count = _check_box(n_r_max, m_l_min, m_l_max, state_cap)
    if count == 0:
        return []

    if isinstance(kappa, NotRational):
        states = [QuantumNumbers(n, m) for n in range(n_r_max + 1) for m in range(m_l_min, m_l_max + 1)]
        levels = [EnergyLevel(s.shell - s.m_l * kappa.value, (s,)) for s in states]
        levels.sort(key=lambda lv: (lv.coefficient, lv.states[0]))
        return levels

    kappa = Fraction(kappa)
    if not 0 < kappa <= 1:
        raise DomainError(f"Ratio must lie in (0, 1] (got {kappa})")
    p, q = kappa.numerator, kappa.denominator
    extent = 2 * n_r_max + max(abs(m_l_min), abs(m_l_max)) + 1
    logger.debug("grouping %d states for kappa=%s", count, kappa)

    if extent * q + max(abs(m_l_min), abs(m_l_max)) * p >= _INT64_SAFE:
        return _group_levels_exact(kappa, n_r_max, m_l_min, m_l_max)

    m_values = np.arange(m_l_min, m_l_max + 1, dtype=np.int64)
    workers = max(1, min(threads, n_r_max + 1))
    chunks = np.array_split(np.arange(n_r_max + 1, dtype=np.int64), workers)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda chunk: _keys_chunk(chunk, m_values, p, q), chunks))
    else:
        parts = [_keys_chunk(chunks[0], m_values, p, q)]
    keys = np.concatenate([part[0] for part in parts])
    n_flat = np.concatenate([part[1] for part in parts])
    m_flat = np.concatenate([part[2] for part in parts])

    order = np.lexsort((m_flat, n_flat, keys))
    keys, n_flat, m_flat = keys[order], n_flat[order], m_flat[order]
    boundaries = np.flatnonzero(np.diff(keys)) + 1
    starts = np.concatenate(([0], boundaries))
    ends = np.concatenate((boundaries, [keys.size]))
    return [
        EnergyLevel(
            Fraction(int(keys[start]), q),
            tuple(QuantumNumbers(int(n), int(m)) for n, m in zip(n_flat[start:end], m_flat[start:end])),
        )
        for start, end in zip(starts, ends)
    ]


def _group_levels_exact(kappa: Fraction, n_r_max: int, m_l_min: int, m_l_max: int) -> list[EnergyLevel]:
    """Pure-integer fallback for ratios whose scaled keys overflow int64."""
    grouped: dict[Fraction, list[QuantumNumbers]] = {}
    for n in range(n_r_max + 1):
        for m in range(m_l_min, m_l_max + 1):
            state = QuantumNumbers(n, m)
            grouped.setdefault(energy_coefficient_exact(kappa, state), []).append(state)
    return [EnergyLevel(coef, tuple(sorted(states))) for coef, states in sorted(grouped.items())]


def degeneracy_count_profile(
    kappa: Fraction,
    coefficient_max: Fraction,
    *,
    sign: SignFilter = "all",
    m_l_max: int | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
    threads: int = 1,
) -> dict[Fraction, int]:
    """Number of states per level for every level with coefficient ≤ coefficient_max.

    The box n_r ≤ (C − 1)/2, −(C − 1)/(1 + κ) ≤ m_l ≤ (C − 1)/(1 − κ) holds
    every state of every such level. For κ = 1 the positive side is
    unbounded, so ``m_l_max`` must be given; when given it truncates both
    sides.

    Args:
        kappa: Rational ratio in (0, 1].
        coefficient_max: Largest coefficient C to report.
        sign: Restrict to all m_l, m_l ≥ 0, or m_l < 0.
        m_l_max: Optional |m_l| truncation (required for κ = 1).
        state_cap: Budget on enumerated states.
        threads: Worker threads for the enumeration.

    Raises:
        DomainError: For non-rational κ, or κ = 1 without m_l_max.
        BudgetExceeded: If the box exceeds ``state_cap``.
    """
    if isinstance(kappa, bool) or not isinstance(kappa, (Fraction, int)):
        raise DomainError(f"Degeneracy profiles need a rational ratio (got {kappa!r})")
    kappa = Fraction(kappa)
    if not 0 < kappa <= 1:
        raise DomainError(f"Ratio must lie in (0, 1] (got {kappa})")
    cmax = Fraction(coefficient_max)
    if cmax < 1:
        return {}

    n_bound = math.floor((cmax - 1) / 2)
    neg_bound = math.floor((cmax - 1) / (1 + kappa))
    if kappa < 1:
        pos_bound = math.floor((cmax - 1) / (1 - kappa))
    elif m_l_max is None:
        raise DomainError("Every level is infinitely degenerate at ratio 1; pass m_l_max")
    else:
        pos_bound = m_l_max
    if m_l_max is not None:
        pos_bound = min(pos_bound, m_l_max)
        neg_bound = min(neg_bound, m_l_max)

    low = 0 if sign == "nonnegative" else -neg_bound
    high = -1 if sign == "negative" else pos_bound
    levels = group_levels(kappa, n_bound, low, high, state_cap=state_cap, threads=threads)
    return {level.coefficient: level.degeneracy for level in levels if level.coefficient <= cmax}


__all__ = [
    "DEFAULT_STATE_CAP",
    "Branch",
    "CaseIDegeneracySpec",
    "CaseIIIDegeneracySpec",
    "EnergyLevel",
    "case3_specs",
    "degeneracy_count_profile",
    "f_candidates",
    "g_candidates",
    "group_levels",
    "kappa_from_params",
    "kappa_from_spec",
    "kappa_indices",
    "partners_case_negative",
    "partners_case_positive",
    "scan_case1",
    "scan_case3",
    "theta_d_case1",
    "xi_exact",
    "xi_from_params",
]
