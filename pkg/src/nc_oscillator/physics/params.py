# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Physical and effective parameters of the noncommutative oscillator.

The oscillator is described by (m, ω, B, θ, ħ) where B is the magnetic field
already multiplied by a unit charge. Substituting the symmetric-gauge
representation of the noncommutative operators turns the Hamiltonian into a
commutative planar oscillator with effective mass M, frequency Ω and an
angular-momentum coupling γ:

    H = (p_x² + p_y²)/2M + MΩ²(x² + y²)/2 − γ L_z

Everything is computed in dimensionless form (ħ = m = ω = 1) and rescaled on
exit, which keeps SI inputs (ħ ~ 1e-34, θ ~ 1e-21) away from float
underflow. With b = B/(mω) and t = θmω/ħ:

    𝔏 = 2 + 2√(1 − bt) − bt          (units of ħ²)
    M = 4/(𝔏 + t²)                   (units of m)
    γ = (b + t)/2                    (units of ω)
    Ω² − γ² = (bt − 𝔏)²/(4𝔏)         (units of ω²)

Components:
    UnitsMode, CaseLabel: Enumerations.
    PhysicalParams: Validated physical inputs.
    EffectiveParams: Derived (M, Ω, γ, 𝔏).
    QuantumNumbers: (n_r, m_l) pair.
    effective_params: PhysicalParams → EffectiveParams.
    classify_case: Case I / II / III classification.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import ConstraintViolation, DomainError
from .rational import Quantity, is_exact

logger = logging.getLogger(__name__)

HBAR_SI = 1.054571817e-34
ELEMENTARY_CHARGE = 1.602176634e-19
ELECTRON_MASS = 9.109e-31
ELECTRON_OMEGA = 1.518e16
DEFAULT_CASE_TOL = 1e-12


class UnitsMode(str, Enum):
    """Interpretation of the real fields of PhysicalParams."""

    SI = "si"
    DIMENSIONLESS = "dimensionless"


class CaseLabel(str, Enum):
    """The three regimes allowed by 0 ≤ Bθ ≤ ħ."""

    CASE_I = "CaseI_NoField"
    CASE_II = "CaseII_Saturated"
    CASE_III = "CaseIII_Intermediate"


@dataclass(frozen=True)
class PhysicalParams:
    """Physical inputs (m, ω, B, θ, ħ).

    Fields accept floats or exact Fractions. In dimensionless mode
    ħ = m = ω = 1 and B, θ are pure numbers.

    ``case_tol`` is the relative slack on Bθ ≤ ħ for float fields; exact
    fields are compared exactly.

    Raises:
        DomainError: On nonpositive m, ω, θ, ħ or negative B.
        ConstraintViolation: If Bθ > ħ.
    """

    mass: Quantity
    omega: Quantity
    B: Quantity
    theta: Quantity
    hbar: Quantity = HBAR_SI
    units: UnitsMode = UnitsMode.SI
    case_tol: float = field(default=DEFAULT_CASE_TOL, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.units is UnitsMode.DIMENSIONLESS and any(
            v != 1 for v in (self.mass, self.omega, self.hbar)
        ):
            raise DomainError("Dimensionless mode requires mass = omega = hbar = 1")
        for name in ("mass", "omega", "hbar"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive (got {getattr(self, name)})")
        if not self.theta > 0:
            raise DomainError(f"theta must be positive (got {self.theta}); theta = 0 is not modelled")
        if not self.B >= 0:
            raise DomainError(f"B must be non-negative (got {self.B})")
        bt = self.field_theta_product()
        if bt > (1 if self.is_exact else 1.0 + self.case_tol):
            raise ConstraintViolation(f"B·theta = {bt}·hbar exceeds hbar; effective mass would be complex")

    @classmethod
    def dimensionless(cls, B: Quantity, theta: Quantity, case_tol: float = DEFAULT_CASE_TOL) -> PhysicalParams:
        """Build dimensionless params (ħ = m = ω = 1)."""
        one = Fraction(1)
        return cls(
            mass=one, omega=one, B=B, theta=theta, hbar=one, units=UnitsMode.DIMENSIONLESS, case_tol=case_tol
        )

    @classmethod
    def si(
        cls,
        mass: float,
        omega: float,
        B: float,
        theta: float,
        hbar: float = HBAR_SI,
        case_tol: float = DEFAULT_CASE_TOL,
    ) -> PhysicalParams:
        """Build SI params."""
        return cls(mass=mass, omega=omega, B=B, theta=theta, hbar=hbar, units=UnitsMode.SI, case_tol=case_tol)

    @classmethod
    def electron(cls, B: float, theta: float, hbar: float = HBAR_SI) -> PhysicalParams:
        """SI params for an electron bound at ω = 1.518e16 s⁻¹."""
        return cls.si(ELECTRON_MASS, ELECTRON_OMEGA, B, theta, hbar)

    @property
    def is_exact(self) -> bool:
        """True when every field is an exact rational."""
        return is_exact(self.mass, self.omega, self.B, self.theta, self.hbar)

    @property
    def energy_scale(self) -> float:
        """ħω: the unit of energy in dimensionless mode."""
        return float(self.hbar) * float(self.omega)

    @property
    def length_unit(self) -> float:
        """√(ħ/(mω)): the unit of length in dimensionless mode."""
        return math.sqrt(float(self.hbar) / (float(self.mass) * float(self.omega)))

    def to_dimensionless(self) -> tuple[Quantity, Quantity]:
        """Return (b, t) = (B/(mω), θmω/ħ); exact when all fields are rational."""
        if self.is_exact:
            m, w, h = Fraction(self.mass), Fraction(self.omega), Fraction(self.hbar)
            return Fraction(self.B) / (m * w), Fraction(self.theta) * m * w / h
        m, w, h = float(self.mass), float(self.omega), float(self.hbar)
        return float(self.B) / (m * w), float(self.theta) * m * w / h

    def field_theta_product(self) -> Quantity:
        """Bθ/ħ (dimensionless)."""
        b, t = self.to_dimensionless()
        return b * t


@dataclass(frozen=True)
class EffectiveParams:
    """Effective commutative oscillator: mass M, frequency Ω, coupling γ, 𝔏.

    ``hbar`` is carried along so energies and length scales can be formed
    without the original PhysicalParams.
    """

    M_eff: float
    Omega: float
    gamma: float
    L_factor: float
    hbar: float

    @property
    def ratio(self) -> float:
        """γ/Ω: κ in Case I, ξ in Case III, 1 in Case II."""
        return self.gamma / self.Omega

    @property
    def length_scale(self) -> float:
        """√(ħ/(MΩ))."""
        return math.sqrt(self.hbar / (self.M_eff * self.Omega))


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    """Radial quantum number n_r ≥ 0 and angular momentum m_l ∈ ℤ."""

    n_r: int
    m_l: int

    def __post_init__(self) -> None:
        if isinstance(self.n_r, bool) or not isinstance(self.n_r, int) or self.n_r < 0:
            raise DomainError(f"n_r must be a non-negative integer (got {self.n_r!r})")
        if isinstance(self.m_l, bool) or not isinstance(self.m_l, int):
            raise DomainError(f"m_l must be an integer (got {self.m_l!r})")

    @property
    def shell(self) -> int:
        """2n_r + |m_l| + 1: the coefficient of ħΩ."""
        return 2 * self.n_r + abs(self.m_l) + 1

    def as_tuple(self) -> tuple[int, int]:
        return (self.n_r, self.m_l)


def _dimensionless_effective(b: float, t: float, tol: float) -> tuple[float, float, float, float]:
    """(M, Ω, γ, 𝔏) in units of (m, ω, ω, ħ²)."""
    bt = b * t
    if bt > 1.0 + tol:
        raise ConstraintViolation(f"B·theta = {bt!r}·hbar exceeds hbar; effective mass would be complex")
    root = math.sqrt(max(0.0, 1.0 - bt))
    L = 2.0 + 2.0 * root - bt
    M = 4.0 / (L + t * t)
    gamma = 0.5 * (b + t)
    # Ω ≥ γ by construction; equality when bt = 1 (𝔏 = 1)
    Omega = math.sqrt(gamma * gamma + (bt - L) ** 2 / (4.0 * L))
    return M, Omega, gamma, L


def effective_params(p: PhysicalParams, tol: float = DEFAULT_CASE_TOL) -> EffectiveParams:
    """Derive (M, Ω, γ, 𝔏) from the physical parameters.

    Args:
        p: Physical parameters.
        tol: Relative slack on Bθ ≤ ħ before ConstraintViolation.

    Returns:
        EffectiveParams in the units of ``p``.

    Raises:
        ConstraintViolation: If Bθ > ħ(1 + tol).
    """
    b, t = p.to_dimensionless()
    M, Omega, gamma, L = _dimensionless_effective(float(b), float(t), tol)
    m, w, h = float(p.mass), float(p.omega), float(p.hbar)
    eff = EffectiveParams(M_eff=M * m, Omega=Omega * w, gamma=gamma * w, L_factor=L * h * h, hbar=h)
    logger.debug("effective params b=%r t=%r -> %r", b, t, eff)
    return eff


def classify_case(p: PhysicalParams, tol: float = DEFAULT_CASE_TOL) -> CaseLabel:
    """Classify the regime: B = 0, Bθ = ħ, or 0 < Bθ < ħ.

    Exact rational params are compared exactly; float params use ``tol``
    as relative tolerance on Bθ/ħ = 1.

    Raises:
        ConstraintViolation: If Bθ > ħ (beyond ``tol`` in float mode).
    """
    if p.B == 0:
        return CaseLabel.CASE_I
    bt = p.field_theta_product()
    if p.is_exact:
        if bt > 1:
            raise ConstraintViolation(f"B·theta = {bt}·hbar exceeds hbar")
        return CaseLabel.CASE_II if bt == 1 else CaseLabel.CASE_III
    if bt > 1.0 + tol:
        raise ConstraintViolation(f"B·theta = {bt!r}·hbar exceeds hbar")
    if abs(bt - 1.0) <= tol:
        return CaseLabel.CASE_II
    return CaseLabel.CASE_III


def f_exp(B: float, mass: float, omega: float) -> float:
    """Dimensionless field scale f = B/(mω)."""
    return B / (mass * omega)


def field_from_f(f: Quantity, mass: float, omega: float) -> float:
    """Inverse of :func:`f_exp`: B = f·mω."""
    return float(f) * mass * omega


def theta_from_g(g: Quantity, mass: float, omega: float, hbar: float = HBAR_SI) -> float:
    """θ = g·ħ/(mω)."""
    return float(g) * hbar / (mass * omega)


def quantum_hall_field(charge: float = ELEMENTARY_CHARGE) -> float:
    """Typical quantum Hall field, 12 kg·A⁻¹·s⁻² times the particle charge."""
    return 12.0 * charge


__all__ = [
    "DEFAULT_CASE_TOL",
    "ELECTRON_MASS",
    "ELECTRON_OMEGA",
    "ELEMENTARY_CHARGE",
    "HBAR_SI",
    "CaseLabel",
    "EffectiveParams",
    "PhysicalParams",
    "QuantumNumbers",
    "UnitsMode",
    "classify_case",
    "effective_params",
    "f_exp",
    "field_from_f",
    "quantum_hall_field",
    "theta_from_g",
]
