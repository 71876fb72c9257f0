# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Closed-form physics of the charged oscillator on the noncommutative plane.

This package holds the library layer: parameters and regime
classification, the energy spectrum, exact degeneracy structure and the
symmetric-gauge eigenfunctions. Everything here is a pure function of its
inputs; values are frozen dataclasses safe to share between threads.

Components:
    params: PhysicalParams, EffectiveParams, QuantumNumbers, classify_case.
    spectrum: energy, energy_coefficient_exact, min_energy_steps, spectrum_rows.
    degeneracy: κ/ξ machinery, partners, level grouping.
    wavefunctions: Laguerre polynomials, |Ψ|², quadrature checks, rasters.
    rational: Fraction helpers and the NotRational marker.
    errors: Exception hierarchy with CLI exit codes.

Example:
    Reproducing the κ = 1/3 degeneracy::

        from fractions import Fraction
        from nc_oscillator.physics import group_levels

        levels = group_levels(Fraction(1, 3), 3, 0, 11)
        level = next(lv for lv in levels if lv.coefficient == 7)
        [s.as_tuple() for s in level.states]
        # [(0, 9), (1, 6), (2, 3), (3, 0)]
"""

from .degeneracy import (
    DEFAULT_STATE_CAP,
    Branch,
    CaseIDegeneracySpec,
    CaseIIIDegeneracySpec,
    EnergyLevel,
    case3_specs,
    degeneracy_count_profile,
    f_candidates,
    g_candidates,
    group_levels,
    kappa_from_params,
    kappa_from_spec,
    kappa_indices,
    partners_case_negative,
    partners_case_positive,
    scan_case1,
    scan_case3,
    theta_d_case1,
    xi_exact,
    xi_from_params,
)
from .errors import (
    BudgetExceeded,
    CaseMismatch,
    ConstraintViolation,
    ConvergenceFailure,
    DomainError,
    EmptyResult,
    GridTooCoarse,
    OscillatorError,
    QuadratureFailure,
    SingularSample,
)
from .params import (
    DEFAULT_CASE_TOL,
    ELECTRON_MASS,
    ELECTRON_OMEGA,
    ELEMENTARY_CHARGE,
    HBAR_SI,
    CaseLabel,
    EffectiveParams,
    PhysicalParams,
    QuantumNumbers,
    UnitsMode,
    classify_case,
    effective_params,
    f_exp,
    field_from_f,
    quantum_hall_field,
    theta_from_g,
)
from .rational import NotRational, exact_sqrt, format_quantity, parse_quantity, ratio_exact
from .spectrum import (
    energy,
    energy_coefficient,
    energy_coefficient_exact,
    low_lying_table,
    min_energy_steps,
    spectrum_rows,
)
from .wavefunctions import (
    DEFAULT_RESOLUTION_CAP,
    DensityGrid,
    Eigenstate,
    density_grid,
    density_panel,
    density_spread_metric,
    laguerre,
    normalization_check,
    orthogonality_check,
    psi_squared,
    radial_maxima,
    radial_wavefunction,
    spread_sweep,
)

__all__ = [
    "DEFAULT_CASE_TOL",
    "DEFAULT_RESOLUTION_CAP",
    "DEFAULT_STATE_CAP",
    "ELECTRON_MASS",
    "ELECTRON_OMEGA",
    "ELEMENTARY_CHARGE",
    "HBAR_SI",
    "Branch",
    "BudgetExceeded",
    "CaseIDegeneracySpec",
    "CaseIIIDegeneracySpec",
    "CaseLabel",
    "CaseMismatch",
    "ConstraintViolation",
    "ConvergenceFailure",
    "DensityGrid",
    "DomainError",
    "EffectiveParams",
    "Eigenstate",
    "EmptyResult",
    "EnergyLevel",
    "GridTooCoarse",
    "NotRational",
    "OscillatorError",
    "PhysicalParams",
    "QuadratureFailure",
    "QuantumNumbers",
    "SingularSample",
    "UnitsMode",
    "case3_specs",
    "classify_case",
    "degeneracy_count_profile",
    "density_grid",
    "density_panel",
    "density_spread_metric",
    "effective_params",
    "energy",
    "energy_coefficient",
    "energy_coefficient_exact",
    "exact_sqrt",
    "f_candidates",
    "f_exp",
    "field_from_f",
    "format_quantity",
    "g_candidates",
    "group_levels",
    "kappa_from_params",
    "kappa_from_spec",
    "kappa_indices",
    "laguerre",
    "low_lying_table",
    "min_energy_steps",
    "normalization_check",
    "orthogonality_check",
    "parse_quantity",
    "partners_case_negative",
    "partners_case_positive",
    "psi_squared",
    "quantum_hall_field",
    "radial_maxima",
    "radial_wavefunction",
    "ratio_exact",
    "scan_case1",
    "scan_case3",
    "spectrum_rows",
    "spread_sweep",
    "theta_d_case1",
    "theta_from_g",
    "xi_exact",
    "xi_from_params",
]
