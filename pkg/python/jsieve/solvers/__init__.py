"""Exact solvers for the divisor classes L and Delta."""

from jsieve.solvers.delta_solver import (
    SLOPE_RULE,
    DeltaSearch,
    audit_delta,
    slope_profile,
    slope_violations,
    solve_Delta,
)
from jsieve.solvers.l_solver import (
    audit_L,
    fixed_coefficients,
    solve_L,
    solve_L_family,
    solve_type2_coefficients,
)

__all__ = [
    "solve_L",
    "solve_L_family",
    "solve_type2_coefficients",
    "fixed_coefficients",
    "audit_L",
    "solve_Delta",
    "DeltaSearch",
    "audit_delta",
    "slope_profile",
    "slope_violations",
    "SLOPE_RULE",
]
