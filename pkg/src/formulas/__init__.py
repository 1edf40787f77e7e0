"""Closed-form γ_sp values for settled families and Cartesian product rules"""

from formulas.cartesian import Interval, cartesian_parity_bounds, half_order_rule
from formulas.formulas import NotApplicableError, gamma_sp_formula
from formulas.specs import FamilySpec, FamilySpecError, SpecKind, construct, parse_family_spec

__all__ = [
    "Interval",
    "cartesian_parity_bounds",
    "half_order_rule",
    "NotApplicableError",
    "gamma_sp_formula",
    "FamilySpec",
    "FamilySpecError",
    "SpecKind",
    "construct",
    "parse_family_spec",
]
