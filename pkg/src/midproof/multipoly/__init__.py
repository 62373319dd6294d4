"""Polynomials over Q, Groebner bases and ideal membership with cofactors."""

from .groebner import (
    DivisionResult,
    MembershipResult,
    MembershipWitness,
    buchberger,
    combine,
    divide,
    groebner_with_reps,
    ideal_member,
    is_groebner,
    is_reduced,
    s_polynomial,
)
from .parse import PolySyntaxError, UnknownVariableError, parse_poly, parse_poly_lines
from .poly import (
    DEFAULT_ORDER,
    GREVLEX,
    GRLEX,
    LEX,
    Monomial,
    MonomialOrder,
    Poly,
    VarTableMismatch,
    get_order,
    var_table,
)

__all__ = [
    "DivisionResult", "MembershipResult", "MembershipWitness", "buchberger", "combine",
    "divide", "groebner_with_reps", "ideal_member", "is_groebner", "is_reduced",
    "s_polynomial", "PolySyntaxError", "UnknownVariableError", "parse_poly",
    "parse_poly_lines", "DEFAULT_ORDER", "GREVLEX", "GRLEX", "LEX", "Monomial",
    "MonomialOrder", "Poly", "VarTableMismatch", "get_order", "var_table",
]
