"""Exact arithmetic kernel: Laurent polynomials, rational expressions, (a;q)-primitives."""

from aqrook.exactalg.laurent import B, S, Z, LaurentPoly, Monomial, format_poly, parse_poly, poly_arith
from aqrook.exactalg.qseries import (
    LinearArg,
    aq_binomial,
    aq_binomial_factorial_form,
    aq_factorial,
    aq_number,
    big_weight,
    pochhammer,
    pochhammer_multi,
    q,
    q_binomial,
    q_factorial,
    q_number,
    qmono,
    small_weight,
)
from aqrook.exactalg.ratexpr import (
    ONE,
    ZERO,
    RatExpr,
    as_ratexpr,
    canonical_sides,
    evaluate,
    format_ratexpr,
    limit_a_infinity,
    parse_ratexpr,
    ratexpr_arith,
    ratexpr_equal,
    ratsum,
    rescale_q,
    shift_z,
    substitute_a,
)

__all__ = [
    "B", "S", "Z", "LaurentPoly", "Monomial", "format_poly", "parse_poly", "poly_arith",
    "LinearArg", "aq_binomial", "aq_binomial_factorial_form", "aq_factorial", "aq_number",
    "big_weight", "pochhammer", "pochhammer_multi", "q", "q_binomial", "q_factorial",
    "q_number", "qmono", "small_weight",
    "ONE", "ZERO", "RatExpr", "as_ratexpr", "canonical_sides", "evaluate", "format_ratexpr", "limit_a_infinity",
    "parse_ratexpr", "ratexpr_arith", "ratexpr_equal", "ratsum", "rescale_q", "shift_z", "substitute_a",
]
