"""Exact coefficient rings: Laurent polynomials, cyclotomic numbers, sqrt extensions."""

from .cyclotomic import Cyclotomic, CyclotomicField, cyclotomic_poly, field, sqrt_exact
from .laurent import Laurent, LaurentRing, canonical_string, parse_laurent
from .quantum import quantum_binomial, quantum_factorial, quantum_integer
from .sqrtext import SqrtExt, sqrt_element

__all__ = [
    "Cyclotomic",
    "CyclotomicField",
    "Laurent",
    "LaurentRing",
    "SqrtExt",
    "canonical_string",
    "cyclotomic_poly",
    "field",
    "laurent_eval",
    "parse_laurent",
    "quantum_binomial",
    "quantum_factorial",
    "quantum_integer",
    "specialize",
    "sqrt_element",
    "sqrt_exact",
]


def laurent_eval(p: Laurent, x: Cyclotomic) -> Cyclotomic:
    """Substitute the variable of ``p`` by ``x``."""
    return p.evaluate(x)


def specialize(p: Laurent, order: int, exp: int = 1) -> Cyclotomic:
    """Image of ``p`` under x -> zeta_order^exp."""
    return p.evaluate(field(order).zeta(exp))
