"""Exact-rational Cayley-Dickson algebra toolkit."""

from .element import (
    CDElement,
    Rational,
    add,
    associator,
    commutator,
    conjugate,
    decompose,
    from_coeffs,
    from_halves,
    from_terms,
    halves,
    inner_product,
    is_doubly_pure,
    is_pure,
    make_basis,
    multiply,
    multiply_recursive,
    norm_sq,
    one,
    scale,
    sign_table,
    tilde,
    tilde_unit,
    trace,
    zero,
)
from .literals import (
    element_from_dict,
    element_from_json,
    element_to_dict,
    element_to_json,
    format_element,
    parse_element,
    parse_expression,
)

__all__ = [
    "CDElement",
    "Rational",
    "add",
    "associator",
    "commutator",
    "conjugate",
    "decompose",
    "element_from_dict",
    "element_from_json",
    "element_to_dict",
    "element_to_json",
    "format_element",
    "from_coeffs",
    "from_halves",
    "from_terms",
    "halves",
    "inner_product",
    "is_doubly_pure",
    "is_pure",
    "make_basis",
    "multiply",
    "multiply_recursive",
    "norm_sq",
    "one",
    "parse_element",
    "parse_expression",
    "scale",
    "sign_table",
    "tilde",
    "tilde_unit",
    "trace",
    "zero",
]
