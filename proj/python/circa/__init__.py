"""Exact invertibility of rational circulant matrices.

Rows are sequences of ints, ``fractions.Fraction`` values or strings in the
``a`` / ``a/b`` grammar. Determinants come back as ``Fraction``.
"""

from fractions import Fraction

from . import _circa
from ._circa import (
    InternalInconsistency,
    InvalidInput,
    build_G,
    classify_prime,
    conditions,
    cyclotomic,
    decide,
    divisors,
    factorize,
    is_prime,
    is_singular_exact,
    primitive_elements,
    quarter_prime_pairs,
    ramanujan_sum,
    ramanujan_sum_oracle,
    table1,
    templates_match_generic,
    totient,
    unit_group,
    verify_permutation_similarity,
    zeroone_scan,
)

__all__ = [
    "InternalInconsistency",
    "InvalidInput",
    "build_G",
    "classify_prime",
    "conditions",
    "cyclotomic",
    "decide",
    "det_bareiss",
    "det_resultant",
    "divisors",
    "factorize",
    "is_prime",
    "is_singular_exact",
    "primitive_elements",
    "quarter_prime_pairs",
    "ramanujan_sum",
    "ramanujan_sum_oracle",
    "table1",
    "templates_match_generic",
    "totient",
    "unit_group",
    "verify_permutation_similarity",
    "zeroone_scan",
]


def det_bareiss(row):
    """Exact determinant of circ{row} by fraction-free elimination."""
    return Fraction(_circa.det_bareiss(list(row)))


def det_resultant(row):
    """Exact determinant of circ{row} as a product of cyclotomic resultants."""
    return Fraction(_circa.det_resultant(list(row)))
