"""Exact resultants and discriminants of recurrence-defined polynomial families.

Scalars are returned as ``fractions.Fraction``; polynomials are coefficient
lists, lowest degree first.
"""

from ._core import (
    BothZeroError,
    DegenerateBError,
    DegreeDroppedError,
    DegreeTooLowError,
    Error,
    Family,
    HypothesisViolatedError,
    InvalidParamsError,
    SpecError,
    determinant,
    discriminant,
    hyp2f1_poly,
    mahlburg_ono_disc,
    pochhammer,
    presets,
    product_over_roots,
    resultant,
    v_r_polynomial,
    verify,
)

__all__ = [
    "BothZeroError",
    "DegenerateBError",
    "DegreeDroppedError",
    "DegreeTooLowError",
    "Error",
    "Family",
    "HypothesisViolatedError",
    "InvalidParamsError",
    "SpecError",
    "determinant",
    "discriminant",
    "hyp2f1_poly",
    "mahlburg_ono_disc",
    "pochhammer",
    "presets",
    "product_over_roots",
    "resultant",
    "v_r_polynomial",
    "verify",
]
