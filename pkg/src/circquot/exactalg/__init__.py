"""Exact arithmetic tower: polynomials, truncated series, rational functions,
Laurent expansion at x = 1, rational reconstruction and cyclotomic fields."""
from fractions import Fraction

from .cyclotomic import CyclotomicElement, cyclotomic_arith, euler_phi
from .ratfunc import (
    LaurentCoefficients,
    RationalFunction,
    ReconstructionFailed,
    ReconstructionUnverified,
    laurent_at_one,
    reconstruct_rational,
    reconstruct_with_denominator,
    taylor_coefficients,
)
from .series import PowerSeries

Rational = Fraction

__all__ = [
    "CyclotomicElement",
    "LaurentCoefficients",
    "PowerSeries",
    "Rational",
    "RationalFunction",
    "ReconstructionFailed",
    "ReconstructionUnverified",
    "cyclotomic_arith",
    "euler_phi",
    "laurent_at_one",
    "reconstruct_rational",
    "reconstruct_with_denominator",
    "taylor_coefficients",
]
