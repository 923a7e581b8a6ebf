"""Hilbert series of circle quotients by monomial counting and exact reconstruction."""
from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

import numpy as np

from ..exactalg import poly as P
from ..exactalg import (
    LaurentCoefficients,
    PowerSeries,
    RationalFunction,
    ReconstructionUnverified,
    laurent_at_one,
    reconstruct_with_denominator,
)
from .weights import WeightVector

# reconstruction checks this many coefficients beyond the numerator bound
DEFAULT_MARGIN = 12
# escalation cap on the truncation degree
MAX_DEGREE = 6000


def _count_table(alphas, D: int) -> np.ndarray:
    """Counts of degree-d monomials in z_i, zbar_i with total charge 0, d <= D.

    Dynamic programming over (degree, charge).  A partial charge outside
    ``+-D*max(alpha)/2`` can never return to zero within degree D, so those
    states are dropped.
    """
    alphas = list(alphas)
    nvars = 2 * len(alphas)
    if not alphas:
        out = np.zeros(D + 1, dtype=object)
        out[0] = 1
        return out
    amax = max(alphas)
    bound = (D * amax) // 2
    W = 2 * bound + 1
    big = comb(D + nvars - 1, nvars - 1) > 2**62
    dtype = object if big else np.int64
    arr = np.zeros((D + 1, W), dtype=dtype)
    arr[0, bound] = 1
    charges = []
    for a in alphas:
        charges += [a, -a]
    for c in charges:
        if c == 0:
            for d in range(1, D + 1):
                arr[d] += arr[d - 1]
            continue
        if abs(c) >= W:
            continue
        for d in range(1, D + 1):
            if c > 0:
                arr[d, c:] += arr[d - 1, : W - c]
            else:
                arr[d, : W + c] += arr[d - 1, -c:]
    return arr[:, bound]


def count_invariant_monomials(A: WeightVector, degree: int) -> int:
    """Number of monomials z^m zbar^k of total degree ``degree`` with sum a_i(m_i - k_i) = 0."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return int(_count_table(A.alphas, degree)[degree])


def hilb_off_series(A: WeightVector, D: int) -> PowerSeries:
    """Hilbert series of the invariant ring R[C^n]^S^1 through degree D."""
    return PowerSeries([int(c) for c in _count_table(A.alphas, D)])


def hilb_on_series(A: WeightVector, D: int) -> PowerSeries:
    """On-shell series ``(1 - x^2) * off-shell`` through degree D.

    For a single-sign vector the zero level is the origin and the series is 1.
    """
    if not A.both_signs:
        warnings.warn(f"weights {A} have a single sign: the reduced space is a point", stacklevel=2)
        return PowerSeries([1], D)
    off = [int(c) for c in _count_table(A.alphas, D)]
    return PowerSeries([off[k] - (off[k - 2] if k >= 2 else 0) for k in range(D + 1)])


def ray_denominator(A: WeightVector) -> list:
    """Factors ``1 - x^k`` whose product clears the off-shell denominator.

    One factor per extreme ray of the cone of invariant exponents: each pairs a
    variable of positive charge alpha_i with one of negative charge alpha_j,
    giving degree (alpha_i + alpha_j)/gcd(alpha_i, alpha_j).  The Hilbert series
    of a normal monoid ring is a sum over simplicial cones of a triangulation,
    so the product over all rays is a common denominator.
    """
    nonzero = [a for a in A.alphas if a]
    degrees = []
    for ai in nonzero:
        for aj in nonzero:
            degrees.append((ai + aj) // gcd(ai, aj))
    zeros = len(A.alphas) - len(nonzero)
    # a zero weight contributes the free variables z_i and zbar_i
    degrees += [1] * (2 * zeros)
    return [P.one_minus_x_pow(k) for k in sorted(degrees)]


def _factor_degree(factors) -> int:
    return sum(len(f) - 1 for f in factors)


def hilb_off_rational(A: WeightVector, margin: int = DEFAULT_MARGIN, max_degree: int = MAX_DEGREE):
    """The off-shell Hilbert series as an exact rational function."""
    factors = ray_denominator(A)
    num_bound = _factor_degree(factors)
    D = num_bound + margin
    while True:
        s = hilb_off_series(A, D)
        try:
            return reconstruct_with_denominator(s, factors, num_bound, D - num_bound)
        except ReconstructionUnverified:
            if 2 * D > max_degree:
                raise
            # cannot happen for a correct ray product; kept as a guard
            num_bound, D = 2 * num_bound, 2 * D


def hilb_on_rational(A: WeightVector, margin: int = DEFAULT_MARGIN) -> RationalFunction:
    """The on-shell Hilbert series as an exact rational function.

    Requires both signs among the weights; the pole order at x = 1 is checked
    against 2n - 2.
    """
    if not A.both_signs:
        raise ValueError(f"weights {A} have a single sign; the reduced space is a point")
    off = hilb_off_rational(A, margin)
    on = off * RationalFunction((1, 0, -1))
    d = laurent_at_one(on, 0).pole_order
    if A.zero_count == 0 and d != 2 * A.n - 2:
        raise ArithmeticError(f"pole order {d} at x = 1, expected {2 * A.n - 2}")
    return on


@dataclass(frozen=True)
class GammaData:
    gamma0: Fraction
    gamma1: Fraction | None
    gamma2: Fraction | None
    gamma3: Fraction | None
    source: str

    def as_dict(self) -> dict:
        def s(v):
            return None if v is None else f"{v.numerator}/{v.denominator}"

        return {
            "gamma0": s(self.gamma0),
            "gamma1": s(self.gamma1),
            "gamma2": s(self.gamma2),
            "gamma3": s(self.gamma3),
            "source": self.source,
        }


def gamma_closed_form_n3(A: WeightVector) -> GammaData:
    """Leading Laurent coefficients for n = 3 from the symmetric-function formulas."""
    if A.n != 3:
        raise ValueError("closed forms are available for n = 3 only")
    if A.zero_count:
        raise ValueError("closed forms need nonzero weights")
    if A.gcd != 1:
        raise ValueError("closed forms need gcd(A) = 1")
    a1, a2, a3 = A.alphas
    e1, e2, e3 = A.e1, A.e2, A.e3
    g12, g13, g23 = gcd(a1, a2), gcd(a1, a3), gcd(a2, a3)
    denom = e1 * e2 - e3
    gamma0 = Fraction(e2, denom)
    bracket = -2 * e2 + e2 * (g12**2 + g13**2 + g23**2) + g12**2 * a3**2 + g13**2 * a2**2 + g23**2 * a1**2
    gamma2 = Fraction(bracket, 12 * denom)
    return GammaData(gamma0, Fraction(0), gamma2, gamma2, "closed_form_n3")


def gamma_extracted(A: WeightVector, f: RationalFunction | None = None) -> GammaData:
    """Laurent coefficients gamma_0..gamma_3 of the reconstructed on-shell series."""
    if f is None:
        f = hilb_on_rational(A)
    lc = laurent_at_one(f, 3)
    c = lc.coefficients
    return GammaData(c[0], c[1], c[2], c[3], "laurent_extraction")


def laurent_of(A: WeightVector, k_max: int = 3) -> LaurentCoefficients:
    return laurent_at_one(hilb_on_rational(A), k_max)


def degree_multiset(A: WeightVector) -> Counter:
    """Degrees of the ray factors, with multiplicity (diagnostics)."""
    return Counter(len(f) - 1 for f in ray_denominator(A))
