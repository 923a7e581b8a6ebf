"""Molien series of the real invariants R[C^2]^G for a finite G < U(2).

The real polynomial ring on C^2 is the complex ring on C^2 x conj(C^2), on
which g acts by blockdiag(g, conj g) with eigenvalues l1, l2, conj l1,
conj l2.  Summing ``1/prod(1 - l x)`` over the group is done on integer
coordinates in Z[zeta_M] (one slot per eigenvalue), so the result is exact.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..exactalg import poly as P
from ..exactalg import (
    LaurentCoefficients,
    PowerSeries,
    RationalFunction,
    laurent_at_one,
    reconstruct_with_denominator,
)
from ..exactalg.cyclotomic import CyclotomicElement, euler_phi, zeta_power_table
from .duval import FiniteU2Group

MOLIEN_MARGIN = 10


@dataclass(frozen=True)
class MolienData:
    series: RationalFunction
    gamma0: Fraction
    gamma2: Fraction
    quadratic_dimension: int
    laurent: LaurentCoefficients
    head: tuple

    def as_dict(self) -> dict:
        def s(v):
            return f"{v.numerator}/{v.denominator}"

        return {
            "numerator": list(map(str, self.series.numerator)),
            "denominator": list(map(str, self.series.denominator)),
            "gamma0": s(self.gamma0),
            "gamma2": s(self.gamma2),
            "quadratic_dimension": self.quadratic_dimension,
            "pole_order": self.laurent.pole_order,
            "head": [int(c) for c in self.head],
        }


def _classes(G: FiniteU2Group):
    """Eigenvalue exponent classes ``(e1, e2)`` modulo M with multiplicities."""
    M = G.exponent_modulus()
    cnt = Counter()
    for r in G.records:
        cnt[(int(r.u1 * M) % M, int(r.u2 * M) % M)] += 1
    return M, cnt


def molien_coefficients(G: FiniteU2Group, D: int) -> list:
    """Exact Molien coefficients through degree D (integers)."""
    M, cnt = _classes(G)
    keys = list(cnt)
    mult = np.array([cnt[k] for k in keys], dtype=np.int64)
    C = len(keys)
    slots = []
    for e1, e2 in keys:
        slots.append((e1, e2, (-e1) % M, (-e2) % M))
    slots = np.array(slots, dtype=np.int64)
    ar = np.arange(M)
    cur = np.zeros((C, D + 1, M), dtype=np.int64)
    cur[:, 0, 0] = 1
    rows = np.arange(C)[:, None]
    for s in range(4):
        # multiply by 1/(1 - zeta^e x): c_k += zeta^e * c_{k-1}
        idx = (ar[None, :] - slots[:, s][:, None]) % M
        for k in range(1, D + 1):
            cur[:, k, :] += cur[rows, k - 1, idx]
    total = np.einsum("c,ckm->km", mult, cur)
    # total[k] lists the multiplicity of each power of zeta_M; reduce to Q(zeta_M)
    T = np.array(zeta_power_table(M), dtype=np.int64)
    coords = total @ T
    if np.any(coords[:, 1:]):
        raise ArithmeticError(f"{G.label}: Molien sum has irrational coefficients")
    vals = coords[:, 0]
    N = G.order
    out = []
    for v in vals:
        v = int(v)
        if v % N:
            raise ArithmeticError(f"{G.label}: Molien coefficient {v}/{N} is not an integer")
        out.append(v // N)
    return out


def molien_denominator(G: FiniteU2Group) -> list:
    """Factors (1 - x) and cyclotomic polynomials whose product clears the denominator."""
    M, cnt = _classes(G)
    need = Counter()
    for e1, e2 in cnt:
        here = Counter()
        for e in (e1, e2):
            d = M // np.gcd(e, M) if e else 1
            here[int(d)] += 2 if d <= 2 else 1
        for d, k in here.items():
            need[d] = max(need[d], k)
    factors = []
    for d in sorted(need):
        f = (1, -1) if d == 1 else P.cyclotomic_poly(d)
        factors += [tuple(f)] * need[d]
    return factors


def molien_series(G: FiniteU2Group, margin: int = MOLIEN_MARGIN) -> RationalFunction:
    factors = molien_denominator(G)
    deg = sum(len(f) - 1 for f in factors)
    D = deg + margin
    coeffs = molien_coefficients(G, D)
    return reconstruct_with_denominator(PowerSeries(coeffs), factors, deg, margin)


def molien_real(G: FiniteU2Group) -> MolienData:
    series = molien_series(G)
    lc = laurent_at_one(series, 3)
    head = tuple(series.taylor(3))
    return MolienData(series, lc.coefficients[0], lc.coefficients[2], int(head[2]), lc, head)


def quadratic_dimension(G: FiniteU2Group) -> int:
    return molien_coefficients(G, 2)[2]


def molien_matrix_oracle(elements, D: int) -> list:
    """Molien coefficients by summing ``1/det(I - x g) det(I - x conj g)`` over matrices.

    Independent of the eigen-data: uses only traces and determinants, with
    power-series inversion in exact cyclotomic arithmetic.
    """
    elements = list(elements)
    N = 1
    for g in elements:
        N = np.lcm(N, g.conductor)
    N = int(N)
    total = [CyclotomicElement.zero(N) for _ in range(D + 1)]
    one = CyclotomicElement.one(N)
    for g in elements:
        g = g.embed(N)
        tr, det = g.trace(), g.det()
        # det(I - x g) = 1 - tr x + det x^2, and the conjugate factor
        p = [one, -tr, det]
        pc = [one, -tr.conj(), det.conj()]
        q = [CyclotomicElement.zero(N)] * 5
        for i in range(3):
            for j in range(3):
                q[i + j] = q[i + j] + p[i] * pc[j]
        # invert q (constant term 1) as a power series
        inv = [one]
        for k in range(1, D + 1):
            acc = CyclotomicElement.zero(N)
            for i in range(1, min(k, 4) + 1):
                acc = acc + q[i] * inv[k - i]
            inv.append(-acc)
        total = [t + c for t, c in zip(total, inv)]
    out = []
    for t in total:
        v = t.rational_value()
        if v is None:
            raise ArithmeticError("matrix Molien sum has an irrational coefficient")
        out.append(v / len(elements))
    return out


def typeIII_closed_form(ell: int) -> RationalFunction:
    """Closed form for the real Molien series of the Type III group with m = 1."""
    a = 2 * ell
    num = [0] * (2 * a + 3)
    num[0] = 1
    num[a] += a - 1
    num[a + 2] -= a - 1
    num[2 * a + 2] -= 1
    den = P.mul(P.power(P.one_minus_x_pow(2), 3), P.power(P.one_minus_x_pow(a), 2))
    return RationalFunction(tuple(num), den)


def typeIIIprime_closed_form(ell: int) -> RationalFunction:
    """Closed form for the Type III' group with m = 1 (ell odd)."""
    num = [0] * (2 * ell + 3)
    num[0] = 1
    num[ell] += ell - 1
    num[ell + 2] -= ell - 1
    num[2 * ell + 2] -= 1
    den = P.mul(P.power(P.one_minus_x_pow(2), 3), P.power(P.one_minus_x_pow(ell), 2))
    return RationalFunction(tuple(num), den)


def typeIIIprime_printed_form(ell: int) -> RationalFunction:
    """Type III' (m = 1) closed form with a typo: numerator exponent l+2 written as 2l+2.

    Kept only so that tests can show it disagrees with the computed series.
    """
    num = [0] * (2 * ell + 3)
    num[0] = 1
    num[ell] += ell - 1
    num[2 * ell + 2] -= ell - 1
    num[2 * ell + 2] -= 1
    den = P.mul(P.power(P.one_minus_x_pow(2), 3), P.power(P.one_minus_x_pow(ell), 2))
    return RationalFunction(tuple(num), den)
