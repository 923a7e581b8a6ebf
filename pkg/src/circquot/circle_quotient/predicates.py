"""Necessary conditions a circle quotient must satisfy to be a finite unitary quotient."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd
from functools import reduce

from .hilbert import gamma_closed_form_n3, gamma_extracted, hilb_on_series
from .weights import WeightVector

FLAGS = ("diophantine", "rhm", "codim1_chain", "nondegenerate", "ratio_ok", "quadratic_count_ok")


@dataclass
class PredicateRecord:
    """Each flag is True, False, or None when not applicable at this n."""

    diophantine: bool | None = None
    rhm: bool | None = None
    codim1_chain: bool | None = None
    nondegenerate: bool | None = None
    ratio_ok: bool | None = None
    quadratic_count_ok: bool | None = None
    reasons: dict = field(default_factory=dict)
    gamma0: Fraction | None = None
    ratio: Fraction | None = None
    chain_order: tuple | None = None

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in FLAGS}

    def failed(self) -> list:
        return [k for k in FLAGS if getattr(self, k) is False]

    def all_pass(self) -> bool:
        return not self.failed()

    def as_dict(self) -> dict:
        d = dict(self.flags())
        d["reasons"] = dict(self.reasons)
        d["gamma0"] = None if self.gamma0 is None else f"{self.gamma0.numerator}/{self.gamma0.denominator}"
        d["ratio"] = None if self.ratio is None else f"{self.ratio.numerator}/{self.ratio.denominator}"
        d["chain_order"] = None if self.chain_order is None else list(self.chain_order)
        return d


def is_rational_homology_manifold(A: WeightVector) -> bool:
    """False exactly when there are at least two weights of each sign."""
    return not (A.positive_count >= 2 and A.negative_count >= 2)


def codim1_chain_order(A: WeightVector):
    """An ordering of the positive weights satisfying the forced gcd-chain condition.

    With a_1 the negative weight and the others ordered as a_2..a_n, require
    for every 2 <= i <= n-1 that gcd(a_1..a_i) divides none of a_{i+1}..a_n.
    Returns the weights in a valid order, or None.  Exhaustive over
    permutations, which is fine for the small n seen here.
    """
    a1 = A.weights[0]
    rest = A.weights[1:]
    n = A.n
    for perm in permutations(rest):
        seq = (a1,) + perm
        ok = True
        for i in range(2, n):
            g = reduce(gcd, (abs(a) for a in seq[:i]))
            if any(seq[l] % g == 0 for l in range(i, n)):
                ok = False
                break
        if ok:
            return seq
    return None


def ratio_allowed(r: Fraction) -> bool:
    return r < 3 and r != 1 and r != 2


def predicates(A: WeightVector, gamma0: Fraction | None = None) -> PredicateRecord:
    """Evaluate every single-vector necessary condition exactly.

    ``A`` should be normalized.  Flags that do not apply at this n are None.
    """
    rec = PredicateRecord()
    rec.rhm = is_rational_homology_manifold(A)
    if not rec.rhm:
        rec.reasons["rhm"] = (
            f"{A.positive_count} positive and {A.negative_count} negative weights: "
            "not a rational homology manifold"
        )
    if not A.both_signs:
        rec.reasons["applicability"] = "single-sign weights: the reduced space is a point"
        return rec

    n3 = A.n == 3 and A.zero_count == 0
    if gamma0 is None:
        gamma0 = gamma_closed_form_n3(A).gamma0 if n3 else gamma_extracted(A).gamma0
    rec.gamma0 = gamma0
    inv = 1 / gamma0
    rec.diophantine = inv.denominator == 1
    if not rec.diophantine:
        rec.reasons["diophantine"] = f"1/gamma0 = {inv} is not an integer"

    if A.negative_count == 1 and A.n >= 3:
        order = codim1_chain_order(A)
        rec.codim1_chain = order is not None
        rec.chain_order = order
        if order is None:
            rec.reasons["codim1_chain"] = (
                "no ordering of the positive weights gives a strictly growing chain of "
                "codimension-1 isotropy gcds"
            )

    if n3:
        rec.nondegenerate = A.generic
        if not rec.nondegenerate:
            rec.reasons["nondegenerate"] = f"absolute weights {A.alphas} are not pairwise distinct"
        gd = gamma_closed_form_n3(A)
        rec.ratio = gd.gamma0 / gd.gamma2
        rec.ratio_ok = ratio_allowed(rec.ratio)
        if not rec.ratio_ok:
            rec.reasons["ratio_ok"] = f"gamma0/gamma2 = {rec.ratio} is not below 3 or equals 1 or 2"
        head = tuple(int(c) for c in hilb_on_series(A, 2).coefficients)
        rec.quadratic_count_ok = head == (1, 0, 2)
        if not rec.quadratic_count_ok:
            rec.reasons["quadratic_count_ok"] = f"on-shell series begins {head}, expected (1, 0, 2)"
    return rec
