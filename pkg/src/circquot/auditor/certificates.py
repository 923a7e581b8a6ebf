"""Per-candidate exclusion checks and re-checkable certificates.

Each obstruction is a function of (weight data, group data) that returns a
witness dict when it excludes the candidate and None otherwise.  A
certificate stores the candidate spec, the obstruction name and the witness;
``verify_certificate`` recomputes everything from scratch and compares.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..circle_quotient import WeightVector, codim1_nodes, gamma_closed_form_n3, hilb_on_rational, hilb_on_series
from ..exactalg import RationalFunction
from ..u2_catalog import (
    DuValSpec,
    duval_group,
    gamma_finite_closed_form,
    molien_coefficients,
    molien_series,
)

OBSTRUCTIONS = (
    "no_pseudoreflection",
    "quadratic_dim_mismatch",
    "ratio_violation",
    "typeI_stratum_integrality",
    "hilbert_series_mismatch",
)


def _jsonable(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


class WeightData:
    """Everything the obstructions need from an n = 3 weight vector (cached)."""

    def __init__(self, A: WeightVector):
        if A.n != 3:
            raise ValueError("candidate exclusion works on n = 3 vectors")
        self.A = A
        gd = gamma_closed_form_n3(A)
        self.gamma0 = gd.gamma0
        self.gamma2 = gd.gamma2
        self.ratio = gd.gamma0 / gd.gamma2
        self.quadratic_count = int(hilb_on_series(A, 2).coefficients[2])
        self.nodes = codim1_nodes(A)
        self._series = None

    @property
    def series(self) -> RationalFunction:
        if self._series is None:
            self._series = hilb_on_rational(self.A)
        return self._series


class GroupData:
    """Cached data for one candidate group."""

    def __init__(self, spec: DuValSpec):
        self.spec = spec
        self.G = duval_group(spec)
        self.order = self.G.order
        self.pseudoreflections = self.G.pseudoreflections
        self.primitive_orders = sorted(p.order for p in self.G.primitive_set)
        self.gamma0, self.gamma2 = gamma_finite_closed_form(self.G)
        self._quad = None
        self._series = None

    @property
    def quadratic_dimension(self) -> int:
        if self._quad is None:
            self._quad = molien_coefficients(self.G, 2)[2]
        return self._quad

    @property
    def series(self) -> RationalFunction:
        if self._series is None:
            self._series = molien_series(self.G)
        return self._series


def check_no_pseudoreflection(w: WeightData, g: GroupData):
    if g.pseudoreflections:
        return None
    return {"pseudoreflections": 0, "gamma2_group": g.gamma2, "gamma2_weights": w.gamma2}


def check_quadratic_dim(w: WeightData, g: GroupData):
    if g.quadratic_dimension == w.quadratic_count:
        return None
    return {"group_quadratic_dimension": g.quadratic_dimension, "weights_quadratic_count": w.quadratic_count}


def check_ratio(w: WeightData, g: GroupData):
    if g.gamma2 == 0:
        return None
    r = g.gamma0 / g.gamma2
    if r in (1, 2) or r >= 3 or r != w.ratio:
        return {"ratio_group": r, "ratio_weights": w.ratio}
    return None


def stratum_orders(A: WeightVector):
    """Codim-1 nodes of (-a1, a2, a3) with the isotropy orders a matching group needs.

    For the node {1, j} (other index k) the stratum closure is C/Z_N with
    N = (a1 + aj)/gcd(a1, aj), so a primitive pseudoreflection of order
    |G|/N = (a1 + ak)(aj + ak) gcd(a1, aj) / e2 is required.
    """
    a = A.alphas
    e2 = A.e2
    out = []
    for node in codim1_nodes(A):
        j = max(node.support) - 1
        k = 3 - j
        g1j = gcd(a[0], a[j])
        val = Fraction((a[0] + a[k]) * (a[j] + a[k]) * g1j, e2)
        out.append({"support": sorted(node.support), "N": node.cyclic_order, "order": val})
    return out


def kappa_witness(A: WeightVector) -> dict | None:
    """The divisor argument: kappa must divide gcd23 yet exceeds it."""
    a1, a2, a3 = A.alphas
    g12, g13, g23 = gcd(a1, a2), gcd(a1, a3), gcd(a2, a3)
    if g12 > 1 and g13 > 1:
        p1, p2, p3 = a1 // (g12 * g13), a2 // (g12 * g23), a3 // (g13 * g23)
        kappa = p1 * p2 * g12 + p1 * p3 * g13 + p2 * p3 * g23
        form = "two"
    elif g12 > 1 or g13 > 1:
        if g12 > 1:
            # relabel so that the nontrivial pair is {1, 3}
            a2, a3 = a3, a2
            g12, g13 = g13, g12
        p1, p2, p3 = a1 // g13, a2 // g23, a3 // (g13 * g23)
        kappa = p1 * p2 + p1 * p3 * g13 + p2 * p3 * g23
        form = "one"
    else:
        return None
    return {
        "form": form,
        "alpha_prime": [p1, p2, p3],
        "kappa": kappa,
        "gcd23": g23,
        "kappa_exceeds_gcd23": kappa > g23,
    }


def check_typeI_strata(w: WeightData, g: GroupData):
    if g.spec.type_tag != "I":
        return None
    A = w.A
    need = stratum_orders(A)
    for item in need:
        # the closed form must agree with |G|/N
        if item["order"] != Fraction(g.order, item["N"]):
            raise ArithmeticError(f"{A}: stratum order formula disagrees with |G|/N")
    expected = [item["order"] for item in need]
    reasons = []
    if len(need) != len(g.primitive_orders):
        reasons.append("stratum_count")
    if any(v.denominator != 1 for v in expected):
        reasons.append("non_integral_order")
    elif sorted(int(v) for v in expected) != g.primitive_orders:
        reasons.append("order_multiset")
    if not reasons:
        return None
    named = {}
    for item in need:
        named["r" if item["support"] == [1, 2] else "s"] = item["order"]
    return {
        "reasons": reasons,
        "strata": [{"support": i["support"], "N": i["N"], "required_order": i["order"]} for i in need],
        "primitive_orders": list(g.primitive_orders),
        **named,
        "kappa": kappa_witness(A),
    }


def first_difference(f: RationalFunction, g: RationalFunction):
    """Lowest degree where the Taylor expansions differ, with both values."""
    d = f - g
    if not d.numerator:
        return None
    k = next(i for i, c in enumerate(d.numerator) if c != 0)
    cf = f.taylor(k).coefficients[k]
    cg = g.taylor(k).coefficients[k]
    return k, cf, cg


def check_series(w: WeightData, g: GroupData):
    diff = first_difference(w.series, g.series)
    if diff is None:
        return None
    k, cw, cg = diff
    return {"degree": k, "weights_coefficient": cw, "group_coefficient": cg}


CHECKS = {
    "no_pseudoreflection": check_no_pseudoreflection,
    "quadratic_dim_mismatch": check_quadratic_dim,
    "ratio_violation": check_ratio,
    "typeI_stratum_integrality": check_typeI_strata,
    "hilbert_series_mismatch": check_series,
}


@dataclass(frozen=True)
class ExclusionCertificate:
    candidate: DuValSpec
    obstruction: str | None  # None: nothing fired (counterexample candidate)
    witness: dict
    group_order: int

    @property
    def excluded(self) -> bool:
        return self.obstruction is not None

    def as_dict(self) -> dict:
        return {
            "candidate": self.candidate.as_dict(),
            "obstruction": self.obstruction,
            "witness": _jsonable(self.witness),
        }


def exclude_candidate(w: WeightData, spec: DuValSpec, group: GroupData | None = None) -> ExclusionCertificate:
    """Run the obstructions in order and certify the first that fires."""
    g = group or GroupData(spec)
    for name in OBSTRUCTIONS:
        wit = CHECKS[name](w, g)
        if wit is not None:
            return ExclusionCertificate(spec, name, wit, g.order)
    dump = {
        "group_series": str(g.series),
        "weights_series": str(w.series),
        "primitive_orders": g.primitive_orders,
    }
    return ExclusionCertificate(spec, None, dump, g.order)


def verify_certificate(cert: ExclusionCertificate, A: WeightVector) -> bool:
    """Recompute the stated obstruction from the spec and the weights alone."""
    if cert.obstruction is None:
        return False
    w = WeightData(A)
    if Fraction(1, cert.group_order) != w.gamma0:
        return False
    g = GroupData(cert.candidate)
    if g.order != cert.group_order:
        return False
    wit = CHECKS[cert.obstruction](w, g)
    return wit is not None and _jsonable(wit) == _jsonable(cert.witness)


def obstruction_summary(certs) -> dict:
    c = Counter(cert.obstruction for cert in certs)
    return {k: c[k] for k in OBSTRUCTIONS if c[k]}
