"""Finite subgroups of U(2) as fiber products (L/L_K; R/R_K) of U(1) x SU(2).

An element is stored as a canonical pair ``(j, r)`` meaning the matrix
``zeta_|L|^j * R[r]``; since ``(l, r)`` and ``(-l, -r)`` give the same
matrix, the pair with ``j < |L|/2`` is kept.  Eigenvalue exponents and
eigenlines are inherited from the SU(2) factor, so no matrix arithmetic is
needed to classify elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..exactalg.cyclotomic import CyclotomicElement, lcm
from .matrices import UnitaryMatrix2, eigendata
from .su2 import GeneratorError, closure, su2_subgroup, _b, _s

TYPE_TAGS = ("I", "II", "III", "III'", "IV", "V", "VI", "VII", "VIII", "IX")


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class DuValSpec:
    type_tag: str
    m: int
    ell: int | None = None
    n: int | None = None
    f: int | None = None
    g: int | None = None
    d: int | None = None

    def __post_init__(self):
        tag = self.type_tag.replace("′", "'")
        if tag != self.type_tag:
            object.__setattr__(self, "type_tag", tag)
        self.validate()

    def validate(self):
        t = self.type_tag
        if t not in TYPE_TAGS:
            raise InvalidSpec(f"unknown type {t!r}")
        if self.m is None or self.m < 1:
            raise InvalidSpec("m must be a positive integer")
        if t == "I":
            if None in (self.n, self.f, self.g, self.d):
                raise InvalidSpec("Type I needs m, n, f, g, d")
            m, n, f, g, d = self.m, self.n, self.f, self.g, self.d
            if min(n, f, g) < 1:
                raise InvalidSpec("n, f, g must be positive")
            if (2 * m) % f or (2 * n) % g or (2 * m) // f != (2 * n) // g:
                raise InvalidSpec("need 2m/f = 2n/g as integers")
            if (f - g) % 2:
                raise InvalidSpec("need f = g mod 2")
            q = (2 * m) // f
            if q > 1 and gcd(d, q) != 1:
                raise InvalidSpec(f"d = {d} is not a unit modulo {q}")
        elif t in ("II", "III", "III'", "IV"):
            if self.ell is None or self.ell < 1:
                raise InvalidSpec(f"Type {t} needs ell >= 1")
            if t == "III'" and (self.m % 2 == 0 or self.ell % 2 == 0):
                raise InvalidSpec("Type III' needs m and ell odd")

    @property
    def q(self) -> int:
        """Order of the cyclic quotient L/L_K."""
        t = self.type_tag
        if t == "I":
            return (2 * self.m) // self.f
        return {"III": 2, "III'": 4, "IV": 2, "VI": 3, "VIII": 2}.get(t, 1)

    @property
    def L_order(self) -> int:
        t = self.type_tag
        if t in ("III", "III'", "IV", "VIII"):
            return 4 * self.m
        if t == "VI":
            return 6 * self.m
        return 2 * self.m

    @property
    def R_order(self) -> int:
        t = self.type_tag
        if t == "I":
            return 2 * self.n
        if t in ("II", "III", "III'"):
            return 4 * self.ell
        if t == "IV":
            return 8 * self.ell
        return {"V": 24, "VI": 24, "VII": 48, "VIII": 48, "IX": 120}[t]

    @property
    def predicted_order(self) -> int:
        LK = self.L_order // self.q
        return self.R_order * LK // 2

    def label(self) -> str:
        t = self.type_tag
        if t == "I":
            return f"I(m={self.m}, n={self.n}, f={self.f}, g={self.g}, d={self.d})"
        if self.ell is not None:
            return f"{t}(m={self.m}, l={self.ell})"
        return f"{t}(m={self.m})"

    def as_dict(self) -> dict:
        d = {"type": self.type_tag, "m": self.m}
        for k in ("ell", "n", "f", "g", "d"):
            v = getattr(self, k)
            if v is not None:
                d[k] = v
        d["order"] = self.predicted_order
        d["label"] = self.label()
        return d


@dataclass(frozen=True)
class ElementRecord:
    """Eigen-data of one group element: eigenvalue exponents in [0, 1) and lines."""

    u1: Fraction
    u2: Fraction
    line1: object
    line2: object

    @property
    def is_identity(self) -> bool:
        return self.u1 == 0 and self.u2 == 0

    def pseudoreflection(self):
        """``(fixed_line, order)`` if this is a pseudoreflection, else None."""
        if (self.u1 == 0) == (self.u2 == 0):
            return None
        if self.u1 == 0:
            return self.line1, self.u2.denominator
        return self.line2, self.u1.denominator

    def nontrivial_exponent(self) -> Fraction:
        return self.u2 if self.u1 == 0 else self.u1


@dataclass(frozen=True)
class PrimitivePseudoreflection:
    index: int
    order: int
    line: object


class FiniteU2Group:
    """A finite subgroup of U(2) given by element records and lazy matrices."""

    def __init__(self, label, records, matrix_fn, spec: DuValSpec | None = None):
        self.label = label
        self.spec = spec
        self.records = list(records)
        self._matrix_fn = matrix_fn
        self._elements = None
        self._prim = None

    @property
    def order(self) -> int:
        return len(self.records)

    def matrix(self, i: int) -> UnitaryMatrix2:
        return self._matrix_fn(i)

    @property
    def elements(self) -> list:
        if self._elements is None:
            self._elements = [self._matrix_fn(i) for i in range(self.order)]
        return self._elements

    @property
    def pseudoreflections(self) -> list:
        """``(index, order)`` for every pseudoreflection."""
        out = []
        for i, rec in enumerate(self.records):
            pr = rec.pseudoreflection()
            if pr is not None:
                out.append((i, pr[1]))
        return out

    @property
    def primitive_set(self) -> list:
        if self._prim is None:
            self._prim = primitive_pseudoreflection_set(self)
        return self._prim

    def exponent_modulus(self) -> int:
        M = 1
        for r in self.records:
            M = lcm(M, lcm(r.u1.denominator, r.u2.denominator))
        return M

    def __repr__(self):
        return f"FiniteU2Group({self.label}, order={self.order})"


def primitive_pseudoreflection_set(G: FiniteU2Group) -> list:
    """One generator per fixed line; checks the covering and disjointness conditions.

    Pseudoreflections fixing the same line, together with the identity, form a
    cyclic group of order c; its members have nontrivial exponents k/c.
    """
    classes: dict = {}
    for i, rec in enumerate(G.records):
        pr = rec.pseudoreflection()
        if pr is None:
            continue
        classes.setdefault(pr[0], []).append(i)
    out = []
    for line, idx in classes.items():
        exps = {G.records[i].nontrivial_exponent() for i in idx}
        if len(exps) != len(idx):
            raise ArithmeticError(f"{G.label}: repeated pseudoreflection in a fixed-line class")
        c = len(idx) + 1
        if exps != {Fraction(k, c) for k in range(1, c)}:
            raise ArithmeticError(f"{G.label}: pseudoreflections fixing a line do not form a cyclic group")
        gen = next(i for i in idx if G.records[i].nontrivial_exponent() == Fraction(1, c))
        out.append(PrimitivePseudoreflection(gen, c, line))
    out.sort(key=lambda p: (p.order, p.index))
    return out


def gamma_finite_closed_form(G: FiniteU2Group):
    """``(1/|G|, sum(c_i^2 - 1) / (12 |G|))`` over the primitive set."""
    N = G.order
    s = sum(p.order ** 2 - 1 for p in G.primitive_set)
    return Fraction(1, N), Fraction(s, 12 * N)


def _type_data(spec: DuValSpec):
    """``(R, R_K indices, rho index)`` for the SU(2) side of a spec."""
    t = spec.type_tag
    if t == "I":
        R = su2_subgroup("cyclic", 2 * spec.n)
        q = spec.q
        return R, R.generated([q % R.order]), (spec.d % R.order)
    if t in ("II", "III", "III'"):
        ell = spec.ell
        R = su2_subgroup("binary_dihedral", ell)
        if t == "II":
            return R, list(range(R.order)), R.identity
        N = R.matrix(0).conductor
        s = R.index_of(_s(N, N // (2 * ell)))
        b = R.index_of(_b(N))
        if t == "III":
            return R, R.generated([s]), b
        return R, R.generated([R.mul(s, s)]), b
    if t == "IV":
        ell = spec.ell
        R = su2_subgroup("binary_dihedral", 2 * ell)
        N = R.matrix(0).conductor
        s = R.index_of(_s(N, N // (4 * ell)))
        b = R.index_of(_b(N))
        return R, R.generated([R.mul(s, s), b]), s
    if t in ("V", "VI"):
        R = su2_subgroup("T24")
        if t == "V":
            return R, list(range(R.order)), R.identity
        i = R.index_of(UnitaryMatrix2.from_quaternion(8, 0, 1, 0, 0))
        j = R.index_of(UnitaryMatrix2.from_quaternion(8, 0, 0, 1, 0))
        h = Fraction(1, 2)
        w = R.index_of(UnitaryMatrix2.from_quaternion(8, -h, h, h, h))
        return R, R.generated([i, j]), w
    if t in ("VII", "VIII"):
        R = su2_subgroup("O48")
        if t == "VII":
            return R, list(range(R.order)), R.identity
        T = su2_subgroup("T24")
        tet = sorted(R.index_of(T.matrix(k)) for k in range(T.order))
        return R, tet, R.index_of(_s(8))
    R = su2_subgroup("I120")
    return R, list(range(R.order)), R.identity


def duval_group(spec: DuValSpec) -> FiniteU2Group:
    """Enumerate ``{(l, r) : phi(l L_K) = r R_K}`` modulo ``(l, r) ~ (-l, -r)``."""
    R, RK, rho = _type_data(spec)
    Lo, q = spec.L_order, spec.q
    if len(RK) * q != R.order:
        raise InvalidSpec(f"{spec.label()}: |R/R_K| = {R.order // len(RK)} but |L/L_K| = {q}")
    rho_pows = [R.power(rho, t) for t in range(q)]
    cosets = [sorted({R.mul(rp, k) for k in RK}) for rp in rho_pows]
    half = Lo // 2
    pairs = set()
    for j in range(Lo):
        for r in cosets[j % q]:
            if j < half:
                pairs.add((j, r))
            else:
                nr = R.neg[r]
                if nr is None or nr not in cosets[(j - half) % q]:
                    raise InvalidSpec(f"{spec.label()}: (-1, -I) is not in the fiber product")
                pairs.add((j - half, nr))
    pairs = sorted(pairs)
    if len(pairs) != spec.predicted_order:
        raise ArithmeticError(
            f"{spec.label()}: enumerated {len(pairs)} elements, predicted {spec.predicted_order}"
        )
    records = []
    for j, r in pairs:
        base = Fraction(j, Lo)
        v = R.v[r]
        records.append(ElementRecord((base + v) % 1, (base - v) % 1, R.line_plus[r], R.line_minus[r]))

    def matrix(i, _pairs=pairs):
        j, r = _pairs[i]
        g = R.matrix(r)
        N = lcm(g.conductor, Lo)
        return g.embed(N) * CyclotomicElement.zeta(N, (N // Lo) * j)

    return FiniteU2Group(spec.label(), records, matrix, spec)


def group_from_generators(generators, label: str = "generated", cap: int = 10000) -> FiniteU2Group:
    """Close a set of unitary matrices and compute exact eigen-data per element."""
    elems = closure(generators, cap)
    order = len(elems)
    records = []
    for g in elems:
        u1, u2, l1, l2, _K = eigendata(g, order)
        records.append(ElementRecord(u1, u2, l1, l2))
    G = FiniteU2Group(label, records, lambda i: elems[i])
    G._elements = elems
    return G


def scalar_cyclic_group(m: int) -> FiniteU2Group:
    """Omega_m acting by scalars."""
    N = max(m, 1)
    return group_from_generators([UnitaryMatrix2.scalar(N, CyclotomicElement.zeta(N, 1))], f"Omega_{m}")


def su2_cyclic_group(m: int) -> FiniteU2Group:
    """Omega_m^S = <diag(zeta_m, zeta_m^-1)>."""
    return group_from_generators([_s(max(m, 1))], f"Omega^S_{m}")


def binary_dihedral_group(m: int) -> FiniteU2Group:
    N = lcm(2 * m, 4)
    return group_from_generators([_s(N, N // (2 * m)), _b(N)], f"D_{m}")


def cyclic_product_group(m: int, r: int) -> FiniteU2Group:
    """``<Omega_m^S, Omega_r>``: the SU(2) cyclic group times scalars."""
    N = lcm(m, r)
    gens = [_s(N, N // m), UnitaryMatrix2.scalar(N, CyclotomicElement.zeta(N, N // r))]
    return group_from_generators(gens, f"<Omega^S_{m}, Omega_{r}>")


def _divisors(N: int):
    return [k for k in range(1, N + 1) if N % k == 0]


def enumerate_groups_of_order(N: int, caps: dict | None = None) -> list:
    """All Du Val parameter tuples of predicted order N within the caps.

    ``caps`` may bound ``m`` and ``ell`` (keys ``max_m``, ``max_ell``).  Type I
    specs producing the same element set are reported once.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    caps = caps or {}
    max_m = caps.get("max_m")
    max_ell = caps.get("max_ell")

    def ok_m(m):
        return max_m is None or m <= max_m

    def ok_l(l):
        return max_ell is None or l <= max_ell

    out = []
    seen_sets = set()
    for q in _divisors(2 * N):
        fg = 2 * N // q
        for f in _divisors(fg):
            g = fg // f
            if (f - g) % 2 or (q * f) % 2 or (q * g) % 2:
                continue
            m, n = q * f // 2, q * g // 2
            if not ok_m(m):
                continue
            units = [0] if q == 1 else [d for d in range(1, q) if gcd(d, q) == 1]
            for d in units:
                spec = DuValSpec("I", m, n=n, f=f, g=g, d=d)
                G = duval_group(spec)
                key = frozenset((r.u1, r.u2) for r in G.records)
                if key in seen_sets:
                    continue
                seen_sets.add(key)
                out.append(spec)
    for tag, per in (("II", 4), ("III", 4), ("IV", 8)):
        if N % per:
            continue
        for m in _divisors(N // per):
            ell = N // per // m
            if ok_m(m) and ok_l(ell):
                out.append(DuValSpec(tag, m, ell))
    if N % 2 == 0:
        for m in _divisors(N // 2):
            ell = N // 2 // m
            if m % 2 and ell % 2 and ok_m(m) and ok_l(ell):
                out.append(DuValSpec("III'", m, ell))
    for tag, per in (("V", 24), ("VI", 24), ("VII", 48), ("VIII", 48), ("IX", 120)):
        if N % per == 0 and ok_m(N // per):
            out.append(DuValSpec(tag, N // per))
    return out
