"""Finite subgroups of SU(2) with exact matrices and cached eigen-data."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exactalg.cyclotomic import CyclotomicElement, lcm
from .matrices import UnitaryMatrix2, eigendata


class GeneratorError(RuntimeError):
    """Closure of the generators did not terminate within the safety cap."""


KINDS = ("cyclic", "binary_dihedral", "T24", "O48", "I120")


def closure(generators, cap: int) -> list:
    """All products of ``generators``; the identity comes first."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    N = 1
    for g in gens:
        N = lcm(N, g.conductor)
    gens = [g.embed(N) for g in gens]
    ident = UnitaryMatrix2.identity(N)
    seen = {ident.key(): ident}
    out = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = h * g
                k = p.key()
                if k not in seen:
                    seen[k] = p
                    out.append(p)
                    nxt.append(p)
                    if len(out) > cap:
                        raise GeneratorError(f"closure exceeded {cap} elements")
        frontier = nxt
    return out


def _b(N):
    return UnitaryMatrix2(N, 0, 1, -1, 0)


def _s(N, k=1):
    z = CyclotomicElement.zeta(N, k)
    return UnitaryMatrix2.diag(N, z, z.conj())


def su2_generators(kind: str, m: int | None = None):
    """Standard generators and the expected order."""
    if kind == "cyclic":
        if not m or m < 1:
            raise ValueError("cyclic(m) needs m >= 1")
        return [_s(max(m, 1))], m
    if kind == "binary_dihedral":
        if not m or m < 1:
            raise ValueError("binary_dihedral(m) needs m >= 1")
        N = lcm(2 * m, 4)
        return [_s(N, N // (2 * m)), _b(N)], 4 * m
    if kind in ("T24", "O48"):
        N = 8
        half = Fraction(1, 2)
        i = UnitaryMatrix2.from_quaternion(N, 0, 1, 0, 0)
        j = UnitaryMatrix2.from_quaternion(N, 0, 0, 1, 0)
        w = UnitaryMatrix2.from_quaternion(N, -half, half, half, half)
        gens = [i, j, w]
        if kind == "O48":
            # (1 + i)/sqrt(2) = diag(zeta_8, zeta_8^-1)
            gens.append(_s(N))
            return gens, 48
        return gens, 24
    if kind == "I120":
        N = 20
        z5 = CyclotomicElement.zeta(N, 4)
        phi_inv = z5 + z5 ** 4
        phi = phi_inv + 1
        half = Fraction(1, 2)
        s = UnitaryMatrix2.from_quaternion(N, half, half, half, half)
        t = UnitaryMatrix2.from_quaternion(N, phi * half, phi_inv * half, half, 0)
        return [s, t], 120
    raise ValueError(f"unknown SU(2) subgroup kind {kind!r}")


def su2_group(kind: str, m: int | None = None, cap_factor: int = 10) -> list:
    """Exact element list of a finite subgroup of SU(2)."""
    gens, expected = su2_generators(kind, m)
    elems = closure(gens, cap_factor * expected)
    if len(elems) != expected:
        raise GeneratorError(f"{kind}({m}) closed to {len(elems)} elements, expected {expected}")
    return elems


class SU2Subgroup:
    """Indexed SU(2) subgroup with products, negation and eigen-data per element.

    For each element r the eigenvalues are ``exp(+-2 pi i v[r])`` with
    eigenlines ``line_plus[r]`` and ``line_minus[r]`` (None for +-I).  Line
    keys are comparable within one subgroup only.
    """

    def __init__(self, name, order, neg, v, line_plus, line_minus, mul, matrix):
        self.name = name
        self.order = order
        self.neg = neg
        self.v = v
        self.line_plus = line_plus
        self.line_minus = line_minus
        self._mul = mul
        self._matrix = matrix
        self.identity = 0

    def mul(self, i: int, j: int) -> int:
        return self._mul(i, j)

    def matrix(self, i: int) -> UnitaryMatrix2:
        return self._matrix(i)

    def power(self, i: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.mul(out, i)
        return out

    def generated(self, gens) -> list:
        """Indices of the subgroup generated by the given indices."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    p = self.mul(h, g)
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
            frontier = nxt
        return sorted(seen)

    def index_of(self, g: UnitaryMatrix2) -> int:
        for i in range(self.order):
            if self.matrix(i) == g:
                return i
        raise KeyError("matrix is not in this subgroup")


def _cyclic_subgroup(M: int) -> SU2Subgroup:
    # s^k = diag(zeta_M^k, zeta_M^-k): everything is arithmetic in Z/M
    neg = [(k + M // 2) % M if M % 2 == 0 else None for k in range(M)]
    v = [Fraction(k, M) for k in range(M)]
    central = {0, M // 2} if M % 2 == 0 else {0}
    plus = [None if k in central else ("axis", 0) for k in range(M)]
    minus = [None if k in central else ("axis", 1) for k in range(M)]
    return SU2Subgroup(
        f"cyclic({M})", M, neg, v, plus, minus,
        lambda i, j: (i + j) % M,
        lambda i: _s(M, i) if M > 1 else UnitaryMatrix2.identity(1),
    )


def _matrix_subgroup(name: str, elems: list) -> SU2Subgroup:
    order = len(elems)
    index = {g.key(): i for i, g in enumerate(elems)}
    N = elems[0].conductor
    minus_one = UnitaryMatrix2.scalar(N, -1)
    neg = [index.get((minus_one * g).key()) for g in elems]
    v, plus, minus = [], [], []
    for g in elems:
        u1, _u2, l1, l2, _K = eigendata(g, order)
        v.append(u1)
        plus.append(l1)
        minus.append(l2)
    table = {}

    def mul(i, j):
        key = (i, j)
        r = table.get(key)
        if r is None:
            r = index[(elems[i] * elems[j]).key()]
            table[key] = r
        return r

    return SU2Subgroup(name, order, neg, v, plus, minus, mul, lambda i: elems[i])


@lru_cache(maxsize=None)
def su2_subgroup(kind: str, m: int | None = None) -> SU2Subgroup:
    """Cached indexed subgroup; cyclic groups are handled arithmetically."""
    if kind == "cyclic":
        return _cyclic_subgroup(m)
    label = kind if m is None else f"{kind}({m})"
    return _matrix_subgroup(label, su2_group(kind, m))
