"""Exact 2x2 unitary matrices over cyclotomic fields."""
from __future__ import annotations

from fractions import Fraction

from ..exactalg.cyclotomic import CyclotomicElement, lcm, zeta_power_table


def _elt(N, v):
    if isinstance(v, CyclotomicElement):
        return v.embed(N)
    return CyclotomicElement.rational(N, v)


class UnitaryMatrix2:
    """``[[a, b], [c, d]]`` with entries in Q(zeta_N) for a common conductor N."""

    __slots__ = ("conductor", "a", "b", "c", "d", "_key", "_order")

    def __init__(self, conductor: int, a, b, c, d):
        self.conductor = conductor
        self.a, self.b, self.c, self.d = (_elt(conductor, v) for v in (a, b, c, d))
        self._key = None
        self._order = None

    @classmethod
    def identity(cls, N: int = 1):
        return cls(N, 1, 0, 0, 1)

    @classmethod
    def diag(cls, N: int, x, y):
        return cls(N, x, 0, 0, y)

    @classmethod
    def scalar(cls, N: int, x):
        return cls(N, x, 0, 0, x)

    @classmethod
    def from_quaternion(cls, N: int, a, b, c, d):
        """``a + b i + c j + d k`` as ``[[a + b i, c + d i], [-c + d i, a - b i]]``."""
        if N % 4:
            raise ValueError("quaternion embedding needs the conductor divisible by 4")
        i = CyclotomicElement.zeta(N, N // 4)
        a, b, c, d = (_elt(N, v) for v in (a, b, c, d))
        return cls(N, a + b * i, c + d * i, -c + d * i, a - b * i)

    def embed(self, N: int) -> "UnitaryMatrix2":
        if N == self.conductor:
            return self
        return UnitaryMatrix2(N, self.a, self.b, self.c, self.d)

    def entries(self):
        return ((self.a, self.b), (self.c, self.d))

    def key(self):
        if self._key is None:
            self._key = (self.conductor, self.a.key(), self.b.key(), self.c.key(), self.d.key())
        return self._key

    def __eq__(self, other):
        if not isinstance(other, UnitaryMatrix2):
            return NotImplemented
        if self.conductor != other.conductor:
            m = lcm(self.conductor, other.conductor)
            return self.embed(m).key()[1:] == other.embed(m).key()[1:]
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other):
        if isinstance(other, UnitaryMatrix2):
            if other.conductor != self.conductor:
                m = lcm(self.conductor, other.conductor)
                return self.embed(m) * other.embed(m)
            return UnitaryMatrix2(
                self.conductor,
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        s = _elt(self.conductor, other) if not isinstance(other, CyclotomicElement) else other
        if s.conductor != self.conductor:
            m = lcm(self.conductor, s.conductor)
            return self.embed(m) * s.embed(m)
        return UnitaryMatrix2(self.conductor, s * self.a, s * self.b, s * self.c, s * self.d)

    __rmul__ = __mul__

    def __neg__(self):
        return UnitaryMatrix2(self.conductor, -self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = UnitaryMatrix2.identity(self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj_transpose(self):
        return UnitaryMatrix2(self.conductor, self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())

    def inverse(self):
        # unitary: the inverse is the conjugate transpose
        return self.conj_transpose()

    def det(self) -> CyclotomicElement:
        return self.a * self.d - self.b * self.c

    def trace(self) -> CyclotomicElement:
        return self.a + self.d

    def is_identity(self) -> bool:
        return self.a.is_one() and self.d.is_one() and self.b.is_zero() and self.c.is_zero()

    def is_scalar(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d

    def is_diagonal(self) -> bool:
        return self.b.is_zero() and self.c.is_zero()

    def is_unitary(self) -> bool:
        return (self.conj_transpose() * self).is_identity()

    def order(self, cap: int = 100000) -> int:
        if self._order is None:
            g = self
            k = 1
            while not g.is_identity():
                g = g * self
                k += 1
                if k > cap:
                    raise ArithmeticError("matrix order exceeds the cap; not of finite order?")
            self._order = k
        return self._order

    def __repr__(self):
        return f"UnitaryMatrix2(N={self.conductor}, [[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def is_pseudoreflection(g: UnitaryMatrix2):
    """``(True, order)`` if ``g`` fixes exactly a line pointwise, else ``(False, None)``.

    For a 2x2 unitary matrix: ``g != I`` and ``det(g) - tr(g) + 1 = 0``.
    """
    if g.is_identity():
        return False, None
    if not (g.det() - g.trace() + 1).is_zero():
        return False, None
    # the non-trivial eigenvalue equals det(g)
    return True, g.det().root_of_unity_order()


def _line_key(x: CyclotomicElement, y: CyclotomicElement):
    """Canonical key of the line spanned by ``(x, y)``."""
    if x.is_zero():
        return ("inf",)
    if y.is_zero():
        return ("y", 0)
    if x.root_of_unity_exponent() is not None:
        inv = x.conj()
    else:
        inv = x.inv()
    return ("y", (y * inv).key())


def eigendata(g: UnitaryMatrix2, exponent_bound: int):
    """Exact eigenvalue exponents and eigenlines of a finite-order unitary matrix.

    Eigenvalues are ``exp(2 pi i u1)`` and ``exp(2 pi i u2)`` with ``u1, u2`` in
    [0, 1).  ``exponent_bound`` must be a multiple of the order of ``g`` (the
    group order will do).  Returns ``(u1, u2, line1, line2, K)`` where the
    line keys live in Q(zeta_K); both are None for scalar matrices.
    """
    K = lcm(lcm(g.conductor, 2), exponent_bound)
    table = zeta_power_table(K)
    gk = g.embed(K)
    det = gk.det()
    tr = gk.trace()
    if det._den != 1:
        raise ArithmeticError("determinant is not a root of unity")
    dexp = None
    for e, row in enumerate(table):
        if row == det._nums:
            dexp = e
            break
    if dexp is None:
        raise ArithmeticError("determinant is not a K-th root of unity")
    if tr._den != 1:
        raise ArithmeticError("trace is not a sum of two K-th roots of unity")
    target = tr._nums
    found = None
    for a in range(K):
        b = (dexp - a) % K
        ra, rb = table[a], table[b]
        if all(x + y == t for x, y, t in zip(ra, rb, target)):
            found = (a, b)
            break
    if found is None:
        raise ArithmeticError("eigenvalues are not K-th roots of unity")
    a, b = found
    u1, u2 = Fraction(a, K), Fraction(b, K)
    if gk.is_scalar():
        return u1, u2, None, None, K
    lines = []
    for e in (a, b):
        lam = CyclotomicElement.zeta(K, e)
        p, q = gk.a - lam, gk.b
        if p.is_zero() and q.is_zero():
            # first row vanishes; use the second row (c, d - lam)
            lines.append(_line_key(lam - gk.d, gk.c))
        else:
            lines.append(_line_key(q, -p))
    return u1, u2, lines[0], lines[1], K
