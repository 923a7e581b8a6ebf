"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are coordinate vectors in the power basis ``1, z, ..., z**(phi(N)-1)``
reduced modulo the N-th cyclotomic polynomial.  Internally the coordinates are
kept as integers over a single positive common denominator, which keeps
multiplication in plain integer arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import poly as P


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(P.cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int):
    """Rows ``x**k mod Phi_n`` for ``0 <= k <= 2*phi(n) - 2`` as integer tuples."""
    phi = P.cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for k in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic Phi_n
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


@lru_cache(maxsize=None)
def zeta_power_table(n: int):
    """Integer coordinates of ``zeta_n**k`` for ``0 <= k < n``."""
    phi = P.cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


@lru_cache(maxsize=None)
def _zeta_power_index(n: int):
    return {row: k for k, row in enumerate(zeta_power_table(n))}


def _normalize(nums, den):
    if den < 0:
        nums = [-a for a in nums]
        den = -den
    g = den
    for a in nums:
        g = gcd(g, a)
        if g == 1:
            break
    if g > 1:
        nums = [a // g for a in nums]
        den //= g
    return tuple(nums), den


class CyclotomicElement:
    """An element of Q(zeta_N) in the reduced power basis."""

    __slots__ = ("conductor", "_nums", "_den", "_hash")

    def __init__(self, conductor: int, coords=None, *, _raw=None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self._hash = None
        if _raw is not None:
            self._nums, self._den = _raw
            return
        deg = euler_phi(conductor)
        coords = list(coords or [])
        if len(coords) > deg:
            # reduce a longer polynomial modulo Phi_N
            fr = [Fraction(c) for c in coords]
            _, rem = P.divmod_poly(fr, P.cyclotomic_poly(conductor))
            coords = list(rem)
        fr = [Fraction(c) for c in coords] + [Fraction(0)] * (deg - len(coords))
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        self._nums, self._den = _normalize([int(c * den) for c in fr], den)

    # constructors -------------------------------------------------------
    @classmethod
    def _from_ints(cls, conductor, nums, den=1):
        return cls(conductor, _raw=_normalize(list(nums), den))

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> "CyclotomicElement":
        return cls(conductor, _raw=(zeta_power_table(conductor)[k % conductor], 1))

    @classmethod
    def rational(cls, conductor: int, value) -> "CyclotomicElement":
        v = Fraction(value)
        deg = euler_phi(conductor)
        return cls._from_ints(conductor, [v.numerator] + [0] * (deg - 1), v.denominator)

    @classmethod
    def zero(cls, conductor: int):
        return cls.rational(conductor, 0)

    @classmethod
    def one(cls, conductor: int):
        return cls.rational(conductor, 1)

    # views --------------------------------------------------------------
    @property
    def coords(self):
        return tuple(Fraction(a, self._den) for a in self._nums)

    def key(self):
        """Hashable exact representation, unique within a fixed conductor."""
        return (self._nums, self._den)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_one(self) -> bool:
        return self._den == 1 and self._nums[0] == 1 and not any(self._nums[1:])

    def rational_value(self):
        """The value as a Fraction, or None if the element is not rational."""
        if any(self._nums[1:]):
            return None
        return Fraction(self._nums[0], self._den)

    # conductor handling -------------------------------------------------
    def embed(self, conductor: int) -> "CyclotomicElement":
        """Image in Q(zeta_M) for a multiple M of the current conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot embed Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        step = conductor // self.conductor
        table = zeta_power_table(conductor)
        out = [0] * euler_phi(conductor)
        for i, a in enumerate(self._nums):
            if a:
                for j, b in enumerate(table[i * step]):
                    if b:
                        out[j] += a * b
        return CyclotomicElement._from_ints(conductor, out, self._den)

    def _unify(self, other):
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicElement.rational(self.conductor, other)
        if not isinstance(other, CyclotomicElement):
            return None, None
        if other.conductor == self.conductor:
            return self, other
        m = lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        den = lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CyclotomicElement._from_ints(
            a.conductor, [x * fa + y * fb for x, y in zip(a._nums, b._nums)], den
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.conductor, _raw=(tuple(-a for a in self._nums), self._den))

    def __sub__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        n = a.conductor
        deg = len(a._nums)
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a._nums):
            if x:
                for j, y in enumerate(b._nums):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        table = _reduction_table(n)
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                for j, t in enumerate(table[k]):
                    if t:
                        out[j] += c * t
        return CyclotomicElement._from_ints(n, out, a._den * b._den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = CyclotomicElement.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> "CyclotomicElement":
        """Multiplicative inverse via the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.conductor
        a = P.trim(Fraction(x, self._den) for x in self._nums)
        m = tuple(Fraction(c) for c in P.cyclotomic_poly(n))
        # invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m)
        r0, r1 = m, a
        s0, s1 = (), (Fraction(1),)
        while len(r1) > 1:
            q, r = P.divmod_poly(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, P.sub(s0, P.mul(q, s1))
        if not r1:
            raise ArithmeticError("element shares a factor with the cyclotomic polynomial")
        c = r1[0]
        return CyclotomicElement(n, [x / c for x in s1])

    def __truediv__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def conj(self) -> "CyclotomicElement":
        """Complex conjugation, zeta_N -> zeta_N**(N-1)."""
        n = self.conductor
        table = zeta_power_table(n)
        out = [0] * len(self._nums)
        for i, a in enumerate(self._nums):
            if a:
                for j, b in enumerate(table[(-i) % n]):
                    if b:
                        out[j] += a * b
        return CyclotomicElement._from_ints(n, out, self._den)

    def root_of_unity_exponent(self):
        """``k`` with ``self == zeta_N**k`` (N even) or ``zeta_2N**k`` (N odd), else None.

        Returns ``(k, M)`` where ``M = lcm(2, N)`` is the order of the group of
        roots of unity in the field.
        """
        m = lcm(2, self.conductor)
        e = self.embed(m)
        if e._den != 1:
            return None
        k = _zeta_power_index(m).get(e._nums)
        if k is None:
            return None
        return k, m

    def root_of_unity_order(self):
        """Multiplicative order if this is a root of unity, else None."""
        r = self.root_of_unity_exponent()
        if r is None:
            return None
        k, m = r
        return m // gcd(k, m)

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a._nums == b._nums and a._den == b._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self._nums, self._den))
        return self._hash

    def __repr__(self):
        terms = []
        for i, a in enumerate(self._nums):
            if a:
                c = Fraction(a, self._den)
                mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                terms.append(f"{c}{'*' + mono if mono else ''}")
        body = " + ".join(terms) if terms else "0"
        return f"Q(zeta_{self.conductor})[{body}]"


def cyclotomic_arith(a: CyclotomicElement, b: CyclotomicElement | None, op: str) -> CyclotomicElement:
    """Dispatch helper: ``op`` is one of add, mul, inv, conj."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown operation {op!r}")
