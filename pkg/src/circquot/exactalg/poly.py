"""Dense univariate polynomials as coefficient tuples, lowest degree first.

Integer polynomials are plain ``tuple[int, ...]``; rational ones hold
``Fraction`` entries.  The zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p) -> int:
    """Degree of a trimmed polynomial; -1 for zero."""
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def scale(p, c):
    if c == 0:
        return ()
    return tuple(c * a for a in p)


def mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def mul_trunc(p, q, n):
    """Product of ``p`` and ``q`` modulo ``x**n``."""
    out = [0] * n
    for i, a in enumerate(p[:n]):
        if a == 0:
            continue
        for j, b in enumerate(q[: n - i]):
            out[i + j] += a * b
    return tuple(out)


def power(p, k):
    out = (1,)
    for _ in range(k):
        out = mul(out, p)
    return out


def evaluate(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def divmod_poly(p, q):
    """Euclidean division over Q.  Returns ``(quotient, remainder)``."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(a) for a in p]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    if len(r) - 1 < dq:
        return (), trim(r)
    quot = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] / lead
        if c:
            quot[k - dq] = c
            for j in range(dq + 1):
                r[k - dq + j] -= c * q[j]
    return trim(quot), trim(r[:dq])


def exact_div(p, q):
    """Divide integer polynomials known to divide exactly; returns an integer tuple."""
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("polynomial division is not exact")
    if any(c.denominator != 1 for c in quot):
        raise ArithmeticError("quotient has non-integer coefficients")
    return tuple(int(c) for c in quot)


def content(p) -> int:
    g = 0
    for a in p:
        g = gcd(g, a)
    return g


def primitive(p):
    """Split an integer polynomial as ``content * primitive_part``."""
    c = content(p)
    if c == 0:
        return 0, ()
    return c, tuple(a // c for a in p)


def clear_denominators(p):
    """Return ``(d, q)`` with ``q = d * p`` having integer coefficients and ``d > 0``."""
    d = 1
    for a in p:
        d = d * Fraction(a).denominator // gcd(d, Fraction(a).denominator)
    return d, tuple(int(Fraction(a) * d) for a in p)


def gcd_cofactors(p, q):
    """Greedy gcd of two integer polynomials: ``(h, p/h, q/h)``.

    Backed by sympy's dense heuristic gcd over ZZ.
    """
    f = [ZZ(a) for a in reversed(p)]
    g = [ZZ(a) for a in reversed(q)]
    h, cf, cg = dup_inner_gcd(f, g, ZZ)

    def back(v):
        return trim(int(a) for a in reversed(v))

    return back(h), back(cf), back(cg)


def one_minus_x_pow(k: int):
    """The polynomial ``1 - x**k``."""
    if k == 0:
        return ()
    return (1,) + (0,) * (k - 1) + (-1,)


def shift_at_one(p, n: int):
    """First ``n`` coefficients of ``p(1 - t)`` as a polynomial in ``t``."""
    out = []
    for i in range(n):
        s = 0
        for j in range(i, len(p)):
            if p[j]:
                s += p[j] * comb(j, i)
        out.append(-s if i % 2 else s)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int):
    """Integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = (-1,) + (0,) * (n - 1) + (1,)  # x**n - 1
    for d in range(1, n):
        if n % d == 0:
            p = exact_div(p, cyclotomic_poly(d))
    return p


def to_str(p, var="x") -> str:
    terms = []
    for i, a in enumerate(p):
        if a == 0:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        if mono and a == 1:
            t = mono
        elif mono and a == -1:
            t = "-" + mono
        elif mono:
            t = f"{a}*{mono}"
        else:
            t = str(a)
        terms.append(t)
    if not terms:
        return "0"
    s = terms[0]
    for t in terms[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s
