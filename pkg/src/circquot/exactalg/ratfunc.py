"""Exact rational functions in one variable, Laurent expansion at x = 1,
and rational reconstruction from truncated series."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from .series import PowerSeries


class ReconstructionFailed(ArithmeticError):
    """No rational function within the degree bounds reproduces the fitted coefficients."""


class ReconstructionUnverified(ArithmeticError):
    """A candidate was found but it disagrees with the verification coefficients."""


def _to_fraction_tuple(p):
    return tuple(Fraction(a) for a in p)


def _as_int_poly(p):
    """``(1, ints)`` for integral input, else ``clear_denominators`` of it."""
    p = list(p)
    if all(isinstance(a, int) for a in p):
        return 1, P.trim(p)
    if all(isinstance(a, Fraction) and a.denominator == 1 for a in p):
        return 1, P.trim(int(a) for a in p)
    return P.clear_denominators(P.trim(_to_fraction_tuple(p)))


class RationalFunction:
    """``numerator / denominator`` with integer polynomial coefficients.

    Stored canonically: common polynomial factors and common integer content
    are divided out, and the denominator has a positive leading coefficient.
    Two instances are equal iff they represent the same function.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=(1,)):
        d1, num_i = _as_int_poly(numerator)
        d2, den_i = _as_int_poly(denominator)
        if not den_i:
            raise ZeroDivisionError("zero denominator")
        # num/den == (num_i/d1) / (den_i/d2)
        num_i = tuple(a * d2 for a in num_i)
        den_i = tuple(a * d1 for a in den_i)
        if not num_i:
            self.numerator, self.denominator = (), (1,)
            return
        _, num_i, den_i = P.gcd_cofactors(num_i, den_i)
        if den_i[-1] < 0:
            num_i = tuple(-a for a in num_i)
            den_i = tuple(-a for a in den_i)
        if den_i[0] == 0:
            raise ValueError("denominator vanishes at x = 0; not a power series")
        self.numerator = num_i
        self.denominator = den_i

    @classmethod
    def from_factors(cls, numerator, factors):
        """Build ``numerator / prod(factors)``."""
        den = (1,)
        for f in factors:
            den = P.mul(den, f)
        return cls(numerator, den)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            P.add(P.mul(self.numerator, other.denominator), P.mul(other.numerator, self.denominator)),
            P.mul(self.denominator, other.denominator),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(P.scale(self.numerator, -1), self.denominator)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            P.mul(self.numerator, other.numerator), P.mul(self.denominator, other.denominator)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.numerator:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(
            P.mul(self.numerator, other.denominator), P.mul(self.denominator, other.numerator)
        )

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"RationalFunction(({P.to_str(self.numerator)}) / ({P.to_str(self.denominator)}))"

    def __str__(self):
        return f"({P.to_str(self.numerator)}) / ({P.to_str(self.denominator)})"

    def __call__(self, x):
        num = P.evaluate(self.numerator, Fraction(x))
        den = P.evaluate(self.denominator, Fraction(x))
        return num / den

    # expansions ---------------------------------------------------------
    def taylor(self, degree: int) -> PowerSeries:
        return taylor_coefficients(self, degree)

    def laurent_at_one(self, k_max: int) -> "LaurentCoefficients":
        return laurent_at_one(self, k_max)


def taylor_coefficients(f: RationalFunction, degree: int) -> PowerSeries:
    """Exact Taylor coefficients of ``f`` at ``x = 0`` through ``degree``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    q = f.denominator
    if q[0] == 0:
        raise ValueError("denominator vanishes at 0")
    p = f.numerator
    q0 = q[0]
    out = []
    if q0 in (1, -1):
        for k in range(degree + 1):
            s = p[k] if k < len(p) else 0
            for j in range(1, min(k, len(q) - 1) + 1):
                s -= q[j] * out[k - j]
            out.append(s * q0)
        return PowerSeries(out)
    q0 = Fraction(q0)
    for k in range(degree + 1):
        s = Fraction(p[k] if k < len(p) else 0)
        for j in range(1, min(k, len(q) - 1) + 1):
            s -= q[j] * out[k - j]
        out.append(s / q0)
    return PowerSeries(out)


@dataclass(frozen=True)
class LaurentCoefficients:
    """``f(x) = sum_j coefficients[j] / (1 - x)**(pole_order - j)`` near x = 1."""

    pole_order: int
    coefficients: tuple

    def __getitem__(self, j):
        return self.coefficients[j]

    @property
    def gamma0(self):
        return self.coefficients[0]

    def principal_part(self) -> RationalFunction:
        """The truncated expansion as a rational function."""
        out = RationalFunction((0,))
        one_minus_x = (1, -1)
        for j, c in enumerate(self.coefficients):
            e = self.pole_order - j
            if e >= 0:
                out = out + RationalFunction((c,), P.power(one_minus_x, e))
            else:
                out = out + RationalFunction(P.scale(P.power(one_minus_x, -e), c))
        return out


def _divide_out_root_one(p):
    """Return ``(k, q)`` with ``p = (x - 1)**k * q`` and ``q(1) != 0``."""
    k = 0
    p = list(p)
    while p and sum(p) == 0:
        # synthetic division by (x - 1), from the top coefficient down
        n = len(p) - 1
        q = [0] * n
        acc = 0
        for i in range(n, 0, -1):
            acc += p[i]
            q[i - 1] = acc
        p = q
        k += 1
    return k, tuple(p)


def laurent_at_one(f: RationalFunction, k_max: int) -> LaurentCoefficients:
    """Pole order and leading Laurent coefficients of ``f`` at ``x = 1``.

    Substitutes ``x = 1 - t`` and divides the shifted series exactly.  When
    ``f`` has no pole at 1, ``pole_order`` is 0 and the coefficients are the
    Taylor coefficients of ``f(1 - t)``.
    """
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    if not f.numerator:
        return LaurentCoefficients(0, tuple(Fraction(0) for _ in range(k_max + 1)))
    ep, p1 = _divide_out_root_one(f.numerator)
    eq, q1 = _divide_out_root_one(f.denominator)
    # (x - 1)**e = (-t)**e
    sign = -1 if (ep - eq) % 2 else 1
    d = eq - ep
    n = k_max + 1 if d > 0 else max(k_max + 1 + d, 0)
    if n == 0:
        return LaurentCoefficients(0, tuple(Fraction(0) for _ in range(k_max + 1)))
    v = PowerSeries(P.shift_at_one(p1, n))
    u = PowerSeries(P.shift_at_one(q1, n))
    w = (v / u) * sign
    if d > 0:
        return LaurentCoefficients(d, tuple(w.coefficients))
    lead = tuple(Fraction(0) for _ in range(-d))
    return LaurentCoefficients(0, (lead + tuple(w.coefficients))[: k_max + 1])


# reconstruction ---------------------------------------------------------

def _nullspace_vector(rows, ncols):
    """A nonzero vector in the right kernel of a Fraction matrix, or None."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    fc = free[0]
    vec = [Fraction(0)] * ncols
    vec[fc] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -m[i][fc]
    return vec


def reconstruct_rational(s: PowerSeries, num_bound: int, den_bound: int) -> RationalFunction:
    """Recover ``P/Q`` with ``deg P <= num_bound``, ``deg Q <= den_bound`` from ``s``.

    The linearized Pade system uses coefficients ``0 .. num_bound + den_bound``;
    every further supplied coefficient (ideally ``den_bound`` of them) is used
    to verify the result.
    """
    if num_bound < 0 or den_bound < 0:
        raise ValueError("degree bounds must be non-negative")
    fit = num_bound + den_bound
    if s.order < fit:
        raise ValueError(f"need truncation order >= {fit}, got {s.order}")
    c = s.coefficients

    def coef(i):
        return c[i] if i >= 0 else Fraction(0)

    rows = [[coef(k - j) for j in range(den_bound + 1)] for k in range(num_bound + 1, fit + 1)]
    q = _nullspace_vector(rows, den_bound + 1) if rows else [Fraction(1)]
    if q is None:
        raise ReconstructionFailed("denominator system has only the trivial solution")
    p = P.mul_trunc(c, q, num_bound + 1)
    try:
        f = RationalFunction(p, q)
    except (ValueError, ZeroDivisionError) as exc:
        raise ReconstructionFailed(str(exc)) from exc
    t = taylor_coefficients(f, s.order)
    if t.coefficients[: fit + 1] != c[: fit + 1]:
        raise ReconstructionFailed("no rational function within the bounds fits the series")
    if t.coefficients != c:
        k = next(i for i in range(fit + 1, s.order + 1) if t[i] != c[i])
        raise ReconstructionUnverified(f"candidate disagrees with the series at degree {k}")
    return f


def reconstruct_with_denominator(s: PowerSeries, den_factors, num_bound: int, margin: int):
    """Recover the numerator for a known multiple of the true denominator.

    ``den_factors`` is a sequence of integer polynomials whose product ``Q``
    is assumed to clear the denominator.  The numerator is ``s * Q`` truncated
    at ``num_bound``; the next ``margin`` coefficients of ``s * Q`` must vanish.
    """
    need = num_bound + margin
    if s.order < need:
        raise ValueError(f"need truncation order >= {need}, got {s.order}")
    prod = [int(c) if c.denominator == 1 else c for c in s.coefficients]
    n = len(prod)
    for fac in den_factors:
        nz = [(i, a) for i, a in enumerate(fac) if a]
        out = [0] * n
        for i, a in nz:
            for k in range(i, n):
                out[k] += a * prod[k - i]
        prod = out
    tail = prod[num_bound + 1 :]
    if any(tail):
        k = num_bound + 1 + next(i for i, a in enumerate(tail) if a)
        raise ReconstructionUnverified(f"s * Q does not terminate: nonzero coefficient at degree {k}")
    den = (1,)
    for fac in den_factors:
        den = P.mul(den, fac)
    return RationalFunction(prod[: num_bound + 1], den)
