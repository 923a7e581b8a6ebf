"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction


class PowerSeries:
    """A power series known modulo ``x**(order + 1)``.

    ``coefficients[k]`` is the coefficient of ``x**k`` for ``0 <= k <= order``.
    Binary operations truncate to the smaller order of the two operands.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients, order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            coeffs = (coeffs + [Fraction(0)] * (order + 1))[: order + 1]
        if not coeffs:
            raise ValueError("a power series needs at least one coefficient")
        self.coefficients = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_poly(cls, p, order: int) -> "PowerSeries":
        return cls(p, order)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coefficients[: order + 1])

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order) + 1
        return PowerSeries(a + b for a, b in zip(self.coefficients[:n], other.coefficients[:n]))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-a for a in self.coefficients)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries(c * a for a in self.coefficients)
        n = min(self.order, other.order) + 1
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                for j in range(n - i):
                    out[i + j] += a[i] * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        a = self.coefficients
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, len(a)):
            s = sum(a[j] * out[k - j] for j in range(1, k + 1))
            out.append(-s * inv0)
        return PowerSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        n = min(self.order, other.order)
        return self.truncate(n) * other.truncate(n).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coefficients[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"PowerSeries([{head}{more}], order={self.order})"
