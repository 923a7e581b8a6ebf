"""Weight vectors of unitary circle representations and their normalization."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from functools import reduce


def gcd_all(values) -> int:
    return reduce(gcd, (abs(v) for v in values), 0)


class WeightVector:
    """The integer weights ``(a_1, ..., a_n)`` of a diagonal circle action on C^n.

    Derived data (absolute values, pairwise gcds, elementary symmetric values
    of the absolute values, sign counts) is computed on construction.
    """

    __slots__ = ("weights", "alphas", "_gcd")

    def __init__(self, weights):
        self.weights = tuple(int(a) for a in weights)
        self.alphas = tuple(abs(a) for a in self.weights)
        self._gcd = gcd_all(self.weights)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Parse ``"-3,6,12,4"`` (commas and/or whitespace)."""
        parts = [p for p in text.replace(",", " ").split()]
        if not parts:
            raise ValueError("empty weight list")
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse weights {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"WeightVector({self.weights})"

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.weights) + ")"

    @property
    def gcd(self) -> int:
        return self._gcd

    def pair_gcd(self, i: int, j: int) -> int:
        """``gcd(alpha_i, alpha_j)`` with 0-based indices."""
        return gcd(self.alphas[i], self.alphas[j])

    @property
    def pairwise_gcds(self) -> dict:
        n = self.n
        return {(i, j): self.pair_gcd(i, j) for i in range(n) for j in range(i + 1, n)}

    @property
    def e1(self) -> int:
        return sum(self.alphas)

    @property
    def e2(self) -> int:
        a = self.alphas
        return sum(a[i] * a[j] for i in range(len(a)) for j in range(i + 1, len(a)))

    @property
    def e3(self) -> int:
        a = self.alphas
        n = len(a)
        return sum(a[i] * a[j] * a[k] for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n))

    @property
    def negative_count(self) -> int:
        return sum(1 for a in self.weights if a < 0)

    @property
    def positive_count(self) -> int:
        return sum(1 for a in self.weights if a > 0)

    @property
    def zero_count(self) -> int:
        return sum(1 for a in self.weights if a == 0)

    @property
    def both_signs(self) -> bool:
        return self.negative_count > 0 and self.positive_count > 0

    @property
    def generic(self) -> bool:
        return len(set(self.alphas)) == len(self.alphas)

    def remove(self, i: int) -> "WeightVector":
        """Drop the weight at 0-based index ``i``."""
        return WeightVector(self.weights[:i] + self.weights[i + 1 :])


@dataclass
class NormalizationLog:
    original: tuple
    stripped_zero_indices: list = field(default_factory=list)
    divided_by: int = 1
    sign_flipped: bool = False
    permutation: tuple = ()  # permutation[k] = original index of new position k
    trivial: bool = False
    steps: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "original": list(self.original),
            "stripped_zero_indices": list(self.stripped_zero_indices),
            "divided_by": self.divided_by,
            "sign_flipped": self.sign_flipped,
            "permutation": list(self.permutation),
            "trivial": self.trivial,
            "steps": list(self.steps),
        }


def normalize(A) -> tuple[WeightVector, NormalizationLog]:
    """Strip zero weights, divide by the gcd and apply the sign convention.

    When one sign class is a singleton the lone weight is moved to the front
    and made negative (multiplying the whole vector by -1 if needed); the other
    weights keep their relative order.  Vectors of a single sign are made
    positive.  An all-zero input yields an empty vector with ``trivial`` set.
    """
    if not isinstance(A, WeightVector):
        A = WeightVector(A)
    if A.n == 0:
        raise ValueError("weight vector must be nonempty")
    log = NormalizationLog(original=A.weights)
    idx = [i for i, a in enumerate(A.weights) if a != 0]
    log.stripped_zero_indices = [i for i, a in enumerate(A.weights) if a == 0]
    if log.stripped_zero_indices:
        log.steps.append(f"stripped zero weights at positions {[i + 1 for i in log.stripped_zero_indices]}")
    if not idx:
        log.trivial = True
        log.steps.append("all weights zero: trivial representation")
        return WeightVector(()), log
    w = [A.weights[i] for i in idx]
    g = gcd_all(w)
    if g > 1:
        w = [a // g for a in w]
        log.divided_by = g
        log.steps.append(f"divided by gcd {g}")
    neg = [k for k, a in enumerate(w) if a < 0]
    pos = [k for k, a in enumerate(w) if a > 0]
    order = list(range(len(w)))
    if len(pos) == 0 or (len(pos) == 1 and len(neg) > 1):
        w = [-a for a in w]
        log.sign_flipped = True
        log.steps.append("multiplied by -1")
        neg, pos = pos, neg
    if len(neg) == 1:
        lone = neg[0]
        order = [lone] + [k for k in order if k != lone]
        if lone != 0:
            log.steps.append("moved the lone negative weight to the front")
    log.permutation = tuple(idx[k] for k in order)
    return WeightVector(w[k] for k in order), log


def is_normalized(A: WeightVector) -> bool:
    if A.n == 0 or A.zero_count or A.gcd != 1:
        return False
    if A.positive_count == 0:
        return False
    if A.negative_count == 1:
        return A.weights[0] < 0
    return A.positive_count != 1 or A.negative_count == 0


def shell_support(A: WeightVector) -> frozenset:
    """1-based indices of coordinates that vanish identically on the zero level.

    For a circle this is every index when all weights share one sign (the zero
    level is the origin) and empty otherwise.
    """
    nonzero = [i for i, a in enumerate(A.weights) if a != 0]
    if not nonzero:
        return frozenset()
    if A.both_signs:
        return frozenset()
    return frozenset(i + 1 for i in nonzero)
