"""Orbit-type strata of the zero level for a circle weight vector."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .weights import WeightVector, gcd_all


@dataclass(frozen=True)
class OrbitTypeNode:
    """Points whose nonzero coordinates are exactly those indexed by ``support``.

    ``support`` holds 1-based indices.  ``isotropy_order`` is the gcd of the
    supported weights (0 for the empty support, meaning the whole circle).
    """

    support: frozenset
    isotropy_order: int
    complex_dimension: int
    meets_shell: bool
    codimension: int
    cyclic_order: int | None = None

    @property
    def is_codim1_stratum(self) -> bool:
        # a genuine stratum needs isotropy strictly larger than the generic one
        return self.codimension == 1 and self.isotropy_order > 1

    def as_dict(self) -> dict:
        return {
            "support": sorted(self.support),
            "isotropy_order": self.isotropy_order,
            "complex_dimension": self.complex_dimension,
            "codimension": self.codimension,
            "meets_shell": self.meets_shell,
            "cyclic_order": self.cyclic_order,
        }


def supported_by_audit(A: WeightVector) -> bool:
    """The lattice description used downstream assumes exactly one negative weight."""
    return A.negative_count == 1 and A.weights[0] < 0


def _meets_shell(A: WeightVector, support) -> bool:
    if not support:
        return True
    signs = {A.weights[i - 1] > 0 for i in support if A.weights[i - 1] != 0}
    return len(signs) == 2


def orbit_type_lattice(A: WeightVector) -> list[OrbitTypeNode]:
    """All coordinate-support nodes that meet the zero level of the moment map.

    With one negative weight (at index 1) a support meets the shell iff it is
    empty or properly contains {1}.  For other sign patterns the general
    both-signs rule is used; ``supported_by_audit`` reports whether the
    one-negative convention holds.
    """
    n = A.n
    top = n - 1  # complex dimension of the whole reduced space
    nodes = [OrbitTypeNode(frozenset(), 0, 0, True, top, None)]
    for size in range(2, n + 1):
        for sub in combinations(range(1, n + 1), size):
            sup = frozenset(sub)
            if not _meets_shell(A, sup):
                continue
            k = gcd_all(A.weights[i - 1] for i in sub)
            dim = size - 1
            N = None
            if dim == 1:
                i, j = sub
                N = (A.alphas[i - 1] + A.alphas[j - 1]) // k
            nodes.append(OrbitTypeNode(sup, k, dim, True, top - dim, N))
    return nodes


def codim1_nodes(A: WeightVector) -> list[OrbitTypeNode]:
    """Complex codimension-1 strata: support of size n-1 with nontrivial isotropy."""
    return [v for v in orbit_type_lattice(A) if v.is_codim1_stratum]
