"""Descent from n weights to n = 3 through codimension-1 orbit-type strata."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..circle_quotient import WeightVector, codim1_nodes, normalize
from ..circle_quotient.strata import OrbitTypeNode


class NotApplicable(ValueError):
    """Input outside the domain of the reduction (n < 3, or not one negative weight)."""


@dataclass(frozen=True)
class ReductionStep:
    parent: WeightVector
    node: OrbitTypeNode
    child: WeightVector  # restricted to the node's support, divided by its isotropy

    def as_dict(self) -> dict:
        return {
            "parent": list(self.parent.weights),
            "node": self.node.as_dict(),
            "child": list(self.child.weights),
        }


@dataclass
class ReductionChain:
    """One descent path; ``terminal`` is set on success, ``failure`` otherwise."""

    steps: list = field(default_factory=list)
    terminal: WeightVector | None = None
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.terminal is not None

    def as_dict(self) -> dict:
        return {
            "steps": [s.as_dict() for s in self.steps],
            "terminal": None if self.terminal is None else list(self.terminal.weights),
            "failure": self.failure,
        }


@dataclass
class ReductionResult:
    """All descent paths from one vector."""

    start: WeightVector
    chains: list

    @property
    def ok(self) -> bool:
        return bool(self.chains) and all(c.ok for c in self.chains)

    @property
    def terminals(self) -> list:
        seen, out = set(), []
        for c in self.chains:
            if c.terminal is not None and c.terminal.weights not in seen:
                seen.add(c.terminal.weights)
                out.append(c.terminal)
        return out

    @property
    def failures(self) -> list:
        return [c for c in self.chains if not c.ok]

    def as_dict(self) -> dict:
        return {
            "start": list(self.start.weights),
            "ok": self.ok,
            "terminals": [list(t.weights) for t in self.terminals],
            "chains": [c.as_dict() for c in self.chains],
        }


def _child(A: WeightVector, node: OrbitTypeNode) -> WeightVector:
    sub = WeightVector(A.weights[i - 1] for i in sorted(node.support))
    child, _log = normalize(sub)
    return child


def reduce_to_n3(A: WeightVector, max_paths: int = 10000) -> ReductionResult:
    """Explore every descent through codimension-1 strata down to n = 3.

    Each step restricts to the support of a codimension-1 node (dropping one
    positive weight) and divides by the node's isotropy order.  A path fails
    when some vector along it, the n = 3 end included, has no codimension-1
    node: a finite quotient reached this way must contain pseudoreflections.
    """
    if A.n < 3:
        raise NotApplicable(f"n = {A.n}: the reduced space has dimension at most 2")
    if A.negative_count != 1 or A.weights[0] >= 0 or A.zero_count:
        raise NotApplicable("reduction expects a normalized vector with one leading negative weight")
    chains = []

    def walk(B: WeightVector, steps: list):
        if len(chains) >= max_paths:
            raise RuntimeError(f"more than {max_paths} descent paths")
        nodes = codim1_nodes(B)
        if not nodes:
            chains.append(
                ReductionChain(list(steps), None, f"{B} has no codimension-1 orbit-type stratum")
            )
            return
        if B.n == 3:
            chains.append(ReductionChain(list(steps), B, None))
            return
        for node in sorted(nodes, key=lambda v: sorted(v.support)):
            C = _child(B, node)
            walk(C, steps + [ReductionStep(B, node, C)])

    walk(A, [])
    return ReductionResult(A, chains)
