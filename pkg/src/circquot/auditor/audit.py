"""Full audit of a circle weight vector against all finite unitary quotients."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..circle_quotient import (
    FLAGS,
    NormalizationLog,
    PredicateRecord,
    WeightVector,
    normalize,
    predicates,
)
from ..u2_catalog import enumerate_groups_of_order
from .certificates import WeightData, exclude_candidate, obstruction_summary
from .reduction import ReductionResult, reduce_to_n3

VERDICTS = (
    "excluded_by_predicate",
    "excluded_all_candidates",
    "dimension_two_orbifold",
    "point",
    "not_applicable",
    "counterexample_candidate",
)


def _frac(v):
    return None if v is None else f"{v.numerator}/{v.denominator}"


@dataclass
class AuditReport:
    input: WeightVector
    normalized: WeightVector | None
    log: NormalizationLog | None
    verdict: str
    predicates: PredicateRecord | None = None
    reduction: ReductionResult | None = None
    candidates: list = field(default_factory=list)
    terminal_reports: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def first_obstruction(self) -> str:
        """The failing predicate, or a summary of candidate obstructions."""
        if self.verdict == "excluded_by_predicate":
            if self.predicates is not None:
                failed = self.predicates.failed()
                if failed:
                    return failed[0]
            for t in self.terminal_reports:
                if t.verdict == "excluded_by_predicate":
                    return t.first_obstruction
            return self.details.get("reason", "")
        if self.verdict == "excluded_all_candidates":
            certs = self.all_certificates()
            return "|".join(f"{k}:{v}" for k, v in obstruction_summary(certs).items())
        return ""

    def all_certificates(self) -> list:
        out = list(self.candidates)
        for t in self.terminal_reports:
            out += t.all_certificates()
        return out

    def as_dict(self, certificates: bool = False) -> dict:
        d = {
            "input": list(self.input.weights),
            "normalized": None if self.normalized is None else list(self.normalized.weights),
            "normalization": None if self.log is None else self.log.as_dict(),
            "verdict": self.verdict,
            "first_obstruction": self.first_obstruction,
            "predicates": None if self.predicates is None else self.predicates.as_dict(),
            "details": {k: (_frac(v) if isinstance(v, Fraction) else v) for k, v in self.details.items()},
            "candidate_count": len(self.candidates),
            "obstruction_summary": obstruction_summary(self.candidates),
        }
        if self.reduction is not None:
            d["reduction"] = self.reduction.as_dict()
        if self.terminal_reports:
            d["terminal_reports"] = [t.as_dict(certificates) for t in self.terminal_reports]
        if certificates:
            d["certificates"] = [c.as_dict() for c in self.candidates]
        return d


def audit_n3(A: WeightVector, log: NormalizationLog | None = None, original: WeightVector | None = None) -> AuditReport:
    """Predicates, then exclusion of every Du Val group of order 1/gamma0."""
    if A.n != 3 or A.negative_count != 1 or A.weights[0] >= 0:
        raise ValueError("audit_n3 expects a normalized n = 3 vector with one leading negative weight")
    rec = predicates(A)
    rep = AuditReport(original or A, A, log, "excluded_by_predicate", rec)
    rep.details["gamma0"] = rec.gamma0
    if not rec.diophantine:
        return rep
    N = 1 / rec.gamma0
    rep.details["group_order"] = int(N)
    w = WeightData(A)
    specs = sorted(enumerate_groups_of_order(int(N)), key=lambda s: s.label())
    rep.candidates = [exclude_candidate(w, s) for s in specs]
    if any(not c.excluded for c in rep.candidates):
        rep.verdict = "counterexample_candidate"
    elif rec.all_pass():
        rep.verdict = "excluded_all_candidates"
    return rep


def audit(weights) -> AuditReport:
    """Route any integer vector to the appropriate verdict."""
    A = weights if isinstance(weights, WeightVector) else WeightVector(weights)
    B, log = normalize(A)
    if log.trivial:
        return AuditReport(A, B, log, "not_applicable", details={"reason": "all weights are zero"})
    if not B.both_signs:
        return AuditReport(A, B, log, "point", details={"reason": "single-sign weights: the zero level is the origin"})
    if B.n == 2:
        N = sum(B.alphas)
        return AuditReport(
            A, B, log, "dimension_two_orbifold",
            details={"N": N, "reason": f"reduced space is C/Z_{N}"},
        )
    if B.n == 3 and B.negative_count == 1:
        return audit_n3(B, log, A)
    rec = predicates(B)
    rep = AuditReport(A, B, log, "excluded_by_predicate", rec)
    rep.details["gamma0"] = rec.gamma0
    if not rec.all_pass():
        return rep
    red = reduce_to_n3(B)
    rep.reduction = red
    if not red.ok:
        rep.details["reason"] = "reduction_chain"
        return rep
    rep.terminal_reports = [audit_n3(T) for T in red.terminals]
    verdicts = {t.verdict for t in rep.terminal_reports}
    if "counterexample_candidate" in verdicts:
        rep.verdict = "counterexample_candidate"
    elif verdicts == {"excluded_all_candidates"}:
        rep.verdict = "excluded_all_candidates"
    else:
        rep.verdict = "excluded_by_predicate"
    return rep


def flags_row(rep: AuditReport) -> dict:
    rec = rep.predicates
    return {k: (None if rec is None else getattr(rec, k)) for k in FLAGS}
