"""Named fixture checks bundled for the ``verify-paper`` command."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..circle_quotient import WeightVector, gamma_closed_form_n3, gamma_extracted, predicates
from ..u2_catalog import (
    DuValSpec,
    binary_dihedral_group,
    cyclic_product_group,
    duval_group,
    gamma_finite_closed_form,
    molien_real,
    quadratic_dimension,
    su2_cyclic_group,
    su2_group,
    typeIII_closed_form,
    typeIIIprime_closed_form,
    typeIIIprime_printed_form,
)
from .audit import audit
from .certificates import verify_certificate
from .proofscans import DEFAULT_BOUND, verify_paper_arguments
from .reduction import reduce_to_n3


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _run(name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, bool(ok), detail)


def _gamma_111():
    g = gamma_extracted(WeightVector((-1, 1, 1))).gamma0
    c = gamma_closed_form_n3(WeightVector((-1, 1, 1))).gamma0
    return g == c == Fraction(3, 8), f"extracted {g}, closed form {c}"


def _gamma_example():
    A = WeightVector((-3, 6, 12, 4))
    g = gamma_extracted(A).gamma0
    rec = predicates(A)
    return g == Fraction(1, 21) and rec.codim1_chain is False, f"gamma0 {g}, codim1_chain {rec.codim1_chain}"


def _chain_example():
    r = reduce_to_n3(WeightVector((-3, 6, 12, 4)))
    fails = [c.failure for c in r.failures]
    return (not r.ok) and any("(-1, 2, 4)" in f for f in fails), "; ".join(fails)


def _typeIII():
    bad = [l for l in range(2, 6) if molien_real(duval_group(DuValSpec("III", 1, l))).series != typeIII_closed_form(l)]
    return not bad, f"mismatch at l = {bad}" if bad else "l = 2..5 agree"


def _typeIIIprime():
    out = []
    ok = True
    for l in (3, 5, 7):
        md = molien_real(duval_group(DuValSpec("III'", 1, l)))
        printed = md.series == typeIIIprime_printed_form(l)
        corrected = md.series == typeIIIprime_closed_form(l)
        ok &= (not printed) and corrected and md.quadratic_dimension == 3
        out.append(f"l={l}: printed {'equal' if printed else 'differs'}, x^2 coefficient {md.quadratic_dimension}")
    return ok, "; ".join(out)


def _gammas(spec, want):
    G = duval_group(spec)
    md = molien_real(G)
    cf = gamma_finite_closed_form(G)
    got = (md.gamma0, md.gamma2)
    return got == want and cf == want, f"{spec.label()}: molien {got[0]}, {got[1]}; primitive set {cf[0]}, {cf[1]}"


def _typeII_gammas():
    res = [_gammas(DuValSpec("II", m, 1), (Fraction(1, 4 * m), Fraction(1, 8 * m))) for m in (2, 4, 6)]
    return all(r[0] for r in res), "; ".join(r[1] for r in res)


def _typeIIIp_gammas():
    res = [_gammas(DuValSpec("III'", m, 1), (Fraction(1, 2 * m), Fraction(1, 8 * m))) for m in (1, 3, 5, 7)]
    return all(r[0] for r in res), "; ".join(r[1] for r in res)


def _typeIV_gammas():
    res = [_gammas(DuValSpec("IV", m, 1), (Fraction(1, 8 * m), Fraction(1, 8 * m))) for m in (1, 3, 5)]
    return all(r[0] for r in res), "; ".join(r[1] for r in res)


def _census(spec, count, orders=None):
    G = duval_group(spec)
    prs = G.pseudoreflections
    got = sorted(o for _i, o in prs)
    ok = len(prs) == count and (orders is None or got == orders)
    return ok, f"{spec.label()}: {len(prs)} pseudoreflections, orders {got}"


def _census_all():
    res = [
        _census(DuValSpec("II", 2, 1), 2, [2, 2]),
        _census(DuValSpec("II", 4, 1), 2, [2, 2]),
        _census(DuValSpec("III", 2, 1), 0),
        _census(DuValSpec("III", 4, 1), 0),
        _census(DuValSpec("IV", 1, 1), 4, [2, 2, 2, 2]),
        _census(DuValSpec("IV", 3, 1), 4, [2, 2, 2, 2]),
    ]
    return all(r[0] for r in res), "; ".join(r[1] for r in res)


def _quadratic_table():
    got = {
        "Omega^S_2": quadratic_dimension(su2_cyclic_group(2)),
        **{f"Omega^S_{m}": quadratic_dimension(su2_cyclic_group(m)) for m in range(3, 9)},
        "D_1": quadratic_dimension(binary_dihedral_group(1)),
        **{f"D_{m}": quadratic_dimension(binary_dihedral_group(m)) for m in range(2, 7)},
        **{f"<Omega^S_{m},Omega_{r}>": quadratic_dimension(cyclic_product_group(m, r))
           for m in (3, 4, 5) for r in (3, 4, 5)},
    }
    want = {k: (10 if k == "Omega^S_2" else 4 if k.startswith("Omega^S") or k == "D_1"
                else 1 if k.startswith("D_") else 2) for k in got}
    bad = {k: v for k, v in got.items() if v != want[k]}
    return not bad, f"mismatches {bad}" if bad else f"{len(got)} groups agree"


def _su2_orders():
    d1 = len(su2_group("binary_dihedral", 1))
    i120 = su2_group("I120")
    from ..u2_catalog import is_pseudoreflection

    prs = sum(1 for g in i120 if is_pseudoreflection(g)[0])
    return d1 == 4 and len(i120) == 120 and prs == 0, f"|D_1| = {d1}, |I120| = {len(i120)}, pseudoreflections {prs}"


def _audit_example():
    A = WeightVector((-6, 10, 15))
    rep = audit(A)
    ok = rep.verdict == "excluded_all_candidates" and all(verify_certificate(c, rep.normalized) for c in rep.candidates)
    return ok, f"verdict {rep.verdict}, {len(rep.candidates)} certificates"


def paper_checks(scan_bound: int = DEFAULT_BOUND) -> list:
    checks = [
        ("gamma0(1,1,1) = 3/8", _gamma_111),
        ("gamma0(-3,6,12,4) = 1/21, no codim-1 chain", _gamma_example),
        ("(-3,6,12,4) descent stops at (-1,2,4)", _chain_example),
        ("Type III Molien closed form l=2..5", _typeIII),
        ("Type III' printed form differs, x^2 coefficient 3", _typeIIIprime),
        ("Type II m even: gamma0 = 1/(4m), gamma2 = 1/(8m)", _typeII_gammas),
        ("Type III' l=1: gamma0 = 1/(2m), gamma2 = 1/(8m)", _typeIIIp_gammas),
        ("Type IV m odd l=1: gamma0 = gamma2 = 1/(8m)", _typeIV_gammas),
        ("pseudoreflection censuses (Types II, III, IV)", _census_all),
        ("quadratic invariant dimensions", _quadratic_table),
        ("|D_1| = 4, |I120| = 120 without pseudoreflections", _su2_orders),
        ("(-6,10,15) excluded with re-validated certificates", _audit_example),
    ]
    out = [_run(name, fn) for name, fn in checks]
    for s in verify_paper_arguments(scan_bound):
        label = f"{s.name}: {s.expected}"
        out.append(CheckResult(label, s.passed, f"found {s.count}"))
    return out
