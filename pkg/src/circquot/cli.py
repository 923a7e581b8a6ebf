"""Command-line front end.

Exit codes: 0 success, 1 verify-paper failure, 2 bad input, 3 internal
error, 4 counterexample candidate found.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .auditor import (
    audit,
    load_fixture,
    paper_checks,
    rows_to_csv,
    scan,
    summarize,
    verify_certificate,
)
from .circle_quotient import (
    WeightVector,
    codim1_chain_order,
    gamma_closed_form_n3,
    gamma_extracted,
    hilb_on_series,
    normalize,
    orbit_type_lattice,
    predicates,
    shell_support,
)
from .u2_catalog import (
    DuValSpec,
    InvalidSpec,
    duval_group,
    enumerate_groups_of_order,
    gamma_finite_closed_form,
    molien_real,
)

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_INTERNAL, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


def _q(v):
    return f"{v.numerator}/{v.denominator}"


def jsonable(obj):
    """Fractions become "p/q" strings; tuples become lists."""
    if isinstance(obj, Fraction):
        return _q(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    return obj


def flatten(obj, prefix=""):
    """``[(dotted.path, scalar)]`` in a stable order; used for text output."""
    out = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            out += flatten(v, f"{prefix}[{i}]")
    else:
        out.append((prefix, obj))
    return out


def render_text(envelope: dict) -> str:
    lines = []
    for k, v in flatten(envelope):
        lines.append(f"{k}: {json.dumps(v)}")
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> dict:
    """Inverse of ``render_text`` on the leaves (for round-trip tests)."""
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        k, _, v = line.partition(": ")
        out[k] = json.loads(v)
    return out


def parse_weights(text: str) -> WeightVector:
    try:
        A = WeightVector.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return A


# ---- commands -------------------------------------------------------------


def cmd_analyze(args) -> tuple[dict, int]:
    A = parse_weights(args.weights)
    B, log = normalize(A)
    res = {"normalization": log.as_dict(), "normalized": list(B.weights)}
    if log.trivial:
        res["verdict"] = "not_applicable"
        return res, EXIT_OK
    res["shell_support"] = sorted(shell_support(B))
    res["degenerate"] = not B.generic
    # gamma data depends on the absolute weights only; single-sign inputs use (-a1, a2, ...)
    rep = B if B.both_signs else WeightVector((-B.alphas[0],) + B.alphas[1:])
    if not B.both_signs:
        res["verdict"] = "point"
        res["gamma_note"] = "single-sign input: gamma data shown for the absolute weights"
    elif B.n == 2:
        res["verdict"] = "dimension_two_orbifold"
        res["N"] = sum(B.alphas)
    if rep.n >= 2:
        ext = gamma_extracted(rep)
        res["gamma_extracted"] = ext.as_dict()
        res["gamma0"] = _q(ext.gamma0)
        if rep.n == 3:
            res["gamma_closed_form"] = gamma_closed_form_n3(rep).as_dict()
        res["series_head"] = [int(c) for c in hilb_on_series(rep, args.series_degree).coefficients]
    rec = predicates(B)
    res["predicates"] = rec.as_dict()
    for k in ("diophantine", "codim1_chain", "nondegenerate", "ratio_ok"):
        res[k] = getattr(rec, k)
    if "verdict" not in res:
        res["verdict"] = "excluded_by_predicate" if not rec.all_pass() else "needs_candidate_audit"
    res["orbit_type_lattice"] = [v.as_dict() for v in orbit_type_lattice(B)] if B.both_signs else []
    if B.both_signs and B.negative_count == 1 and B.n >= 3:
        order = codim1_chain_order(B)
        res["chain_order"] = None if order is None else list(order)
    return res, EXIT_OK


def _spec_from_args(args) -> DuValSpec:
    ell = args.ell
    if ell is None and args.type.replace("′", "'") in ("II", "III", "III'", "IV"):
        ell = 1  # the dihedral factor defaults to D_1 = <b>
    try:
        return DuValSpec(args.type, args.m, ell=ell, n=args.n, f=args.f, g=args.g, d=args.d)
    except InvalidSpec as exc:
        raise InputError(str(exc)) from None


def group_payload(spec: DuValSpec, with_molien: bool) -> dict:
    G = duval_group(spec)
    prs = G.pseudoreflections
    orders = {}
    for _i, o in prs:
        orders[str(o)] = orders.get(str(o), 0) + 1
    g0, g2 = gamma_finite_closed_form(G)
    res = {
        "spec": spec.as_dict(),
        "order": G.order,
        "pseudoreflection_count": len(prs),
        "pseudoreflection_orders": dict(sorted(orders.items(), key=lambda kv: int(kv[0]))),
        "primitive_orders": [p.order for p in G.primitive_set],
        "gamma_closed_form": {"gamma0": _q(g0), "gamma2": _q(g2)},
    }
    if with_molien:
        md = molien_real(G)
        res["molien"] = md.as_dict()
        res["molien"]["series"] = str(md.series)
        res["gamma0"] = _q(md.gamma0)
        res["gamma2"] = _q(md.gamma2)
        res["quadratic_dimension"] = md.quadratic_dimension
    return res


def cmd_group(args):
    return group_payload(_spec_from_args(args), args.molien), EXIT_OK


def cmd_catalog(args):
    if args.order < 1:
        raise InputError("order must be >= 1")
    caps = {k: v for k, v in (("max_m", args.max_m), ("max_ell", args.max_ell)) if v is not None}
    specs = enumerate_groups_of_order(args.order, caps)
    rows = []
    for s in specs:
        G = duval_group(s)
        rows.append({**s.as_dict(), "pseudoreflections": len(G.pseudoreflections)})
    return {"order": args.order, "count": len(rows), "groups": rows}, EXIT_OK


def cmd_audit(args):
    A = parse_weights(args.weights)
    rep = audit(A)
    res = rep.as_dict(certificates=args.certificates)
    if args.certificates:
        res["certificates_valid"] = all(verify_certificate(c, rep.normalized) for c in rep.candidates)
    code = EXIT_COUNTEREXAMPLE if rep.verdict == "counterexample_candidate" else EXIT_OK
    return res, code


def cmd_scan(args):
    if args.alpha_max < args.alpha_min - 1:
        raise InputError("alpha-max must be at least alpha-min - 1")
    if args.n < 2:
        raise InputError("n must be at least 2")
    reports = scan(args.alpha_max, args.n, args.alpha_min, args.jobs)
    csv_text = rows_to_csv(reports)
    summary = summarize(reports, args.n, args.alpha_max)
    res = {"summary": summary}
    if args.csv:
        Path(args.csv).write_text(csv_text)
        res["csv"] = str(args.csv)
    if args.check_fixture:
        fx = load_fixture(args.n, args.alpha_max)
        if fx is None:
            res["fixture"] = "missing"
        else:
            fsum, fcsv = fx
            fsum = {k: v for k, v in fsum.items() if k != "schema_version"}
            same = fsum == json.loads(json.dumps(summary)) and (fcsv is None or fcsv == csv_text)
            res["fixture"] = "match" if same else "mismatch"
    code = EXIT_COUNTEREXAMPLE if summary["verdicts"].get("counterexample_candidate") else EXIT_OK
    res["_csv_text"] = csv_text
    return res, code


def cmd_verify(args):
    results = paper_checks(args.bound)
    res = {"checks": [r.as_dict() for r in results], "all_passed": all(r.passed for r in results)}
    return res, EXIT_OK if res["all_passed"] else EXIT_VERIFY


# ---- argument parsing -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circquot", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"circquot {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--timing", action="store_true", help="include wall time in milliseconds")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="analyze one weight vector")
    a.add_argument("--weights", required=True)
    a.add_argument("--series-degree", type=int, default=8)
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("group", parents=[common], help="one Du Val group")
    g.add_argument("--type", required=True)
    g.add_argument("--m", type=int, required=True)
    for k in ("ell", "n", "f", "g", "d"):
        g.add_argument(f"--{k}", type=int)
    g.add_argument("--molien", action="store_true")
    g.set_defaults(func=cmd_group)

    c = sub.add_parser("catalog", parents=[common], help="all Du Val groups of a given order")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--max-m", type=int)
    c.add_argument("--max-ell", type=int)
    c.set_defaults(func=cmd_catalog)

    au = sub.add_parser("audit", parents=[common], help="full audit of one weight vector")
    au.add_argument("--weights", required=True)
    au.add_argument("--certificates", action="store_true")
    au.set_defaults(func=cmd_audit)

    s = sub.add_parser("scan", parents=[common], help="audit a box of weight vectors")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--alpha-max", type=int, required=True)
    s.add_argument("--alpha-min", type=int, default=1)
    s.add_argument("--csv", help="write CSV rows to this path instead of stdout")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--check-fixture", action="store_true", help="compare with the stored regression fixture")
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify-paper", parents=[common], help="run every anchored fixture and proof scan")
    v.add_argument("--bound", type=int, default=100)
    v.set_defaults(func=cmd_verify)
    return p


def _fix_negative_values(argv):
    # let "--weights -3,6,12,4" through argparse's option detection
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--weights" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--weights={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _emit(args, result, elapsed_ms, out):
    csv_text = result.pop("_csv_text", None) if isinstance(result, dict) else None
    env = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "input": {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "format", "timing")},
        "result": jsonable(result),
    }
    if args.timing:
        env["timing_ms"] = round(elapsed_ms, 3)
    if args.command == "scan" and args.format == "text" and not args.csv:
        out.write(csv_text)
        return
    if args.command == "verify-paper" and args.format == "text":
        width = max(len(c["name"]) for c in env["result"]["checks"])
        for c in env["result"]["checks"]:
            out.write(f"{c['name']:<{width}} : {'PASS' if c['passed'] else 'FAIL'}\n")
        out.write(f"{'all' :<{width}} : {'PASS' if env['result']['all_passed'] else 'FAIL'}\n")
        return
    if args.format == "json":
        out.write(json.dumps(env, indent=2) + "\n")
    else:
        out.write(render_text(env))


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_fix_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    t0 = time.perf_counter()
    try:
        result, code = args.func(args)
    except (InputError, InvalidSpec) as exc:
        print(f"circquot: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # anything else is a bug; report and use the internal-error code
        print(f"circquot: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(args, result, (time.perf_counter() - t0) * 1000, out)
    if code == EXIT_COUNTEREXAMPLE:
        print("circquot: ALARM: a candidate group survived every obstruction", file=sys.stderr)
    elif code == EXIT_VERIFY:
        failed = [c["name"] for c in result["checks"] if not c["passed"]]
        print(f"circquot: failing checks: {'; '.join(failed)}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
