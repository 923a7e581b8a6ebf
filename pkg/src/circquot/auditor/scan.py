"""Batch audits over boxes of weight vectors, with CSV output and fixtures."""
from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from itertools import combinations
from math import gcd
from pathlib import Path

from ..circle_quotient import WeightVector
from .audit import AuditReport, audit

CSV_COLUMNS = ("weights", "gamma0", "diophantine", "rhm", "codim1_chain", "nondegenerate", "ratio_ok",
               "verdict", "first_obstruction")
FIXTURE_ENV = "CIRCQUOT_FIXTURES"


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent.parent / "data"


def scan_vectors(alpha_max: int, n: int = 3, alpha_min: int = 1):
    """Normalized generic vectors (-a1, a2 < ... < an), gcd 1, lexicographic order."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = range(alpha_min, alpha_max + 1)
    for a1 in rng:
        for rest in combinations(rng, n - 1):
            if a1 in rest:
                continue
            if reduce(gcd, rest, a1) != 1:
                continue
            yield WeightVector((-a1,) + rest)


def scan(alpha_max: int, n: int = 3, alpha_min: int = 1, jobs: int = 1) -> list:
    """Audit every vector of ``scan_vectors``; the result order is deterministic."""
    vecs = list(scan_vectors(alpha_max, n, alpha_min))
    if jobs > 1 and len(vecs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(audit, vecs, chunksize=max(1, len(vecs) // (8 * jobs))))
    return [audit(v) for v in vecs]


def _flag(v):
    return "" if v is None else ("1" if v else "0")


def report_row(rep: AuditReport) -> dict:
    rec = rep.predicates
    g0 = rep.details.get("gamma0")
    row = {
        "weights": ",".join(str(a) for a in rep.input.weights),
        "gamma0": "" if g0 is None else f"{g0.numerator}/{g0.denominator}",
        "verdict": rep.verdict,
        "first_obstruction": rep.first_obstruction,
    }
    for k in ("diophantine", "rhm", "codim1_chain", "nondegenerate", "ratio_ok"):
        row[k] = _flag(None if rec is None else getattr(rec, k))
    return row


def rows_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, delimiter=";", lineterminator="\n")
    w.writeheader()
    for rep in reports:
        w.writerow(report_row(rep))
    return buf.getvalue()


def summarize(reports, n: int, alpha_max: int) -> dict:
    verdicts = Counter(r.verdict for r in reports)
    firsts = Counter()
    for r in reports:
        if r.verdict == "excluded_by_predicate":
            firsts[r.first_obstruction] += 1
        for c in r.all_certificates():
            firsts[c.obstruction or "none"] += 1
    dioph = sum(1 for r in reports if r.predicates is not None and r.predicates.diophantine)
    return {
        "n": n,
        "alpha_max": alpha_max,
        "vectors": len(reports),
        "diophantine_passing": dioph,
        "verdicts": dict(sorted(verdicts.items())),
        "obstructions": dict(sorted(firsts.items())),
    }


def fixture_name(n: int, alpha_max: int) -> str:
    return f"scan_n{n}_alpha{alpha_max}"


def load_fixture(n: int, alpha_max: int):
    """``(summary, csv_text)`` or None if no fixture is stored."""
    base = fixture_dir() / fixture_name(n, alpha_max)
    js, cs = base.with_suffix(".json"), base.with_suffix(".csv")
    if not js.exists():
        return None
    return json.loads(js.read_text()), cs.read_text() if cs.exists() else None


def write_fixture(reports, n: int, alpha_max: int, directory: Path | None = None) -> Path:
    directory = Path(directory) if directory else fixture_dir()
    directory.mkdir(parents=True, exist_ok=True)
    base = directory / fixture_name(n, alpha_max)
    summary = summarize(reports, n, alpha_max)
    summary["schema_version"] = "1"
    base.with_suffix(".json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    base.with_suffix(".csv").write_text(rows_to_csv(reports))
    return base
