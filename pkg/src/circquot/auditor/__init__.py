"""Audit pipeline: reduction to n = 3, candidate exclusion, proof scans, batch scans."""
from .audit import VERDICTS, AuditReport, audit, audit_n3
from .certificates import (
    OBSTRUCTIONS,
    ExclusionCertificate,
    GroupData,
    WeightData,
    exclude_candidate,
    first_difference,
    kappa_witness,
    stratum_orders,
    verify_certificate,
)
from .reduction import NotApplicable, ReductionChain, ReductionResult, ReductionStep, reduce_to_n3
from .checks import CheckResult, paper_checks
from .proofscans import ScanResult, verify_paper_arguments
from .scan import (
    CSV_COLUMNS,
    fixture_dir,
    load_fixture,
    report_row,
    rows_to_csv,
    scan,
    scan_vectors,
    summarize,
    write_fixture,
)
