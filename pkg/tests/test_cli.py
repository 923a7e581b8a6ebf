import io
import json
import subprocess
import sys

import pytest

from circquot import cli
from circquot.auditor import AuditReport, CheckResult
from circquot.circle_quotient import WeightVector


def run(*argv):
    buf = io.StringIO()
    code = cli.main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


# ---- analyze ------------------------------------------------------------------


def test_analyze_paper_example():
    code, env = run_json("analyze", "--weights", "-3,6,12,4")
    assert code == 0
    assert env["schema_version"] == "1" and env["command"] == "analyze"
    assert env["result"]["gamma0"] == "1/21"
    assert env["result"]["codim1_chain"] is False


def test_analyze_degenerate():
    code, env = run_json("analyze", "--weights", "1,1,1")
    assert code == 0
    assert env["result"]["degenerate"] is True
    assert env["result"]["gamma0"] == "3/8"


def test_analyze_point():
    code, env = run_json("analyze", "--weights", "1,2,3")
    assert code == 0 and env["result"]["verdict"] == "point"


def test_analyze_shows_both_gamma_sources():
    _, env = run_json("analyze", "--weights", "-6,10,15")
    r = env["result"]
    assert r["gamma_closed_form"]["gamma0"] == r["gamma_extracted"]["gamma0"] == "1/28"
    assert r["gamma_closed_form"]["gamma2"] == r["gamma_extracted"]["gamma2"] == "15/112"
    assert r["series_head"][:3] == [1, 0, 2]


def test_analyze_parse_error_exit_2(capsys):
    code, out = run("analyze", "--weights", "1,x,3")
    assert code == 2 and out == ""
    assert "error" in capsys.readouterr().err


def test_missing_argument_exit_2():
    assert run("analyze")[0] == 2


# ---- group and catalog -----------------------------------------------------------


def test_group_type_II_molien():
    code, env = run_json("group", "--type", "II", "--m", "2", "--molien")
    assert code == 0
    assert env["result"]["gamma0"] == "1/8" and env["result"]["gamma2"] == "1/16"


def test_group_type_IV_pseudoreflections():
    code, env = run_json("group", "--type", "IV", "--m", "3", "--ell", "1")
    assert code == 0
    assert env["result"]["pseudoreflection_count"] == 4
    assert env["result"]["pseudoreflection_orders"] == {"2": 4}


def test_group_type_III_molien_series():
    _, env = run_json("group", "--type", "III", "--m", "1", "--ell", "2", "--molien")
    assert env["result"]["molien"]["head"][:3] == [1, 0, 3]


def test_group_invalid_spec_exit_2():
    assert run("group", "--type", "III'", "--m", "2", "--ell", "1")[0] == 2
    assert run("group", "--type", "I", "--m", "2")[0] == 2


def test_catalog_order_one():
    code, env = run_json("catalog", "--order", "1")
    assert code == 0 and env["result"]["count"] == 1
    assert env["result"]["groups"][0]["order"] == 1


def test_catalog_bad_order():
    assert run("catalog", "--order", "0")[0] == 2


# ---- audit --------------------------------------------------------------------------


def test_audit_6_10_15_certificates():
    code, env = run_json("audit", "--weights", "-6,10,15", "--certificates")
    assert code == 0
    assert env["result"]["verdict"] == "excluded_all_candidates"
    assert env["result"]["certificates_valid"] is True
    assert len(env["result"]["certificates"]) == env["result"]["candidate_count"] > 0


def test_audit_dimension_two():
    code, env = run_json("audit", "--weights", "-1,1")
    assert code == 0
    assert env["result"]["verdict"] == "dimension_two_orbifold"
    assert env["result"]["details"]["N"] == 2


def test_audit_counterexample_exit_4(monkeypatch):
    def fake(_A):
        return AuditReport(WeightVector((-1, 2, 3)), WeightVector((-1, 2, 3)), None, "counterexample_candidate")

    monkeypatch.setattr(cli, "audit", fake)
    assert run("audit", "--weights", "-1,2,3")[0] == 4


def test_internal_error_exit_3(monkeypatch):
    def boom(_A):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "audit", boom)
    assert run("audit", "--weights", "-1,2,3")[0] == 3


# ---- scan ------------------------------------------------------------------------------


def test_scan_csv_stdout_and_stable():
    code, text = run("scan", "--n", "3", "--alpha-max", "10")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "weights;gamma0;diophantine;rhm;codim1_chain;nondegenerate;ratio_ok;verdict;first_obstruction"
    assert len(lines) == 1 + 327
    assert not any("counterexample" in ln for ln in lines)
    assert run("scan", "--n", "3", "--alpha-max", "10")[1] == text


def test_scan_csv_file_byte_identical(tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    run("scan", "--alpha-max", "9", "--csv", str(p1))
    run("scan", "--alpha-max", "9", "--csv", str(p2), "--jobs", "2")
    assert p1.read_bytes() == p2.read_bytes()


def test_scan_check_fixture():
    code, env = run_json("scan", "--alpha-max", "10", "--check-fixture")
    assert code == 0 and env["result"]["fixture"] == "match"
    assert env["result"]["summary"]["diophantine_passing"] == 3


def test_scan_bad_n():
    assert run("scan", "--n", "1", "--alpha-max", "5")[0] == 2


# ---- verify-paper -------------------------------------------------------------------


def test_verify_paper_text():
    code, text = run("verify-paper", "--bound", "40")
    assert code == 0
    rows = dict(line.rsplit(" : ", 1) for line in text.splitlines())
    rows = {k.strip(): v for k, v in rows.items()}
    assert rows["gamma0(1,1,1) = 3/8"] == "PASS"
    assert rows["Type III Molien closed form l=2..5"] == "PASS"
    assert rows["mod-4 scan: 8 solutions, all even"] == "PASS"
    assert rows["all"] == "PASS"


def test_verify_paper_failure_exit_1(monkeypatch, capsys):
    monkeypatch.setattr(cli, "paper_checks", lambda bound: [CheckResult("anchor x", False, "")])
    assert run("verify-paper")[0] == 1
    assert "anchor x" in capsys.readouterr().err


# ---- output formats ----------------------------------------------------------------


@pytest.mark.parametrize("argv", [
    ("analyze", "--weights", "-6,10,15"),
    ("analyze", "--weights", "-3,6,12,4"),
    ("group", "--type", "II", "--m", "2", "--molien"),
    ("audit", "--weights", "-6,10,15"),
    ("catalog", "--order", "12"),
])
def test_text_and_json_carry_the_same_values(argv):
    _, text = run(*argv)
    _, env = run_json(*argv)
    assert cli.parse_text(text) == dict(cli.flatten(env))


def test_output_is_deterministic_without_timing():
    a = run("analyze", "--weights", "-6,10,15", "--format", "json")[1]
    b = run("analyze", "--weights", "-6,10,15", "--format", "json")[1]
    assert a == b and "timing_ms" not in a
    _, env = run_json("analyze", "--weights", "-6,10,15", "--timing")
    assert "timing_ms" in env


def test_no_floats_in_json():
    _, env = run_json("group", "--type", "III'", "--m", "3", "--ell", "1", "--molien")

    def walk(v):
        if isinstance(v, float):
            raise AssertionError(v)
        if isinstance(v, dict):
            for x in v.values():
                walk(x)
        if isinstance(v, list):
            for x in v:
                walk(x)

    walk(env)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "circquot", "audit", "--weights", "-1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert 'result.verdict: "dimension_two_orbifold"' in proc.stdout
