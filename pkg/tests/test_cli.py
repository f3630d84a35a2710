"""Command-line interface: exit codes and stable JSON output."""

import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
SSETS = ROOT / "corpus" / "ssets"
MAPS = ROOT / "corpus" / "maps"
ITT = ROOT / "corpus" / "itt"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "ssetkit.cli", *args],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )


# -- exit codes -----------------------------------------------------------------


def test_sset_validates():
    r = run_cli("sset", str(SSETS / "triangle.sset"))
    assert r.returncode == 0
    assert "PASS" in r.stdout


def test_missing_file_is_usage_error():
    r = run_cli("sset", str(SSETS / "no_such_object.sset"))
    assert r.returncode == 2


def test_unknown_verb_is_usage_error():
    r = run_cli("frobnicate")
    assert r.returncode == 2


def test_bad_depth_is_usage_error():
    r = run_cli("sset", str(SSETS / "point.sset"), "--depth", "0")
    assert r.returncode == 2


def test_classify_collapse():
    r = run_cli("classify", str(MAPS / "interval_collapse.smap"))
    assert r.returncode == 0


def test_invert_non_invertible_edge_fails():
    r = run_cli("invert", str(SSETS / "interval.sset"), "--edge", "0_1")
    assert r.returncode == 1


def test_invert_unknown_edge_is_usage_error():
    r = run_cli("invert", str(SSETS / "interval.sset"), "--edge", "01")
    assert r.returncode == 2


def test_invert_groupoid_edge_passes():
    r = run_cli("invert", str(SSETS / "interval_groupoid_2.sset"), "--edge", "n_a__f")
    assert r.returncode == 0


def test_check_well_typed_program():
    r = run_cli("check", str(ITT / "good_unit_intro.itt"))
    assert r.returncode == 0


def test_check_ill_typed_program():
    r = run_cli("check", str(sorted(ITT.glob("bad_*.itt"))[0]))
    assert r.returncode == 1


def test_factor_completes():
    r = run_cli("factor", str(MAPS / "vertex_include.smap"), "--family", "inner")
    assert r.returncode == 0


def test_factor_budget_exhaustion_exit_code():
    r = run_cli("factor", str(MAPS / "vertex_include.smap"), "--family", "kan", "--budget", "0")
    assert r.returncode == 3


def test_core_and_lemma_verbs():
    assert run_cli("core", str(SSETS / "interval.sset")).returncode == 0
    assert run_cli("lemma6", str(SSETS / "point.sset")).returncode == 0


def test_leibniz_verb():
    r = run_cli(
        "leibniz",
        "--i", str(MAPS / "endpoints_include.smap"),
        "--j", str(MAPS / "endpoints_include.smap"),
    )
    assert r.returncode == 0


def test_quasifib_verb():
    r = run_cli("quasifib", str(MAPS / "interval_collapse.smap"), "--family", "inner")
    assert r.returncode == 0


def test_audit_verb():
    r = run_cli("audit", "--family", "kan", "--depth", "2")
    assert r.returncode == 0


# -- json output ------------------------------------------------------------------


def test_json_is_byte_identical_and_schema_tagged():
    a = run_cli("classify", str(MAPS / "interval_collapse.smap"), "--json")
    b = run_cli("classify", str(MAPS / "interval_collapse.smap"), "--json")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["schema"] == "ssetkit.cli/1"
    assert doc["verb"] == "classify"
    assert "depth" in doc and "budget" in doc


def test_check_json_reports_rule():
    path = str(ITT / "bad_conv_mismatch.itt")
    r = run_cli("check", path, "--json")
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    assert doc["ok"] is False
