"""The command line: verify, suite, construct, list; exit codes 0/1/2."""

import json
import subprocess
import sys

import pytest

from entwiner.cli import main
from entwiner.entwine import EntwiningData
from entwiner.serial import parse


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_passing_instance(capsys):
    code, out, _ = run(capsys, "verify", "mult_twist@Kx2-1,q=1")
    assert code == 0
    assert "verdict: PASS" in out


def test_verify_failing_instance(capsys):
    code, out, _ = run(capsys, "verify", "mult_twist@Kx3,q=1/2")
    assert code == 1
    assert "[FAIL]" in out
    assert "witness=" in out
    assert "verdict: FAIL" in out


def test_verify_over_prime_field(capsys):
    code, out, _ = run(capsys, "verify", "--field", "fp:7", "mult_twist@Kx3,q=1/2")
    assert code == 1


def test_verify_check_selector(capsys):
    code, _, _ = run(capsys, "verify", "--check", "braid", "corrupt:module@Kx3")
    assert code == 1
    code, _, _ = run(capsys, "verify", "--check", "braid", "mult_twist@Kx2-1,q=1")
    assert code == 0
    # corruption that happens to preserve both axiom families still passes
    code, _, _ = run(capsys, "verify", "--check", "braid", "corrupt:mult_twist@Kx2-1,q=1")
    assert code == 0


def test_verify_misspelled_check_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--check", "briad", "mult_twist@Kx2-1,q=1")
    assert code == 2
    assert "briad" in err
    assert "braid" in err  # the known names are listed


def test_verify_unknown_instance_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "nonsense@foo")
    assert code == 2
    assert err


def test_verify_json_output(capsys):
    code, out, _ = run(capsys, "verify", "--json", "mult_twist@Kx3,q=1/2")
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False
    assert any(not c["passed"] for c in doc["checks"])


def test_verify_file_target(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "mult_twist", "Kx2-1", "1")
    assert code == 0
    p = tmp_path / "gamma.json"
    p.write_text(out)
    code, out2, _ = run(capsys, "verify", f"{p}:psi")
    assert code == 0
    assert "verdict: PASS" in out2
    code, _, err = run(capsys, "verify", "--field", "fp:7", f"{p}:psi")
    assert code == 2
    assert "field" in err


def test_verify_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "no_such_file.json:psi")
    assert code == 2
    assert err


def test_suite_single_row(capsys):
    code, out, _ = run(capsys, "suite", "--grid", "twists")
    assert code == 0
    assert "row twists: PASS" in out
    assert "total:" in out


def test_suite_grid_file(capsys, tmp_path):
    p = tmp_path / "grid.json"
    p.write_text(json.dumps({"rows": ["twists", "biproduct"]}))
    code, out, _ = run(capsys, "suite", "--grid", str(p))
    assert code == 0
    assert "row twists: PASS" in out
    assert "row biproduct: PASS" in out


def test_suite_unknown_row_is_usage_error(capsys):
    code, _, err = run(capsys, "suite", "--grid", "twsits")
    assert code == 2
    assert "twsits" in err


def test_suite_bad_field_is_usage_error(capsys):
    code, _, err = run(capsys, "suite", "--field", "fp:6", "--grid", "twists")
    assert code == 2


def test_suite_json(capsys):
    code, out, _ = run(capsys, "suite", "--json", "--grid", "twists,biproduct")
    assert code == 0
    doc = json.loads(out)
    assert doc["field"] == "q"
    assert [r["suite"] for r in doc["rows"]] == ["twists", "biproduct"]
    assert all(r["passed"] for r in doc["rows"])


def test_suite_output_deterministic_across_jobs(capsys):
    _, one, _ = run(capsys, "suite", "--grid", "twists,biproduct", "--jobs", "1")
    _, two, _ = run(capsys, "suite", "--grid", "twists,biproduct", "--jobs", "2")
    assert one == two


def test_construct_emits_canonical_file(capsys):
    code, out, _ = run(capsys, "construct", "comm_twist", "M2", "1")
    assert code == 0
    sf = parse(out)
    assert sf.order == ["A-space", "A", "psi"]
    e = sf["psi"]
    assert isinstance(e, EntwiningData)
    from entwiner.serial import emit

    assert emit(sf) == out


def test_construct_biproduct_rejects_bad_integral(capsys):
    code, out, _ = run(
        capsys, "construct", "biproduct", "KZ2", "mult_twist@KZ2,q=1", "0:1"
    )
    assert code == 1
    assert "construction precondition failed" in out
    assert "[FAIL]" in out


def test_construct_type2_on_noncommutative_fails_with_report(capsys):
    code, out, _ = run(capsys, "construct", "type2", "M2", "1", "1")
    assert code == 1
    assert "construction precondition failed" in out


def test_construct_action_entwining_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "action", "module@Kx3")
    assert code == 0
    p = tmp_path / "act.json"
    p.write_text(out)
    code, out2, _ = run(capsys, "construct", "entwining", f"{p}:action")
    assert code == 0
    sf = parse(out2)
    from entwiner.fields import QQ
    from entwiner.registry import resolve_instance

    original = resolve_instance("module@Kx3", QQ)
    assert sf["psi"].psi.rows == original.psi.rows


def test_construct_unknown_template_is_usage_error(capsys):
    code, _, err = run(capsys, "construct", "wormhole")
    assert code == 2
    assert err


def test_list_sections(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    for section in ("algebras", "coalgebras", "instances", "checks", "constructions", "suite-rows"):
        assert section in out


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "--json")
    assert code == 0
    doc = json.loads(out)
    assert "mult_twist@Kx2-1,q=1" in doc["instances"]
    assert "twists" in doc["suite-rows"]


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "entwiner.cli", "verify", "quad@p=1,q=2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "verdict: PASS" in proc.stdout
