import json

import pytest

from resatlas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_d4(capsys):
    code, out = run(capsys, "analyze", "1", "4", "4", "1")
    assert code == 0
    assert "D4" in out and "noetherian generic ring: True" in out
    assert "[6, 0, 0, 0]" in out


def test_analyze_invalid_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "1", "1", "1", "1"])
    assert exc.value.code == 2


def test_analyze_indefinite(capsys):
    code, out = run(capsys, "analyze", "2", "6", "7", "3", "--max-height", "8")
    assert code == 0
    assert "T_{3,3,4}" in out and "indefinite" in out
    assert "noetherian generic ring: False" in out


def test_json_output_and_determinism(capsys):
    code1, out1 = run(capsys, "roots", "--pqr", "3", "3", "2", "--json")
    code2, out2 = run(capsys, "roots", "--pqr", "3", "3", "2", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["count"] == 36 and payload["dim"] == 78


def test_defect_command(capsys):
    code, out = run(capsys, "defect", "--pqr", "2", "2", "3", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["dims"] == [12, 1, 0, 0]


def test_kostant_command(capsys):
    code, out = run(capsys, "kostant", "--pqr", "3", "3", "4", "--length", "2")
    assert code == 0
    assert "'z1': -3" in out


def test_bgg_check_pass_and_fail_codes(capsys):
    code, out = run(capsys, "bgg-check", "--pqr", "2", "2", "2", "--lam", "w:z1")
    assert code == 0 and "PASS" in out
    code2, _ = run(capsys, "bgg-check", "--pqr", "2", "2", "2", "--lam", "w:bogus")
    assert code2 == 2


def test_ra_decompose(capsys):
    code, out = run(capsys, "ra-decompose", "1", "4", "4", "1", "--cutoff", "4", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["count"] == 67


def test_rspec(capsys):
    code, out = run(capsys, "rspec", "1", "4", "4", "1", "--cutoff", "1", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["count"] == 5


def test_generators(capsys):
    code, out = run(capsys, "generators", "1", "4", "4", "1")
    assert code == 0 and "absent" in out


def test_kstar_check(capsys):
    code, out = run(capsys, "kstar-check", "1", "4", "4", "1", "--count", "3", "--seed", "4")
    assert code == 0 and "PASS" in out


def test_verify_commands(capsys):
    assert run(capsys, "verify-thm112", "--r3", "1")[0] == 0
    assert run(capsys, "verify-monomial", "--t", "2")[0] == 0
    code, out = run(capsys, "verify-d4")
    assert code == 0 and "eps_split" in out


def test_q1_command(capsys):
    code, out = run(capsys, "q1", "--format", "1", "4", "4", "1", "--I", "1,2", "--J", "3", "--K", "4")
    assert code == 0 and "D2_3_1*D2_4_2" in out


def test_q1_command_bad_indices(capsys):
    code = main(["q1", "--format", "1", "4", "4", "1", "--I", "1", "--J", "3", "--K", "4"])
    assert code == 2


def test_suite_json(capsys):
    code, out = run(capsys, "suite", "paper-checks", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert len(payload["results"]) == 14
    assert all(r["ok"] for r in payload["results"])


def test_suite_unknown_name(capsys):
    assert main(["suite", "nonsense"]) == 2


def test_budget_cap(capsys, monkeypatch):
    monkeypatch.setenv("RESATLAS_BUDGET_MS", "0")
    code, out = run(capsys, "suite", "paper-checks")
    assert code == 1
    assert "budget exceeded" in out
