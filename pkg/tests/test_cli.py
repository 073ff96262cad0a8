"""Command-line interface: exit codes, output format, determinism."""

import json
import subprocess
import sys

import pytest

from rank1lie.cli import main, parse_algebra, LEMMA_IDS


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_algebra_accepts_all_families():
    assert parse_algebra("so(1,2)") == ("so", 2)
    assert parse_algebra("su(1,13)") == ("su", 13)
    assert parse_algebra(" sp(1,4) ") == ("sp", 4)
    assert parse_algebra("f4") == ("f4", 1)


@pytest.mark.parametrize("bad", ["so(2,3)", "sl(1,2)", "su(1,1)", "su(1,0)",
                                 "f5", "so(1,)", "so(1,2) extra", ""])
def test_parse_algebra_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_algebra(bad)


def test_construct_so12(capsys):
    code, out, _ = _run(["construct", "--algebra", "so(1,2)"], capsys)
    assert code == 0
    assert "dim: 3" in out
    assert "killing signature: (2, 1)" in out
    assert "positive definite" in out


def test_construct_f4(capsys):
    code, out, _ = _run(["construct", "--algebra", "f4"], capsys)
    assert code == 0
    assert "dim: 52" in out
    assert "killing signature: (16, 36)" in out


@pytest.mark.slow
def test_construct_sp19_dim_210(capsys):
    code, out, _ = _run(["construct", "--algebra", "sp(1,9)"], capsys)
    assert code == 0
    assert "dim: 210" in out


def test_construct_usage_error(capsys):
    code, _, err = _run(["construct", "--algebra", "so(7)"], capsys)
    assert code == 2
    assert "cannot parse" in err


def test_verify_single_lemma_json(capsys):
    code, out, _ = _run(["verify", "--algebra", "su(1,2)", "--lemma",
                         "transversality", "--trials", "5"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["all_pass"] is True
    assert data["algebra"] == "su(1,2)"
    [rep] = data["lemmas"]
    assert rep["lemma_id"] == "transversality"
    assert rep["trials"] == 5 and rep["passes"] == 5


def test_verify_trials_zero_is_vacuous_pass(capsys):
    code, out, _ = _run(["verify", "--algebra", "su(1,2)", "--lemma",
                         "transversality", "--trials", "0"], capsys)
    assert code == 0
    data = json.loads(out)
    [rep] = data["lemmas"]
    assert rep["trials"] == 0 and rep["passes"] == 0
    assert rep["failures"] == []


def test_verify_inapplicable_lemma_is_skipped(capsys):
    code, out, _ = _run(["verify", "--algebra", "so(1,2)", "--lemma",
                         "m1-identity"], capsys)
    assert code == 0
    data = json.loads(out)
    [rep] = data["lemmas"]
    assert rep["skipped"] is True
    assert rep["failures"] == []


def test_verify_signature_j0_for_f4(capsys):
    code, out, _ = _run(["verify", "--algebra", "f4", "--lemma",
                         "signature-J0"], capsys)
    assert code == 0
    data = json.loads(out)
    [rep] = data["lemmas"]
    assert rep["parameters"]["sig26"] == [10, 16, 0]


def test_verify_text_format(capsys):
    code, out, _ = _run(["verify", "--algebra", "so(1,3)", "--lemma",
                         "root-table", "--format", "text"], capsys)
    assert code == 0
    assert "root-table" in out
    assert "pass" in out
    assert "result: all pass" in out


def test_verify_reports_failures_with_exit_1(capsys):
    # the double-root bracket span for su is a alone; the catalogued
    # a + m1 equality honestly fails there
    code, out, _ = _run(["verify", "--algebra", "su(1,2)", "--lemma",
                         "bracket-identities"], capsys)
    assert code == 1
    data = json.loads(out)
    assert data["all_pass"] is False
    [rep] = data["lemmas"]
    assert [f["check"] for f in rep["failures"]] == [
        "double-bracket-is-a-plus-m1"]


def test_verify_full_catalog_order_and_exit(capsys):
    code, out, _ = _run(["verify", "--algebra", "so(1,2)", "--lemma", "all",
                         "--trials", "3"], capsys)
    assert code == 0
    data = json.loads(out)
    assert [r["lemma_id"] for r in data["lemmas"]] == LEMMA_IDS


def test_verify_byte_identical_across_runs_and_workers(capsys, monkeypatch):
    args = ["verify", "--algebra", "sp(1,2)", "--lemma", "all", "--seed",
            "7"]
    code1, out1, _ = _run(args, capsys)
    code2, out2, _ = _run(args, capsys)
    assert out1 == out2
    assert code1 == code2 == 1  # the sp abelian witness target is out of
    # reach (found k-1), reported honestly
    monkeypatch.setenv("RANK1_THREADS", "8")
    _, out3, _ = _run(args, capsys)
    assert out3 == out1
    monkeypatch.setenv("RANK1_THREADS", "1")
    _, out4, _ = _run(args, capsys)
    assert out4 == out1
    data = json.loads(out1)
    fails = [f for r in data["lemmas"] for f in r["failures"]]
    assert [f["check"] for f in fails] == ["witness-dim-target"]


def test_cli_subprocess_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "rank1lie.cli", "construct", "--algebra",
         "su(1,2)"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "dim: 8" in proc.stdout


def test_unknown_lemma_is_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "rank1lie.cli", "verify", "--algebra",
         "su(1,2)", "--lemma", "nonsense"], capture_output=True, text=True)
    assert proc.returncode == 2
