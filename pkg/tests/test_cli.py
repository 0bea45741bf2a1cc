from __future__ import annotations

import json
import subprocess
import sys

import pytest

from affzz.cli import SUITES, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_rho(capsys):
    code, out, _ = run(capsys, "matrix", "--rep", "aks", "--n", "4", "--word", "r")
    assert code == 0
    assert json.loads(out)["matrix"] == [["0", "0", "0", "s^-1"], ["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"]]


def test_matrix_table(capsys):
    code, out, _ = run(capsys, "matrix", "--rep", "rh", "--n", "3", "--word", "r", "--format", "table")
    assert code == 0 and len(out.strip().splitlines()) == 3


def test_identify_relation(capsys):
    code, out, _ = run(capsys, "identify", "--n", "4", "--word", "s1 s2 s1 s2^-1 s1^-1 s2^-1")
    assert code == 0 and out.strip() == '{"verdict":"identity"}'


def test_identify_two_words(capsys):
    code, out, _ = run(capsys, "identify", "--n", "4", "--word", "s1 s2 s1", "--word2", "s2 s1 s2")
    assert json.loads(out)["verdict"] == "identity"


def test_hom_and_itri_agree(capsys):
    _, out, _ = run(capsys, "hom", "--n", "4", "--word", "s2 r^-1", "--k", "3", "--l", "1")
    hom = json.loads(out)["poincare"]
    _, out, _ = run(capsys, "itri", "--n", "4", "--word", "s2 r^-1", "--k", "3", "--l", "1")
    assert json.loads(out)["itri"] == hom


def test_complex_command(capsys):
    code, out, _ = run(capsys, "complex", "--n", "3", "--word", "s1", "--l", "1")
    assert code == 0
    assert json.loads(out)["summands"] == [{"vertex": 1, "coh": -1, "g1": 1, "g3": 0}]


@pytest.mark.parametrize("word", ["s9", "x1", "s1^2"])
def test_parse_errors_exit_2(capsys, word):
    code, _, err = run(capsys, "matrix", "--n", "3", "--word", word)
    assert code == 2 and "error" in json.loads(err)


def test_bad_index_exit_2(capsys):
    code, _, _ = run(capsys, "hom", "--n", "3", "--word", "s1", "--k", "7")
    assert code == 2


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_small(capsys, suite):
    code, out, _ = run(capsys, "check", "--suite", suite, "--n", "3", "--maxlen", "2")
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass" and report["cases"] > 0


def test_homs_vs_itri_example(capsys):
    code, out, _ = run(capsys, "check", "--suite", "homs-vs-itri", "--n", "3", "--maxlen", "3")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_suite_failure_reports_counterexample(capsys, monkeypatch):
    import affzz.cli as cli

    monkeypatch.setitem(cli.SUITE_BUILDERS, "central", lambda cfg: [lambda: None, lambda: {"word": "r"}])
    code, out, _ = run(capsys, "check", "--suite", "central", "--n", "3")
    report = json.loads(out)
    assert code == 1 and report["counterexample"] == {"word": "r"}


def test_output_is_byte_identical(monkeypatch):
    cmd = [sys.executable, "-m", "affzz.cli", "itri", "--n", "4", "--word", "s1 r s3^-1", "--k", "2", "--l", "3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    monkeypatch.setenv("AFFZZ_THREADS", "3")
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_threads_do_not_change_reports(capsys, monkeypatch):
    _, a, _ = run(capsys, "check", "--suite", "decat", "--n", "4", "--maxlen", "5", "--seed", "3")
    monkeypatch.setenv("AFFZZ_THREADS", "4")
    _, b, _ = run(capsys, "check", "--suite", "decat", "--n", "4", "--maxlen", "5", "--seed", "3")
    assert a == b
