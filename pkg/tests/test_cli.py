import json
import math
import subprocess
import sys

import pytest

from sidigraph.cli import main


@pytest.fixture
def c4(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("4\n0 1 +\n1 2 +\n2 3 +\n3 0 -\n")
    return str(path)


@pytest.fixture
def p3(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("3\n0 1 +\n1 2 -\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_negative_c4(capsys, c4):
    code, out, _ = run(capsys, "analyze", c4)
    assert code == 0
    report = json.loads(out)
    assert report["charpoly"]["coefficients"] == [1, 0, 0, 0, 1]
    assert abs(report["energy"]["algebraic"]["energy"] - 2 * math.sqrt(2)) < 1e-9
    assert abs(report["energy"]["coulson"]["energy"] - 2 * math.sqrt(2)) < 1e-4
    assert report["balance"] == {"balanced": False, "cycle": [0, 1, 2, 3]}
    assert report["zero_energy_class"]["tag"] == "NonZero"
    assert report["bounds"]["arcs"] == 4 and not report["bounds"]["arc_bound_attained"]
    assert report["closed_walk_balance"]["4"] == -4


def test_analyze_acyclic(capsys, p3):
    code, out, _ = run(capsys, "analyze", p3)
    report = json.loads(out)
    assert code == 0
    assert report["energy"]["algebraic"]["energy"] == 0.0
    assert report["zero_energy_class"]["tag"] == "Acyclic"


def test_analyze_text(capsys, c4):
    code, out, _ = run(capsys, "analyze", c4, "--format", "text")
    assert code == 0 and "charpoly x^4 + 1" in out and "negative cycle [0, 1, 2, 3]" in out


def test_analyze_skew_log_form_skipped(capsys, tmp_path):
    path = tmp_path / "skew.txt"
    path.write_text("3\n0 1 +\n1 0 -\n0 2 +\n2 0 -\n")
    code, out, _ = run(capsys, "analyze", str(path))
    report = json.loads(out)
    assert code == 0
    assert "skipped" in report["energy"]["coulson-log"]


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in err


def test_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n0 1 +\n0 1 -\n")
    code, _, err = run(capsys, "energy", str(path))
    assert code == 2 and "duplicate" in err


def test_unknown_method(capsys, c4):
    code, _, _ = run(capsys, "energy", c4, "--methods", "magic")
    assert code == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["reproduce", "9"])
    assert info.value.code == 2


def test_energy_methods(capsys, c4):
    code, out, _ = run(capsys, "energy", c4, "--methods", "algebraic,coulson-log")
    data = json.loads(out)["energy"]
    assert code == 0 and set(data) == {"algebraic", "coulson-log"}


def test_charpoly_routes(capsys, c4):
    for method in ("auto", "enumerate", "trace"):
        code, out, _ = run(capsys, "charpoly", c4, "--method", method)
        assert code == 0 and json.loads(out)["text"] == "x^4 + 1"
    code, out, _ = run(capsys, "charpoly", c4, "--census", "--format", "text")
    assert out.strip() == "x^4 + 1"


def test_charpoly_cap(capsys, c4):
    code, _, err = run(capsys, "charpoly", c4, "--method", "enumerate", "--cap", "3")
    assert code == 2 and "cap" in err


def test_balance(capsys, c4, tmp_path):
    code, out, _ = run(capsys, "balance", c4, "--format", "text")
    assert code == 0 and out.strip() == "unbalanced; negative cycle 0 -> 1 -> 2 -> 3"
    path = tmp_path / "pos.txt"
    path.write_text("2\n0 1 -\n1 0 -\n")
    code, out, _ = run(capsys, "balance", str(path))
    assert json.loads(out) == {"balanced": True, "potential": [1, -1]}


def test_neps(capsys, tmp_path):
    digon = tmp_path / "k2.txt"
    digon.write_text("2\n0 1 +\n1 0 +\n")
    tri = tmp_path / "c3.txt"
    tri.write_text("3\n0 1 -\n1 2 -\n2 0 -\n")
    code, out, _ = run(capsys, "neps", str(tri), str(digon), "--basis", "10,01", "--check-balance")
    data = json.loads(out)
    assert code == 0 and data["graph"]["n"] == 6 and data["balanced"] is False
    code, out, _ = run(capsys, "neps", str(tri), str(tri.parent / "k2.txt"), "--basis", "kronecker", "--format", "text")
    assert out.splitlines()[0] == "6"
    code, _, _ = run(capsys, "neps", str(tri), str(digon), "--basis", "00")
    assert code == 2
    code, _, _ = run(capsys, "neps", str(tri), str(digon), "--basis", "1x")
    assert code == 2


def test_pair(capsys):
    code, out, _ = run(capsys, "pair", "4", "cycle-k2")
    data = json.loads(out)
    assert code == 0 and data["report"]["verified"]
    assert data["first"]["n"] == 8
    code, _, _ = run(capsys, "pair", "4", "odd-cycles")
    assert code == 2


def test_reproduce_section(capsys):
    code, out, _ = run(capsys, "reproduce", "6", "--format", "text")
    assert code == 0 and "FAIL" not in out and "cycle-k2 n=10" in out


def test_corpus(capsys):
    code, out, _ = run(capsys, "corpus", "--seed", "42", "--count", "40", "--properties", "bounds,walk")
    data = json.loads(out)
    assert code == 0 and data["total_violations"] == 0
    assert set(data["properties"]) == {"mcclelland", "arc-bound", "schur", "walk"}


def test_corpus_empty_and_bad(capsys):
    code, out, _ = run(capsys, "corpus", "--count", "0")
    assert code == 0 and json.loads(out)["total_violations"] == 0
    code, _, _ = run(capsys, "corpus", "--arc-density", "0")
    assert code == 2
    code, _, _ = run(capsys, "corpus", "--properties", "unknown")
    assert code == 2


def test_json_output_is_byte_identical(c4):
    cmd = [sys.executable, "-m", "sidigraph", "corpus", "--seed", "3", "--count", "25", "--search", "energy-equals-n"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    cmd = [sys.executable, "-m", "sidigraph", "analyze", c4]
    assert subprocess.run(cmd, capture_output=True).stdout == subprocess.run(cmd, capture_output=True).stdout


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("2\n0 1 +\n1 0 +\n"))
    code, out, _ = run(capsys, "energy", "-")
    assert code == 0 and abs(json.loads(out)["energy"]["algebraic"]["energy"] - 2) < 1e-9
