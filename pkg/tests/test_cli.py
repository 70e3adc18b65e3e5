import csv
import io
import json
import subprocess
import sys

import pytest

from distlang import cli
from distlang.automata import equivalent
from distlang.distinguish import InvariantViolation
from distlang.doc import parse_doc, write_doc, write_words
from distlang.experiment import CSV_HEADER
from distlang.minwords import dist_min
from distlang.witnesses import EXAMPLE_SUFF, EXAMPLE_SUFF_D, universal


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fig3_left(tmp_path):
    path = tmp_path / "fig3_left"
    write_doc(EXAMPLE_SUFF, path)
    return str(path)


def test_dist_from_document(capsys, fig3_left):
    code, out, _ = run(capsys, "dist", fig3_left, "--kind", "left", "--out", "doc")
    assert code == 0
    first, rest = out.split("\n", 1)
    assert first == "sc 2"
    assert equivalent(parse_doc(rest), EXAMPLE_SUFF_D)


def test_dist_iterate(capsys):
    code, out, _ = run(capsys, "dist", "witness:example_3_7", "--iterate")
    assert code == 0
    assert out.splitlines() == [
        "stage 0: sc 9  dist_min {ε, 0, 1, 01, 11}",
        "stage 1: sc 7  dist_min {ε, 1, 01, 11}",
        "stage 2: sc 4  dist_min {ε, 1, 11}",
        "fixed point index 2",
    ]


def test_dist_right_and_dot(capsys):
    code, out, _ = run(capsys, "dist", "witness:example_8_1", "--kind", "right", "--out", "dot")
    assert code == 0
    assert out.startswith("sc 4\ndigraph")


def test_dist_min(capsys):
    code, out, _ = run(capsys, "dist-min", "witness:universal_Un:5")
    assert code == 0
    assert out.splitlines() == ["{ε, a, aa, aaa}", "size 4", "bound sc-1 = 4: ok"]
    code, out, _ = run(capsys, "dist-min", "witness:suffix_Wm:2", "--chain")
    assert "steps 3" in out
    code, out, _ = run(capsys, "dist-min", "witness:example_8_1", "--kind", "right")
    assert code == 0 and "size" in out


def test_report_universal_language(capsys):
    code, out, _ = run(capsys, "report", "regex:(0+1)*")
    assert code == 0
    assert "state_complexity: 1" in out
    assert "left: empty, fixed point False" in out


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "--json", "witness:universal_Un:4")
    assert code == 0
    data = json.loads(out)
    assert data["state_complexity"] == 4 and not data["has_empty_quotient"]
    assert data["dist"]["left"] == {"empty": False, "state_complexity": 12, "fixed_point": False}


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "universal_Un", "4")
    assert out == "universal_Un n=4: 4 states over a, b, c\n"
    code, out, _ = run(capsys, "witness", "universal_Un", "4", "--emit", "doc")
    assert parse_doc(out) == universal(4)
    code, _, err = run(capsys, "witness", "universal_Un", "1")
    assert code == cli.EXIT_INVALID and "parameter >= 2" in err


def test_learn(capsys, tmp_path):
    oracle = tmp_path / "u4"
    write_doc(universal(4), oracle)
    words = tmp_path / "dmin"
    write_words(dist_min(universal(4)), universal(4).symbol_names, words)
    code, out, _ = run(capsys, "learn", "--dmin", str(words), "--oracle", str(oracle), "--check")
    assert code == 0
    assert "states 4" in out and "cover check ok" in out and "d 2" in out

    write_words([(), (0,)], universal(4).symbol_names, words)
    code, out, err = run(capsys, "learn", "--dmin", str(words), "--oracle", str(oracle), "--check")
    assert code == cli.EXIT_INVALID
    assert "cover check FAILED" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "witness:example_3_7", "--depth", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert sum(line.startswith("PASS") for line in lines) == 9
    assert "SKIP D by quotients: sc 9 above product limit 6" in lines
    code, out, _ = run(capsys, "verify", "witness:example_3_7", "--depth", "4", "--product-limit", "9")
    assert code == 0 and all(line.startswith("PASS") for line in out.splitlines())


def test_experiment(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, _, _ = run(capsys, "experiment", "paper-tables", "--max-n", "8", "--seed", "3", "--out", str(target))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(target.read_text())))
    assert tuple(rows[0]) == CSV_HEADER
    by_key = {(r["family"], r["n"]): r for r in rows}
    assert by_key[("universal_Un", "8")]["sc_D"] == "248"
    assert by_key[("suffix_complexity_family", "8")]["sc_D"] == "128"
    assert by_key[("example_3_7", "")]["sc_D"] == "7"
    assert by_key[("example_8_1", "")]["sc_E"] == "4"
    assert sum(r["family"].startswith("random:") for r in rows) == 10
    code, out, _ = run(capsys, "experiment", "paper-tables", "--max-n", "4", "--seed", "3")
    assert out.splitlines()[0] == ",".join(CSV_HEADER)


def test_exit_codes(capsys, tmp_path, monkeypatch):
    code, _, err = run(capsys, "report", str(tmp_path / "missing"))
    assert code == cli.EXIT_IO
    bad = tmp_path / "bad"
    bad.write_text("kind dfa\n")
    code, _, err = run(capsys, "report", str(bad))
    assert code == cli.EXIT_INVALID and "missing" in err
    code, _, err = run(capsys, "report", "regex:(0")
    assert code == cli.EXIT_INVALID and "position" in err
    code, _, _ = run(capsys, "report", "witness:nope")
    assert code == cli.EXIT_INVALID

    def broken(*args, **kwargs):
        raise InvariantViolation("simulated")

    monkeypatch.setattr(cli, "dist", broken)
    code, _, err = run(capsys, "dist", "witness:example_3_6")
    assert code == cli.EXIT_INTERNAL and "simulated" in err


def test_regex_alphabet_option(capsys):
    code, out, _ = run(capsys, "--alphabet", "ab", "dist", "regex:(a+b)*a", "--kind", "right")
    assert code == 0 and out == "sc 1\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "distlang", "witness", "suffix_Wm", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "suffix_Wm n=2: 5 states over 0, 1"
