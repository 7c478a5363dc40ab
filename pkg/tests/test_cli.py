import json
import subprocess
import sys
from pathlib import Path

import pytest

from equivqp.cli import main

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_rotation(capsys):
    code, out, _ = run(capsys, "compute", PROBLEMS / "rotation_period_ten.json")
    assert code == 0
    assert "minimal period: 10" in out
    assert "n~_A: 5" in out and "n~_Gamma: 2" in out
    assert "period 5; r≡5: q^2 - 2*q + 5" in out
    assert "gcd-property: holds" in out


def test_compute_empty_swap(capsys):
    code, out, _ = run(capsys, "compute", PROBLEMS / "swap_empty.json")
    assert code == 0
    assert "class 2 (size 1, representative [[0, 1], [1, 0]]):\n  period 1; r≡1: q\n" in out


def test_compute_deterministic_and_threads(capsys):
    outs = [run(capsys, "compute", PROBLEMS / "braid_a2.json", "--threads", t)[1] for t in (1, 1, 3)]
    assert outs[0] == outs[1] == outs[2]


def test_json_roundtrip(capsys):
    for cmd in (["compute", PROBLEMS / "rotation_period_ten.json"],
                ["oracle", PROBLEMS / "three_lines_negation.json", "--q", 2],
                ["chambers", PROBLEMS / "swap_antidiagonal.json", "--q", 5],
                ["coxeter-a", 2, "--q-max", 4]):
        code, out, _ = run(capsys, *cmd, "--format", "json")
        assert code == 0
        assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out


def test_oracle_swap_q6(capsys):
    code, out, _ = run(capsys, "oracle", PROBLEMS / "swap_antidiagonal.json", "--q", 6, "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [(r["formula"], r["brute"], r["torsion"]) for r in rows] == [(30, 30, 30), (4, 4, 4)]


def test_oracle_three_lines_q2(capsys):
    code, out, _ = run(capsys, "oracle", PROBLEMS / "three_lines_negation.json", "--q", 2, "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and all(r["formula"] == r["brute"] == r["torsion"] == 0 for r in rows)


def test_oracle_budget(capsys):
    code, _, err = run(capsys, "oracle", PROBLEMS / "swap_antidiagonal.json", "--q", 1000, "--budget", 10 ** 4)
    assert code == 2 and "exceeds the budget" in err


def test_chambers(capsys):
    code, out, _ = run(capsys, "chambers", PROBLEMS / "rotation_period_ten.json", "--q", 6, "--format", "json")
    rep = json.loads(out)["reports"][0]
    assert code == 0 and rep["holds"]
    assert sorted((o["size"], o["isotropy_order"]) for o in rep["orbits"]) == [(1, 4), (4, 1)]
    code, out, _ = run(capsys, "chambers", PROBLEMS / "rotation_period_ten.json", "--q", 1)
    assert code == 0 and "identity holds" in out
    code, out, _ = run(capsys, "chambers", PROBLEMS / "swap_antidiagonal.json", "--q", 5)
    assert code == 0
    code, _, err = run(capsys, "chambers", PROBLEMS / "swap_empty.json", "--q", 3)
    assert code == 2 and "non-empty" in err


def test_coxeter_a(capsys):
    code, out, _ = run(capsys, "coxeter-a", 2, "--q-max", 12, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    ident = [r for r in data["rows"] if r["cycle_type"] == [1, 1, 1]]
    assert [r["engine"] for r in ident] == [(q - 1) * (q - 2) for q in range(1, 13)]
    code, out, _ = run(capsys, "coxeter-a", 1, "--q-max", 2, "--format", "json")
    assert [r["engine"] for r in json.loads(out)["rows"] if r["q"] == 2 and r["cycle_type"] == [2]] == [1]
    code, out, _ = run(capsys, "coxeter-a", 3, "--q-max", 12)
    assert code == 0 and "minimal period: 4" in out
    code, _, err = run(capsys, "coxeter-a", 9)
    assert code == 2 and "exceeds" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", 1, "--count", 4, "--q-max", 6)
    assert code == 0 and out.rstrip().endswith("all oracles agree")


@pytest.mark.parametrize("text,line,needle", [
    ('{"rank": 2,\n  "arrangement": [\n', 3, "malformed JSON"),
    ('[1, 2]', 1, "top level"),
    ('{\n  "arrangement": []\n}', 1, "missing required key 'rank'"),
    ('{\n  "rank": 2,\n  "arrangement": [[1, 0]],\n  "group_generators": [[[0, 1], [1, 0]]]\n}', 3, "not invariant"),
    ('{\n  "rank": 2,\n  "arrangement": [[1, 0, 0]]\n}', 3, "column 0"),
    ('{\n  "rank": 2,\n  "group_generators": [[[2, 0], [0, 1]]]\n}', 3, "not unimodular"),
    ('{\n  "rank": 2,\n  "arrangement": [[1, 1], [2, 2]]\n}', 3, "same hyperplane"),
    ('{\n  "rank": 2,\n  "group_generators": [[[0, 1], [1, 0]]],\n  "character_table": [[1, 1], [1, 1]]\n}', 4,
     "invalid character table"),
    ('{\n  "rank": 2,\n  "q_max": "ten"\n}', 3, "must be an integer"),
])
def test_validation_errors(tmp_path, capsys, text, line, needle):
    f = tmp_path / "p.json"
    f.write_text(text, encoding="utf-8")
    code, _, err = run(capsys, "compute", f)
    assert code == 2
    assert f"{f}:{line}:" in err and needle in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "compute", tmp_path / "nope.json")
    assert code == 2 and "cannot read" in err


def test_console_script_exit_code(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{", encoding="utf-8")
    r = subprocess.run([sys.executable, "-m", "equivqp.cli", "compute", str(f)], capture_output=True, text=True)
    assert r.returncode == 2
