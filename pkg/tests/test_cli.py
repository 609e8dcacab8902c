import json
import subprocess
import sys
from pathlib import Path

import pytest

from polygrade.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_quantize_text(capsys):
    code, out, _ = run(capsys, "quantize", "--max", "5")
    assert code == 0
    rows = [tuple(map(int, line.split())) for line in out.splitlines()[1:]]
    assert [r[-1] for r in rows] == [7, 5, 9, 7, 13, 5, 9, 13]


def test_quantize_json_is_deterministic(capsys):
    _, first, _ = run(capsys, "quantize", "--max", "6", "--format", "json")
    _, second, _ = run(capsys, "quantize", "--max", "6", "--format", "json")
    assert first == second
    assert json.loads(first)["max"] == 6


def test_group_cayley(capsys):
    code, out, _ = run(capsys, "group-cayley", "--N", "2", "--arity", "3", "--shift", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["table"] == [1, 0, 0, 1, 0, 1, 1, 0]


def test_group_check_compose(capsys):
    code, out, _ = run(capsys, "group-check", "--group", DATA / "nonderived_ternary.json", "--compose", "2",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["identities"] == [] and doc["derivedness"]["gcd"] == 2
    assert doc["composed"]["affine_shift"] == 0 and doc["composed"]["arity"] == 5


@pytest.mark.parametrize("argv, expected", [
    (["grade-check", "--algebra", DATA / "grassmann_ternary.json"], 0),
    (["grade-strong", "--algebra", DATA / "grassmann_ternary.json"], 1),
    (["grade-strong", "--algebra", DATA / "strong_ternary.json"], 0),
    (["grade-strong", "--algebra", DATA / "broken_strong.json"], 1),
    (["grade-higher", "--algebra", DATA / "five_ary.json", "--grading-group", DATA / "ct5_law.json"], 0),
    (["grade-higher", "--algebra", DATA / "strong_ternary.json", "--ell-n", "2", "--compose", "2", "--strong"], 0),
    (["blockshift-verify", "--cases", "200"], 0),
    (["zring-check", "--ring", DATA / "ring_4_7.json"], 0),
    (["zring-check", "--a", "1", "--b", "2", "--m-add", "2", "--n-mul", "2"], 1),
    (["poly-grade", "--poly", DATA / "p6.json", "--ring", DATA / "ring_4_7.json"], 0),
    (["poly-grade"], 0),
    (["hom-check", "--hom", DATA / "even_hom_c5.json", "--source", DATA / "grassmann_ternary.json"], 0),
    (["hom-check", "--hom", DATA / "phi_not.json", "--source", DATA / "grassmann_ternary.json"], 1),
    (["paper-suite"], 0),
])
def test_exit_codes(capsys, argv, expected):
    code, _, _ = run(capsys, *argv)
    assert code == expected


@pytest.mark.parametrize("argv", [
    ["grade-check", "--algebra", "/nonexistent.json"],
    ["grade-higher", "--algebra", DATA / "five_ary.json"],
    ["group-cayley"],
    ["zring-check", "--a", "5", "--b", "3", "--m-add", "2", "--n-mul", "2"],
    ["no-such-command"],
    ["group-cayley", "--N", "9", "--arity", "9", "--budget", "100"],
])
def test_malformed_input_exits_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_malformed_json_file(capsys, tmp_path):
    bad = tmp_path / "alg.json"
    bad.write_text('{"basis": ["u"], "mul_arity": 3')
    code, _, err = run(capsys, "grade-check", "--algebra", bad)
    assert code == 2 and "alg.json" in err


def test_zring_json(capsys):
    _, out, _ = run(capsys, "zring-check", "--a", "2", "--b", "3", "--m-add", "4", "--n-mul", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["valid"] and doc["I"] == "2" and doc["J"] == "2"
    assert doc["minimal_arities"]["m_add"] == 4 and doc["minimal_arities"]["n_mul"] == 3


def test_suite_json_golden(capsys):
    _, first, _ = run(capsys, "paper-suite", "--format", "json")
    _, second, _ = run(capsys, "paper-suite", "--format", "json")
    assert first == second
    doc = json.loads(first)
    assert doc["ok"] and all(item["ok"] for item in doc["items"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polygrade", "quantize", "--max", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].split()[0] == "ell_gp"
