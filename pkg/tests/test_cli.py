import json
from pathlib import Path

import pytest

from mcat.cli import main

DOCS = Path(__file__).resolve().parent.parent / "descriptions"
CORRUPT = str(DOCS / "z2_seq_corrupt.table.json")
CLEAN = str(DOCS / "z2_seq.table.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fixture_listing(capsys):
    code, out, _ = run(capsys, "--fixtures")
    assert code == 0 and "FS2x" in out


def test_no_command(capsys):
    assert run(capsys)[0] == 2


def test_validate_pass(capsys):
    code, out, _ = run(capsys, "validate", "W")
    assert code == 0 and "pass" in out


def test_validate_counterexample_structured(capsys):
    code, out, _ = run(capsys, "--format", "structured", "validate", CORRUPT)
    assert code == 1
    doc = json.loads(out)
    assert doc["schema"] == "mcat-report/1"
    assert doc["exit_code"] == 1
    assert doc["report"]["outcome"] == "counterexample"
    assert doc["replay"]["law"]


def test_witness_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "--format", "structured", "validate", CORRUPT)
    report = tmp_path / "r.json"
    report.write_text(out)
    assert run(capsys, "validate", CORRUPT, "--check-witness", str(report))[0] == 1
    assert run(capsys, "validate", CLEAN, "--check-witness", str(report))[0] == 0


def test_check_witness_needs_counterexample(capsys, tmp_path):
    _, out, _ = run(capsys, "--format", "structured", "validate", "W")
    report = tmp_path / "r.json"
    report.write_text(out)
    assert run(capsys, "validate", "W", "--check-witness", str(report))[0] == 2


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "category",\n "objects": [}')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "validate", "nope")[0] == 2
    assert run(capsys, "theorem", "no-such-theorem")[0] == 2


def test_budget_exhaustion(capsys):
    code, out, _ = run(capsys, "--budget-enum", "2", "construct", "N")
    assert code == 3 and "EXHAUSTED" in out.upper()


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("MCAT_BUDGET", "1,1,2")
    assert run(capsys, "construct", "N")[0] == 3
    monkeypatch.setenv("MCAT_BUDGET", "2,2,100")
    assert run(capsys, "construct", "N")[0] == 0


def test_construct_counts(capsys):
    code, out, _ = run(capsys, "--format", "structured", "--budget-arity", "2", "construct", "W")
    table = json.loads(out)["report"]["details"]["hom cardinalities"]
    assert code == 0
    assert table["(a, a; b)"] == 1


def test_theorem_text(capsys):
    code, out, _ = run(capsys, "theorem", "frobenius")
    assert code == 0 and "frobenius" in out


def test_theorem_with_inputs(capsys):
    assert run(capsys, "theorem", "char-equivalences", "W-")[0] == 0


def test_hom_and_monoids(capsys):
    assert run(capsys, "--budget-arity", "2", "hom", "I", "W")[0] == 0
    assert run(capsys, "--budget-arity", "2", "hom", "W", "Z2", "--exp", "seq")[0] == 0
    code, out, _ = run(capsys, "--format", "structured", "monoids", "FS2x")
    assert code == 0 and json.loads(out)["report"]["details"]["count"] == 5


def test_products(capsys):
    code, out, _ = run(capsys, "--format", "structured", "products", "FS2x", "--family", "1,2")
    assert code == 0
    assert json.loads(out)["report"]["details"]["witnesses"]["(1, 2)"] is not None
    assert run(capsys, "products", "FS2x", "--family", "7")[0] == 2


def test_models(capsys):
    code, out, _ = run(capsys, "--format", "structured", "models", "N", "--classes")
    d = json.loads(out)["report"]["details"]
    assert code == 0 and d["models"] == 5 and d["iso classes"] == 3


def test_structured_output_is_deterministic(capsys):
    first = run(capsys, "--format", "structured", "validate", CORRUPT)[1]
    second = run(capsys, "--format", "structured", "validate", CORRUPT)[1]
    assert first == second
