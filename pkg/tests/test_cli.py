import json
from pathlib import Path

import jsonschema
import pytest

from symhilb.cli import main
from symhilb.elimination import QuadricSystem
from symhilb.hilbert import final_system_cached
from symhilb.partitions import schur_dim
from symhilb.repro import CriterionResult

DOCS = Path(__file__).resolve().parent.parent / "docs"


def validate(doc, schema_name):
    schema = json.loads((DOCS / schema_name).read_text())
    jsonschema.validate(doc, schema)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--lambda", "3,1", "--d", "3")
    assert code == 0 and out.strip() == "15"
    code, out, _ = run(capsys, "dims", "--lambda", "3,1", "--d", "3",
                       "--format", "json")
    assert json.loads(out) == {"schema": "symhilb-dim/1", "lambda": [3, 1],
                               "d": 3, "dim": 15}


def test_lr_table(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "1,1", "--mu", "2", "--d", "4")
    assert code == 0
    assert out.splitlines() == ["3,1: 1", "2,1,1: 1", "dimension 60"]


def test_plethysm_json(capsys):
    code, out, _ = run(capsys, "plethysm", "--r", "2", "--lambda", "3,1",
                       "--d", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "symhilb-expansion/1"
    assert set(doc["terms"]) == {"6,2", "5,2,1", "4,4", "4,3,1", "4,2,2"}
    total = sum(m * schur_dim(tuple(int(x) for x in key.split(",")), 3)
                for key, m in doc["terms"].items())
    assert total == 120


def test_equations(capsys):
    code, out, _ = run(capsys, "equations", "--d", "3")
    assert code == 0
    assert out.splitlines()[-1] == "36 generators in 24 variables"
    code, out, _ = run(capsys, "equations", "--d", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "symhilb-generators/1"
    assert len(doc["generators"]) == 36
    assert len(doc["variables"]) == 24
    labels = [g["label"] for g in doc["generators"]]
    assert len(set(labels)) == 36
    assert all(g["terms"] for g in doc["generators"])


def test_eliminate(capsys, tmp_path):
    code, out, _ = run(capsys, "eliminate", "--d", "3", "--check-pivots")
    assert code == 0
    assert "pivot independence at d=3: ok" in out
    assert "15 quadrics in 15 variables" in out

    target = tmp_path / "system.json"
    code, out, _ = run(capsys, "eliminate", "--d", "3", "--out", str(target))
    assert code == 0 and f"wrote {target}" in out
    doc = json.loads(target.read_text())
    validate(doc, "quadric_system.schema.json")
    system = QuadricSystem.load(str(target))
    assert system.to_json_dict() == final_system_cached(3).to_json_dict()


def test_hilbert_csv(capsys):
    code, out, _ = run(capsys, "hilbert", "--d", "3", "--rmax", "3",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["r,h", "0,1", "1,15", "2,105", "3,490"]


def test_hilbert_from_system_file(capsys, tmp_path):
    target = tmp_path / "system.json"
    run(capsys, "eliminate", "--d", "3", "--out", str(target))
    code, out, _ = run(capsys, "hilbert", "--system", str(target),
                       "--rmax", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "symhilb-hilbert/1"
    assert doc["values"] == {"0": "1", "1": "15", "2": "105"} or \
        doc["values"] == {"0": 1, "1": 15, "2": 105}


def test_hilbert_single_degree_one_prime(capsys):
    code, out, _ = run(capsys, "hilbert", "--d", "3", "--r", "2",
                       "--prime", "999983")
    assert code == 0 and out.strip() == "H(2) = 105"


def test_hilbert_budget_refusal(capsys):
    code, _, err = run(capsys, "hilbert", "--d", "3", "--r", "9")
    assert code == 1
    assert err.startswith("error:")


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--d", "3", "--r", "2", "--k", "1")
    assert code == 0 and out.strip() == "d=3 r=2 k=1: bound 60"
    code, out, _ = run(capsys, "bound", "--d", "3", "--r", "2",
                       "--format", "json")
    doc = json.loads(out)
    assert doc["bounds"] == {"0": 75, "1": 60, "2": 0}
    assert doc["best"] == 75 and doc["best_k"] == 0


def test_reducibility(capsys):
    code, out, _ = run(capsys, "reducibility", "--d", "13", "--trials", "2",
                       "--seed", "5")
    assert code == 0
    assert "STRICT, 193 > 182" in out
    assert "random members: 2/2 verified" in out
    code, out, _ = run(capsys, "reducibility", "--d", "12")
    assert code == 0 and "BOUNDARY, 156 = 156" in out


def test_reducibility_json_deterministic(capsys):
    argv = ("reducibility", "--d", "13", "--trials", "1", "--seed", "5",
            "--format", "json")
    code, first, _ = run(capsys, *argv)
    assert code == 0
    _, second, _ = run(capsys, *argv)
    assert first == second
    doc = json.loads(first)
    assert doc["schema"] == "symhilb-reducibility/1"
    assert doc["verdict"] == "STRICT"
    assert doc["family_dim"] == 193 and doc["radical_dim"] == 182
    assert doc["trials"] == {"count": 1, "ok": 1}
    assert doc["family"]["c"] == 5


def test_pluecker(capsys):
    code, out, _ = run(capsys, "pluecker")
    assert code == 0 and out.strip() == "15 quadrics in 15 variables"
    code, out, _ = run(capsys, "pluecker", "--rmax", "2")
    assert code == 0
    assert out.splitlines() == ["H(0) = 1", "H(1) = 15", "H(2) = 105"]


def test_repro_report_shape(capsys, monkeypatch):
    fake = [CriterionResult(1, "dimension formulas", True, 0.01, "all agree"),
            CriterionResult(2, "decompositions", False, 0.02, "mismatch")]
    monkeypatch.setattr("symhilb.cli.run_all",
                        lambda seed, extended, threads=1: fake)
    code, out, _ = run(capsys, "repro", "--format", "json")
    assert code == 1  # one criterion failed
    doc = json.loads(out)
    validate(doc, "report.schema.json")
    assert doc["ok"] is False
    assert [c["id"] for c in doc["criteria"]] == [1, 2]

    code, out, _ = run(capsys, "repro")
    assert code == 1
    assert "| pass" in out and "| FAIL" in out
    assert "2. decompositions: mismatch" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["dims", "--lambda", "1,3", "--d", "3"])
    assert exc.value.code == 2
