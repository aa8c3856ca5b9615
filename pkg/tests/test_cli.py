import io
import json
import subprocess
import sys

import pytest

from polyface.cli import parse_params, run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_params():
    assert parse_params("3,6") == [3, 6]
    assert parse_params("") == []
    assert parse_params("3,6,0:1:2,2:3:4") == [3, 6, [[0, 1, 2], [2, 3, 4]]]


def test_fvector_both():
    code, out, _ = run("fvector", "--family", "uniform", "--params", "3,6", "--method", "both")
    doc = json.loads(out)
    assert code == 0
    assert doc["f_vector"] == doc["f_vector_oracle"] == ["20", "90", "120", "60", "12", "1"]
    assert doc["agree"] is True
    assert len(doc["f_vector"]) == doc["dimension"] + 1
    for key in ("n", "rank", "components", "dimension", "method", "lambda", "mu", "split", "unimodal",
                "log_concave", "timing"):
        assert key in doc


def test_fvector_csv():
    code, out, _ = run("fvector", "--family", "rank2", "--params", "1,1,2", "--csv")
    assert code == 0
    assert out.splitlines() == ["dimension,faces", "0,5", "1,8", "2,5", "3,1"]


def test_fvector_decimal_strings_are_exact():
    code, out, _ = run("fvector", "--family", "pg23")
    values = json.loads(out)["f_vector"]
    assert code == 0 and all(isinstance(x, str) for x in values)
    assert [int(x) for x in values][:6] == [234, 2808, 12870, 31707, 49608, 54054]


def test_invariants_pg23():
    code, out, _ = run("invariants", "--family", "pg23")
    doc = json.loads(out)
    assert code == 0
    assert doc["lambda"] == {"2,4": 13} and doc["mu"] == {"1,1,3,3": 78}
    assert doc["split"] is True and doc["certificate"] is None


def test_malformed_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run("fvector", "--input", str(bad))
    assert code == 2 and "malformed" in err


def test_usage_errors(tmp_path):
    assert run("fvector")[0] == 2
    assert run("fvector", "--family", "uniform", "--params", "x")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("fvector", "--family", "uniform", "--params", "7,6")[0] == 2
    assert run("fvector", "--input", str(tmp_path / "missing.json"))[0] == 2


def test_oracle_refusal():
    code, _, err = run("fvector", "--family", "uniform", "--params", "2,12", "--method", "oracle")
    assert code == 1 and "refused" in err


def test_non_split_refusal(tmp_path):
    from test_matroid import non_split_example

    m, _, _ = non_split_example()
    path = tmp_path / "ns.json"
    path.write_text(json.dumps({"n": m.n, "bases": m.basis_lists()}))
    code, _, err = run("fvector", "--input", str(path))
    assert code == 1 and "not split" in err
    code, out, _ = run("invariants", "--input", str(path))
    assert code == 0 and json.loads(out)["split"] is False


def test_compare_agrees(tmp_path):
    path = tmp_path / "n2.json"
    path.write_text(json.dumps({"family": "sparse_paving", "params": [3, 6, [[0, 1, 2], [2, 3, 4]]]}))
    code, out, _ = run("compare", "--input", str(path))
    assert code == 0 and json.loads(out)["f_vector"] == ["18", "72", "101", "59", "14", "1"]


def test_compare_mismatch_exit(monkeypatch):
    import polyface.cli as cli
    from polyface.poly import FPolynomial

    monkeypatch.setattr(cli, "matroid_f", lambda m: FPolynomial((3, 3, 1)))
    code, _, _ = run("compare", "--family", "uniform", "--params", "1,2")
    assert code == 3


def test_check():
    code, out, _ = run("check", "--family", "schubert", "--params", "2,3,3,6", "--log-concave")
    doc = json.loads(out)
    assert code == 0 and doc["log_concave"] is True and "unimodal" not in doc
    code, out, _ = run("check", "--family", "uniform", "--params", "2,5", "--method", "oracle")
    assert json.loads(out)["unimodal"] is True


def test_catalog_list():
    code, out, _ = run("catalog", "list")
    names = [line.split("\t")[0] for line in out.splitlines()]
    assert code == 0 and "schubert" in names and "direct_sum" in names


def test_batch_keeps_input_order(tmp_path):
    specs = {
        "a.json": {"family": "uniform", "params": [3, 6]},
        "b.json": {"family": "rank2", "params": [2, 2]},
        "c.json": {"family": "schubert", "params": [1, 2, 2, 4]},
        "d.json": {"family": "pg23", "params": []},
    }
    for name, obj in specs.items():
        (tmp_path / name).write_text(json.dumps(obj))
    code, out, _ = run("batch", "--dir", str(tmp_path), "--jobs", "4")
    docs = json.loads(out)
    assert code == 0
    assert [d["file"] for d in docs] == sorted(specs)
    assert docs[1]["f_vector"] == ["4", "4", "1"]


def test_batch_reports_bad_files(tmp_path):
    (tmp_path / "a.json").write_text(json.dumps({"family": "uniform", "params": [1, 3]}))
    (tmp_path / "b.json").write_text("nope")
    code, out, _ = run("batch", "--dir", str(tmp_path), "--method", "both")
    docs = json.loads(out)
    assert code == 2 and docs[0]["agree"] is True and "error" in docs[1]


@pytest.mark.parametrize("argv", [["catalog", "list"], ["fvector", "--family", "uniform", "--params", "1,3"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, "-m", "polyface", *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout
