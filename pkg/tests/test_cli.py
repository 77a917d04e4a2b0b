"""Command-line interface: exit codes, recipes, determinism."""

import json
import shutil
import subprocess

import pytest

from relpoisson.cli import main

from conftest import FIXTURES


def run_cli(*args, capsys=None):
    code = main(list(args))
    return code


def test_check_fixture_ok(capsys):
    assert main(["check", str(FIXTURES / "prepoisson_3d.json")]) == 0
    assert capsys.readouterr().out.strip() == "ok"


def test_check_json_report(capsys):
    assert main(["check", "--json", str(FIXTURES / "bialgebra_7d.json")]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"ok": True, "violations": [], "truncated": False}


def test_check_corrupted_fixture(tmp_path, capsys):
    doc = json.loads((FIXTURES / "bialgebra_7d.json").read_text())
    doc["bracket"] = [e for e in doc["bracket"] if e[:3] != [1, 2, 3]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["check", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "FAILED" in out and "antisymmetric" in out


def test_check_json_locates_defect(tmp_path, capsys):
    doc = json.loads((FIXTURES / "zinbiel_3d.json").read_text())
    doc["product"].append([1, 1, 1, "1"])
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["check", "--json", str(bad)]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert not payload["ok"]
    assert payload["violations"][0]["axiom"] == "zinbiel"


def test_check_zero_dimensional_structure(tmp_path, capsys):
    doc = tmp_path / "zero.json"
    doc.write_text('{"kind": "rel-poisson", "dim": 0, "basis": [], "dot": [], "bracket": [], "derivation": []}')
    assert main(["check", str(doc)]) == 0


def test_check_as_reinterprets_kind(capsys):
    # the Zinbiel table is not commutative, so it fails as a comm-assoc one
    assert main(["check", str(FIXTURES / "zinbiel_3d.json")]) == 0
    capsys.readouterr()
    assert main(["check", "--as", "comm-assoc", str(FIXTURES / "zinbiel_3d.json")]) == 1
    assert "commutative" in capsys.readouterr().out


def test_parse_error_exit_codes(tmp_path, capsys):
    missing = tmp_path / "missing.json"
    assert main(["check", str(missing)]) == 3
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    assert main(["check", str(garbled)]) == 3
    bad_scalar = tmp_path / "scalar.json"
    bad_scalar.write_text('{"kind": "comm-assoc", "dim": 1, "basis": ["e1"], "product": [[0, 0, 0, "1/0"]]}')
    assert main(["check", str(bad_scalar)]) == 3


def test_construct_chain(tmp_path, capsys):
    sub = tmp_path / "subadjacent.json"
    assert main(["construct", "subadjacent", str(FIXTURES / "prepoisson_3d.json"), "-o", str(sub)]) == 0
    doc = json.loads(sub.read_text())
    assert doc["kind"] == "rel-poisson"
    assert [0, 0, 2, "2"] in doc["dot"]  # e1.e1 = 2 e3
    extended = tmp_path / "extended.json"
    assert main(["construct", "extend-jacobi", str(sub), "-o", str(extended)]) == 0
    edoc = json.loads(extended.read_text())
    assert edoc["dim"] == 4 and edoc["basis"][0] == "e"
    assert [0, 0, 0, "1"] in edoc["dot"]  # the unit row
    assert main(["check", str(extended)]) == 0


def test_construct_subadjacent_accepts_zinbiel(tmp_path):
    out = tmp_path / "sub.json"
    assert main(["construct", "subadjacent", str(FIXTURES / "zinbiel_3d.json"), "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "rel-poisson" and [0, 0, 2, "2"] in doc["dot"]


def test_construct_bracket_from_derivation(tmp_path):
    source = tmp_path / "commassoc.json"
    source.write_text(
        json.dumps(
            {
                "kind": "comm-assoc",
                "dim": 2,
                "basis": ["x", "x2"],
                "product": [[0, 0, 1, "1"]],
                "derivation": [[0, 0, "1"], [1, 1, "2"]],
            }
        )
    )
    out = tmp_path / "poisson.json"
    assert main(["construct", "bracket-from-derivation", str(source), "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "rel-poisson" and doc["bracket"] == []
    assert main(["check", str(out)]) == 0


def test_construct_semidirect_and_o_operator_rmatrix(tmp_path):
    from relpoisson import subadjacent
    from relpoisson.documents import (
        doc_to_rel_pre_poisson,
        parse_document,
        representation_doc,
        serialize_document,
    )
    from relpoisson.linalg import LinearMap

    pp = doc_to_rel_pre_poisson(parse_document((FIXTURES / "prepoisson_3d.json").read_text()))
    _alg, rep = subadjacent(pp)
    rep_doc = representation_doc(rep, operator=LinearMap.identity(rep.space))
    source = tmp_path / "rep.json"
    source.write_text(serialize_document(rep_doc))
    assert main(["check", str(source)]) == 0

    semi = tmp_path / "semi.json"
    assert main(["construct", "semidirect", str(source), "-o", str(semi)]) == 0
    assert json.loads(semi.read_text())["dim"] == 6
    assert main(["check", str(semi)]) == 0

    rmat = tmp_path / "rmatrix.json"
    assert main(["construct", "o-operator-rmatrix", str(source), "-o", str(rmat)]) == 0
    doc = json.loads(rmat.read_text())
    assert doc["kind"] == "rmatrix" and doc["algebra"]["dim"] == 6
    assert main(["check", str(rmat)]) == 0


def test_construct_circ_from_derivation(tmp_path):
    out = tmp_path / "prepoisson.json"
    assert main(["construct", "circ-from-derivation", str(FIXTURES / "zinbiel_3d.json"), "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "rel-pre-poisson"
    golden = json.loads((FIXTURES / "prepoisson_3d.json").read_text())
    assert doc["circ"] == golden["circ"] and doc["star"] == golden["star"]


def test_construct_coboundary_zero_tensor(tmp_path):
    sub = tmp_path / "subadjacent.json"
    main(["construct", "subadjacent", str(FIXTURES / "prepoisson_3d.json"), "-o", str(sub)])
    rdoc = tmp_path / "rmatrix.json"
    rdoc.write_text(
        json.dumps({"kind": "rmatrix", "algebra": json.loads(sub.read_text()), "r": []})
    )
    out = tmp_path / "bialgebra.json"
    assert main(["construct", "coboundary", str(rdoc), "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "bialgebra"
    assert doc["dot_comult"] == [] and doc["bracket_comult"] == []
    assert main(["check", str(out)]) == 0


def test_construct_bowtie_and_dualize(tmp_path):
    out = tmp_path / "double.json"
    assert main(["construct", "bowtie", str(FIXTURES / "bialgebra_7d.json"), "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["dim"] == 14
    assert main(["check", str(out)]) == 0
    dual = tmp_path / "dual.json"
    assert main(["construct", "dualize", str(FIXTURES / "bialgebra_7d.json"), "-o", str(dual)]) == 0
    assert main(["check", str(dual)]) == 0


def test_construct_precondition_failure_exit_code(tmp_path, capsys):
    doc = json.loads((FIXTURES / "zinbiel_3d.json").read_text())
    doc["product"].append([1, 0, 2, "1"])  # still zinbiel but breaks the derivation
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["construct", "circ-from-derivation", str(bad)]) == 2


def test_pipeline_byte_identical_to_golden(tmp_path, capsys):
    out = tmp_path / "double.json"
    assert main(["pipeline", str(FIXTURES / "prepoisson_3d.json"), "-o", str(out)]) == 0
    stderr = capsys.readouterr().err
    assert "stage double: ok" in stderr
    assert out.read_bytes() == (FIXTURES / "golden_double_14d.json").read_bytes()
    # a second run produces identical bytes
    out2 = tmp_path / "double2.json"
    main(["pipeline", str(FIXTURES / "prepoisson_3d.json"), "-o", str(out2)])
    assert out2.read_bytes() == out.read_bytes()


def test_pipeline_zero_fixture(tmp_path):
    out = tmp_path / "six.json"
    assert main(["pipeline", str(FIXTURES / "prepoisson_zero_1d.json"), "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["dim"] == 6
    assert main(["check", str(out)]) == 0


def test_pipeline_json_mode(capsys):
    assert main(["pipeline", "--json", str(FIXTURES / "prepoisson_3d.json")]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert all(stage["ok"] for stage in payload["stages"])
    assert payload["document"]["dim"] == 14


def test_pipeline_malformed_input_exit_code(tmp_path):
    garbled = tmp_path / "garbled.json"
    garbled.write_text("]")
    assert main(["pipeline", str(garbled)]) == 3


def test_report_command(capsys):
    assert main(["report", str(FIXTURES / "bialgebra_7d.json")]) == 0
    out = capsys.readouterr().out
    assert "kind: bialgebra" in out and "unit" in out
    assert main(["report", "--json", str(FIXTURES / "prepoisson_3d.json")]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] and payload["dim"] == 3


def test_console_script_entry_point():
    exe = shutil.which("relpoisson")
    if exe is None:
        pytest.skip("console script not installed")
    proc = subprocess.run(
        [exe, "check", str(FIXTURES / "prepoisson_3d.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "ok"


def test_construct_rejects_mismatched_kind(tmp_path, capsys):
    # a recipe fed the wrong document kind must not silently read the
    # missing fields as zeros
    assert main(["construct", "bowtie", str(FIXTURES / "zinbiel_3d.json")]) == 3
    assert "expects a bialgebra document" in capsys.readouterr().err
    assert main(["construct", "extend-jacobi", str(FIXTURES / "prepoisson_3d.json")]) == 3
    assert main(["construct", "subadjacent", str(FIXTURES / "bialgebra_7d.json")]) == 3


def test_o_operator_rmatrix_with_explicit_maps(tmp_path):
    # writing beta and the dual map explicitly (equal to their defaults)
    # produces byte-identical output
    from relpoisson import subadjacent
    from relpoisson.documents import (
        doc_to_rel_pre_poisson,
        parse_document,
        representation_doc,
        serialize_document,
    )
    from relpoisson.documents import _entries_of_matrix
    from relpoisson.linalg import LinearMap, mat_neg

    pp = doc_to_rel_pre_poisson(parse_document((FIXTURES / "prepoisson_3d.json").read_text()))
    _alg, rep = subadjacent(pp)
    base = representation_doc(rep, operator=LinearMap.identity(rep.space))
    explicit = dict(base)
    explicit["beta"] = _entries_of_matrix(mat_neg(rep.der_action))
    explicit["dual_derivation"] = _entries_of_matrix(mat_neg(rep.algebra.derivation.entries))
    out = {}
    for tag, doc in (("default", base), ("explicit", explicit)):
        source = tmp_path / f"{tag}.json"
        source.write_text(serialize_document(doc))
        target = tmp_path / f"{tag}_r.json"
        assert main(["construct", "o-operator-rmatrix", str(source), "-o", str(target)]) == 0
        out[tag] = target.read_bytes()
    assert out["default"] == out["explicit"]
