import json

from geninv.cli import main
from geninv.fixtures import COMP_A, NT_A, NT_B, SIN_A, SIN_B
from geninv.io import (load_matrix, matrix_to_document,
                       parse_matrix_document)


def _write(tmp_path, name, M):
    path = tmp_path / name
    path.write_text(json.dumps(matrix_to_document(M)))
    return str(path)


def test_document_round_trip():
    for M in (COMP_A, NT_A, SIN_A):
        doc = matrix_to_document(M, name="m")
        assert parse_matrix_document(doc) == M
    doc = matrix_to_document(COMP_A)
    assert doc["field"] == "Qi"
    assert doc["rows"][0][0] == "19-4i"


def test_cmd_decompose(tmp_path, capsys):
    path = _write(tmp_path, "a.json", COMP_A)
    assert main(["--json", "decompose", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["index"] == {"endomorphism": 3, "matrix": 3}
    assert payload["r"] == 2
    assert payload["chain_lengths"] == [3]
    assert main(["decompose", path]) == 0
    text = capsys.readouterr().out
    assert "chain lengths = [3]" in text


def test_cmd_decompose_zero_matrix(tmp_path, capsys):
    from geninv import GF, Matrix
    path = _write(tmp_path, "z.json", Matrix.zeros(GF(3), 2, 2))
    assert main(["--json", "decompose", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["r"] == 0 and payload["chain_lengths"] == [1, 1]


def test_cmd_family(tmp_path, capsys):
    path = _write(tmp_path, "a.json", COMP_A)
    assert main(["--json", "family", path, "--kind", "gd1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["param_count"] == 6
    assert main(["--json", "family", path, "--kind", "1gd"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["param_count"] == 6


def test_cmd_family_params(tmp_path, capsys):
    path = _write(tmp_path, "a.json", SIN_A)
    assert main(["--json", "family", path, "--kind", "gd1",
                 "--params", "zero"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["members"][0]["rows"] == [["1/2", "0"], ["0", "0"]]
    # explicit assignment file
    pfile = tmp_path / "params.json"
    pfile.write_text(json.dumps({"a[1,2]": "7"}))
    assert main(["--json", "family", str(path), "--kind", "gd1",
                 "--params", str(pfile)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["members"][0]["rows"] == [["1/2", "7"], ["0", "0"]]
    # seeded random members are reproducible
    outs = []
    for _ in range(2):
        assert main(["--json", "family", str(path), "--kind", "gd1",
                     "--params", "random:9"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_cmd_family_enumerate(tmp_path, capsys):
    from geninv import GF, Matrix
    A = Matrix.from_ints(GF(2), [[1, 0], [0, 0]])
    path = _write(tmp_path, "a2.json", A)
    assert main(["--json", "family", path, "--kind", "gd1",
                 "--enumerate"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["param_count"] == 1
    assert len(payload["members"]) == 2


def test_cmd_check(tmp_path, capsys):
    pa = _write(tmp_path, "sa.json", SIN_A)
    pb = _write(tmp_path, "sb.json", SIN_B)
    assert main(["--json", "check", pa, pb, "--relation", "gd1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["holds"] is True and payload["witness"] is not None
    na = _write(tmp_path, "na.json", NT_A)
    nb = _write(tmp_path, "nb.json", NT_B)
    assert main(["check", na, nb, "--relation", "1gd"]) == 0
    capsys.readouterr()
    from geninv import Matrix, QQ
    I = Matrix.identity(QQ, 2)
    pi = _write(tmp_path, "i.json", I)
    p2i = _write(tmp_path, "2i.json", I + I)
    assert main(["check", pi, p2i, "--relation", "minus"]) == 1
    capsys.readouterr()


def test_cmd_verify(tmp_path, capsys):
    from geninv import Matrix, QQ, inverse
    pb = _write(tmp_path, "b.json", SIN_B)
    pbi = _write(tmp_path, "bi.json", inverse(SIN_B))
    assert main(["verify", pb, pbi, "--kind", "gd1"]) == 0
    capsys.readouterr()
    pa = _write(tmp_path, "a.json", SIN_A)
    assert main(["verify", pa, pbi, "--kind", "gd1"]) == 1
    capsys.readouterr()
    pz = _write(tmp_path, "z.json", Matrix.zeros(QQ, 2, 2))
    assert main(["--json", "verify", pa, pz, "--kind", "one"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["failed_identity"] == "AXA != A"


def test_cmd_paper_examples(capsys):
    assert main(["paper-examples", "--list"]) == 0
    out = capsys.readouterr().out
    assert "comp-gd1-family" in out
    assert main(["paper-examples"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_error_exit_codes(tmp_path, capsys):
    missing = str(tmp_path / "missing.json")
    assert main(["decompose", missing]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["decompose", str(bad)]) == 2
    capsys.readouterr()
    nonsquare = tmp_path / "ns.json"
    nonsquare.write_text(json.dumps({"field": "Q", "rows": [["1", "2"]]}))
    assert main(["decompose", str(nonsquare)]) == 2
    capsys.readouterr()
    mismatched = tmp_path / "m.json"
    mismatched.write_text(json.dumps({"field": "Fp", "p": 3,
                                      "rows": [["1", "0"], ["0", "1"]]}))
    pa = _write(tmp_path, "sa.json", SIN_A)
    assert main(["check", pa, str(mismatched), "--relation", "minus"]) == 2
    capsys.readouterr()


def test_outputs_are_valid_inputs(tmp_path, capsys):
    path = _write(tmp_path, "a.json", SIN_A)
    assert main(["--json", "family", path, "--kind", "gd1",
                 "--params", "zero"]) == 0
    payload = json.loads(capsys.readouterr().out)
    member = parse_matrix_document(payload["members"][0])
    back = tmp_path / "member.json"
    back.write_text(json.dumps(matrix_to_document(member)))
    assert load_matrix(str(back)) == member
    pa = _write(tmp_path, "sa2.json", SIN_A)
    assert main(["verify", pa, str(back), "--kind", "gd1"]) == 0
    capsys.readouterr()
