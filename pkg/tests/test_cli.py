import json

from perbeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_witness_text(capsys):
    code, out, _ = run(capsys, "witness", "--minpoly", "3,2,3", "--n", "6")
    assert code == 0
    assert "b^3 - b^1" in out


def test_witness_json_with_negative_coefficients(capsys):
    code, out, _ = run(capsys, "witness", "--minpoly", "-1,-1,1", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["i"] == 3


def test_descending_input(capsys):
    code, out, _ = run(capsys, "witness", "--minpoly", "1,-1,-1", "--descending", "--n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["minpoly"] == [-1, -1, 1]


def test_represent_then_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "represent", "--minpoly", "-1,-1,1", "--target", "1/2")
    assert code == 0
    payload = json.loads(out)
    assert payload["period"] == [0, 0, 1]
    path = tmp_path / "rep.json"
    path.write_text(out)
    assert run(capsys, "verify", "--minpoly", "-1,-1,1", "--rep", str(path), "--expected", "1/2")[0] == 0
    code, out, _ = run(capsys, "verify", "--minpoly", "-1,-1,1", "--rep", str(path), "--expected", "-1/3")
    assert code == 2 and "MISMATCH" in out


def test_represent_field_element(capsys):
    code, out, _ = run(capsys, "represent", "--minpoly", "-1,-1,1", "--target", "1/3,-2/5", "--format", "text")
    assert code == 0 and "digit bound" in out


def test_bad_inputs_exit_one(capsys, tmp_path):
    assert run(capsys, "witness", "--minpoly", "3,2,3", "--n", "1")[0] == 1
    assert run(capsys, "witness", "--minpoly", "5", "--n", "3")[0] == 1
    assert run(capsys, "represent", "--minpoly", "-1,-1,1", "--target", "x")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{bad")
    assert run(capsys, "verify", "--minpoly", "-1,-1,1", "--rep", str(bad), "--expected", "1")[0] == 1
    try:
        main(["witness"])
    except SystemExit as exc:
        assert exc.code == 1


def test_graph_budget_and_output(capsys, tmp_path):
    out_file = tmp_path / "g.dot"
    assert run(capsys, "graph", "--minpoly", "3,2,3", "--n", "6", "--out", str(out_file))[0] == 0
    assert out_file.read_text().startswith("digraph")
    assert run(capsys, "graph", "--minpoly", "3,2,3", "--n", "200")[0] == 5


def test_search_failure_exit_three(capsys, monkeypatch):
    monkeypatch.setenv("PERBETA_BUDGET", "3")
    assert run(capsys, "witness", "--minpoly", "-1,-1,0,1", "--n", "47", "--method", "graph")[0] == 3


def test_check_base(capsys):
    code, out, _ = run(capsys, "check-base", "--minpoly", "3,2,3")
    assert code == 0 and "UNIT-FRACTIONS-ONLY" in out
    code, out, _ = run(capsys, "check-base", "--minpoly", "-1,-1,1")
    assert "class: FULL" in out
