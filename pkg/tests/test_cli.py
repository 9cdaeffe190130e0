import json

import pytest

from normloc.cli import main

SQUARE = {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]}
REEVE = {"vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 3]]}
TRI_P = {"vertices": [[165, 0], [175, 0], [0, 385]]}
TRI_Q = {"vertices": [[0, 0], [35, 0], [0, 77]]}
QUADRANT = {"vertices": [[0, 0]], "rays": [[1, 0], [0, 1]]}
SEG1 = {"vertices": [[0], [1]]}
SEG2 = {"vertices": [[0], [2]]}
GRADING = {"weights": [[4, 1], [2, 1], [1, 2], [1, 3]]}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


def test_normal_check(files, capsys):
    sq = files("sq.json", SQUARE)
    code, rep = run(capsys, "normal-check", "--input", sq, "--s-max", "3")
    assert code == 0
    assert rep["command"] == "normal-check"
    assert rep["verdict"] == "verified_up_to"
    assert rep["checked"] == {"s_max": 3}
    reeve = files("reeve.json", REEVE)
    code, rep = run(capsys, "normal-check", "--input", reeve)
    assert code == 1
    assert rep["witness"] == {"point": [1, 1, 1], "kind": "normality_failure",
                              "scale": 2}


def test_located_check(files, capsys):
    p, q = files("p.json", TRI_P), files("q.json", TRI_Q)
    code, rep = run(capsys, "located-check", "--input", p, "--input", q)
    assert code == 1
    assert rep["verdict"] == "not_located"
    assert rep["witness"]["point"] == [1, 383]
    quad = files("quad.json", QUADRANT)
    code, rep = run(capsys, "located-check", "--input", quad, "--input", quad,
                    "--window", "0..5,0..5")
    assert code == 0
    assert rep["verdict"] == "verified_up_to"
    assert rep["checked"]["window"] == [[0, 0], [5, 5]]


def test_normal_fan_and_refine(files, capsys):
    p = files("p.json", TRI_P)
    code, rep = run(capsys, "normal-fan", "--input", p)
    assert code == 0
    assert len(rep["fan"]["maximal_cones"]) == 3
    sq = files("sq.json", SQUARE)
    both = files("both.json",
                 {"vertices": [[0, 0], [2, 0], [0, 2], [2, 1], [1, 2]]})
    code, rep = run(capsys, "refine-check", "--input", both, "--input", sq)
    assert code == 0 and rep["refines"] is True
    code, rep = run(capsys, "refine-check", "--input", sq, "--input", both)
    assert code == 1 and rep["refines"] is False


def test_gitfan_and_fiber(files, capsys):
    g = files("g.json", GRADING)
    code, rep = run(capsys, "gitfan", "--input", g)
    assert code == 0
    assert rep["fan_verified"] is True
    assert len(rep["git_cones"]) == 3
    code, rep = run(capsys, "fiber", "--input", g, "--u", "4,2")
    assert code == 0
    assert rep["fiber"]["dim"] == 4
    assert ["0", "2", "0", "0"] in rep["fiber"]["vertices"]


def test_realize(files, capsys):
    a, b = files("a.json", SEG1), files("b.json", SEG2)
    code, rep = run(capsys, "realize", "--input", a, "--input", b)
    assert code == 0
    assert rep["u1"] == [2, -1] and rep["u2"] == [3, -1]
    assert rep["projection"]["weights"] == [[1, -1], [1, 0], [0, 1]]


def test_p3_and_mcrit_search(files, capsys):
    g = files("g.json", GRADING)
    code, rep = run(capsys, "p3-search", "--input", g,
                    "--u1", "2,1", "--u2", "1,2", "--k-max", "2",
                    "--s-max", "2")
    assert code == 1
    assert rep["verdict"] == "exhausted"
    assert rep["checked"]["failures"] == [[1, 2, [1, 0, 1, 1]],
                                          [2, 1, [1, 0, 1, 1]]]
    reeve = files("reeve.json", REEVE)
    code, rep = run(capsys, "mcrit-search", "--input", reeve, "--input",
                    reeve, "--k-max", "2", "--s-max", "2")
    assert code == 0
    assert rep["verdict"] == "verified_up_to" and rep["checked"]["k"] == 2


def test_builtin_cases(files, capsys):
    code, rep = run(capsys, "paper-counterexample")
    assert code == 1
    assert rep["k"] == 1 and rep["witness"]["point"] == [1, 383]
    code, rep = run(capsys, "paper-counterexample", "--k", "2")
    assert code == 1 and rep["witness"]["point"] == [1, 768]
    code, rep = run(capsys, "paper-oldex")
    assert code == 0 and rep["verdict"] == "located"
    code, rep = run(capsys, "paper-oldex", "--s", "2")
    assert code == 1 and rep["witness"]["point"] == [1, 0, 1, 1]


def test_output_is_deterministic_and_seed_echoed(files, capsys):
    p, q = files("p.json", TRI_P), files("q.json", TRI_Q)
    argv = ("located-check", "--input", p, "--input", q, "--seed", "7")
    main(list(argv))
    first = capsys.readouterr().out
    main(list(argv))
    assert capsys.readouterr().out == first
    assert json.loads(first)["seed"] == 7
    # compact separators, sorted keys
    assert '"checked":' in first and ": " not in first.split("\n")[0]


def test_error_exits(files, capsys, tmp_path):
    sq = files("sq.json", SQUARE)
    assert main(["normal-check", "--input", "/no/such/file.json"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert main(["normal-check", "--input", str(bad)]) == 2
    assert main(["located-check", "--input", sq]) == 2   # needs two inputs
    assert main(["no-such-command"]) == 2
    assert main(["located-check", "--input", sq, "--input", sq,
                 "--window", "oops"]) == 2
    assert main(["fiber", "--input", sq, "--u", "1,1"]) == 2  # not a grading
    capsys.readouterr()
