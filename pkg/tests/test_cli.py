import json

import pytest

from crossedcat.abgroup import AbGroup
from crossedcat.cli import run
from crossedcat.cohomology import cochain_to_json

from instances import pointed_instances

TY_INSTANCES = [
    ["--group", "2", "--chi", "[[1/2]]", "--tau", "+"],
    ["--group", "3", "--chi", "[[1/3]]", "--tau", "-"],
    ["--group", "4", "--chi", "[[1/4]]", "--tau", "+"],
    ["--group", "2,2", "--chi", "[[0,1/2],[1/2,0]]", "--tau", "-"],
]


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(capsys, *argv):
    code, out, _ = invoke(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.fixture
def omega_file(tmp_path):
    w = pointed_instances(AbGroup((3,)))[1].omega
    path = tmp_path / "omega.json"
    path.write_text(json.dumps(cochain_to_json(w)))
    return str(path)


def test_pentagon_example(capsys):
    code, out, _ = invoke(capsys, "pentagon", "--ty", *TY_INSTANCES[0])
    assert code == 0 and "pentagon: True" in out


def test_no_braidings_on_z3(capsys):
    code, out, _ = invoke(capsys, "braidings", "--ty", *TY_INSTANCES[1][:4], "--tau", "+")
    assert code == 0 and "0 braidings" in out


def test_ising_report_totals(capsys):
    code, data = as_json(capsys, "ising-report")
    assert code == 0
    assert data["result"]["totals"] == {"fusion": 2, "braided": 8, "ribbon": 16}


@pytest.mark.parametrize("verb", ["braidings", "crossed-braidings", "relative-braidings", "ribbons"])
@pytest.mark.parametrize("inst", TY_INSTANCES, ids=lambda i: i[1])
def test_formula_and_brute_force_print_the_same_sets(capsys, verb, inst):
    c1, formula = as_json(capsys, verb, "--ty", *inst)
    c2, brute = as_json(capsys, verb, "--ty", *inst, "--brute-force")
    assert c1 == c2 == 0
    key = "entries" if verb == "ribbons" else "tables"
    assert json.dumps(formula["result"][key]) == json.dumps(brute["result"][key])


@pytest.mark.parametrize("verb", ["pentagon", "braidings", "crossed-braidings", "obstruction",
                                  "trivializations"])
def test_pointed_verbs(capsys, omega_file, verb):
    code, data = as_json(capsys, verb, "--pointed", "--group", "3", "--omega", omega_file)
    assert code == 0 and data["ok"]
    if verb == "obstruction":
        assert data["result"]["eta_exists"] and not data["result"]["class_vanishes"]
        assert data["result"]["engine_agrees"]


def test_pointed_braidings_both_paths(capsys):
    _, a = as_json(capsys, "braidings", "--pointed", "--group", "2,2")
    _, b = as_json(capsys, "braidings", "--pointed", "--group", "2,2", "--brute-force")
    assert a["result"]["count"] == 16
    assert a["result"]["tables"] == b["result"]["tables"]


def test_trivializations_on_ty(capsys):
    code, data = as_json(capsys, "trivializations", "--ty", *TY_INSTANCES[3])
    counts = {a["action"]: a["count"] for a in data["result"]["actions"]}
    assert code == 0 and counts == {"strict": 2, "non-strict": 0}
    code, data = as_json(capsys, "trivializations", "--ty", *TY_INSTANCES[1])
    assert code == 0 and data["result"]["trivializable"] is False


def test_output_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / f"r{i}.json" for i in range(2)]
    for p in paths:
        assert run(["crossed-braidings", "--ty", *TY_INSTANCES[3], "--json", "-o", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("argv", [
    ["explode", "--ty"],
    ["pentagon", "--ty", "--group", "2,x", "--chi", "[[1/2]]", "--tau", "+"],
    ["pentagon", "--ty", "--group", "2", "--chi", "[[0]]", "--tau", "+"],
    ["pentagon", "--ty", "--group", "2", "--chi", "[[1/2]", "--tau", "+"],
    ["pentagon", "--ty", "--group", "2", "--chi", "[[1/2]]", "--tau", "?"],
    ["pentagon", "--pointed", "--group", "2", "--omega", "/nonexistent/omega.json"],
    ["pentagon", "--group", "2"],
    ["relative-braidings", "--pointed", "--group", "2"],
])
def test_invalid_input_exits_2(capsys, argv):
    try:
        code = run(argv)
    except SystemExit as exc:  # argparse rejects unknown verbs itself
        code = exc.code
    assert code == 2
    assert capsys.readouterr().err


def test_non_cocycle_omega_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"group": [2], "coeff_order": 8, "entries": [
        {"args": [[1], [1], [1]], "value": {"order": 4, "exp": 1}}]}))
    code, _, err = invoke(capsys, "pentagon", "--pointed", "--group", "2", "--omega", str(path))
    assert code == 2 and "cocycle" in err

