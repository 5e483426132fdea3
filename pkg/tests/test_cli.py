import json
import subprocess
import sys

import pytest

from hopfforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_nf(capsys):
    assert run(capsys, "nf", "--algebra", "C:m=2", "g*y") == (0, "y*g + g^2 - g", "")


def test_find_sub(capsys):
    code, out, _ = run(capsys, "find-sub", "--algebra", "E:n=1", "--g", "x0", "--y", "y")
    assert (code, out) == (0, "f = y, xi = -1, beta = 0")
    code, out, _ = run(capsys, "find-sub", "--algebra", "C:m=2", "--g", "g", "--y", "y", "--json")
    assert json.loads(out)["beta"] == "1"


def test_gk_json(capsys):
    code, out, _ = run(capsys, "gk", "--algebra", "A:b=1,xi=2", "--N", "16", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["degree"] == 2 and doc["dims"][:3] == [4, 9, 16]
    code, out, _ = run(capsys, "gk", "--algebra", "A:b=1,xi=2", "--gens", "g,g^-1,y", "--N", "3", "--csv")
    assert out.splitlines() == ["n,dim", "1,4", "2,9", "3,16"]


def test_json_is_deterministic(capsys):
    outs = {run(capsys, "check-hopf", "--algebra", "E:n=1", "--json", "--seed", "7")[1] for _ in range(2)}
    assert len(outs) == 1
    assert json.loads(outs.pop())["ok"] is True


def test_element_commands(capsys):
    assert run(capsys, "coprod", "--algebra", "F:t=1", "x*y")[1] == "x*y (x) x + x^2 (x) x*y"
    doc = json.loads(run(capsys, "coprod", "--algebra", "F:t=1", "y", "--json")[1])
    assert doc["coproduct"] == [["1", "y", "1"], ["1", "x", "y"]]
    assert run(capsys, "antipode", "--algebra", "F:t=2", "y")[1] == "-x^-2*y"
    assert run(capsys, "counit", "--algebra", "F:t=1", "2*y + 3*x")[1] == "3"


def test_solver_commands(capsys):
    code, out, _ = run(capsys, "skew-prim", "--algebra", "F:t=1", "--pair-v", "x", "--ydeg", "1", "--ebound", "3", "--json")
    assert json.loads(out)["dimension"] == 8
    code, out, _ = run(capsys, "group-like", "--algebra", "F:t=2", "--ebound", "4", "--json")
    assert json.loads(out)["count"] == 9
    code, out, _ = run(capsys, "classify", "--algebra", "F:t=2", "3*x^-1*(x^5 - 1)")
    assert out == "y_degree 0: lambda = 3, a = -1, m = 5"
    code, out, _ = run(capsys, "orbit", "--beta", "0,0,0", "--t", "1", "--smax", "1", "--json")
    assert json.loads(out)["images"] == [[1, 0, -1]]


def test_growth_and_lie_commands(capsys):
    code, out, _ = run(capsys, "ball", "--algebra", "zxz2", "--N", "8", "--json")
    assert json.loads(out)["degree"] == 1
    code, out, _ = run(capsys, "lie-sub", "--lie", "sl2")
    assert out.splitlines() == ["u = h", "v = e", "[u, v] = (2)*e"]
    code, out, _ = run(capsys, "verify-sub", "--algebra", "E:n=1", "--gens", "x0,x0^-1,y", "--cap", "3")
    assert (code, out) == (0, "pass")


def test_exit_status(capsys):
    code, out, _ = run(capsys, "check-grading", "--algebra", "E:n=1")
    assert code == 1 and "precondition" in out
    code, _, err = run(capsys, "nf", "--algebra", "F:t=1", "y^-1")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "nf", "--algebra", "F:t=1", "x*")
    assert code == 2 and "position 2" in err
    code, _, err = run(capsys, "find-sub", "--algebra", "F:t=1", "--g", "x", "--y", "y", "--cap", "3")
    assert code == 2
    assert run(capsys, "check-grading", "--algebra", "F:t=1")[0] == 0


def test_presentation_file(tmp_path, capsys):
    doc = {"field": "Q",
           "generators": [{"name": "g", "kind": "grouplike"}, {"name": "y", "kind": "skewprimitive", "pair": "g"}],
           "rules": [{"lhs": "g*y", "rhs": "-y*g"}, {"lhs": "g^-1*y", "rhs": "-y*g^-1"}],
           "order": ["y", "g"]}
    path = tmp_path / "plane.json"
    path.write_text(json.dumps(doc))
    assert run(capsys, "check-hopf", "--algebra", str(path))[:2] == (0, "pass")
    assert run(capsys, "nf", "--algebra", str(path), "g^3*y")[1] == "-y*g^3"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hopfforge", "nf", "--algebra", "E:n=1", "y^2"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "x0^2 - 1"
