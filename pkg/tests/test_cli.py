import io
import subprocess
import sys

import pytest

from twotrees import degree_sequence, is_two_tree, parse_edge_list, parse_sequence
from twotrees.cli import main


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_recognize_yes_no():
    assert run("recognize", "2,2,2") == (0, "2-tree: yes\n", "")
    assert run("recognize", "2^5 5^4") == (1, "2-tree: no (condition d)\n", "")
    assert run("recognize", "2 2")[1] == "2-tree: no (condition domain)\n"


def test_recognize_file_and_stdin(tmp_path):
    f = tmp_path / "seq.txt"
    f.write_text("2 2 2 4 4\n")
    assert run("recognize", "--file", str(f))[0] == 0
    assert run("recognize", "--file", "-", stdin="2^3 4^4")[1] == "2-tree: no (condition e)\n"
    assert run("recognize", "-", stdin="2 2 2")[0] == 0


def test_realize_then_verify():
    code, out, err = run("realize", "--ell", "5", "2^4 5 5")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "6 9"
    assert lines[-1].startswith("ell-vertex=") and " witness-ear=" in lines[-1]
    g = parse_edge_list(out)
    assert is_two_tree(g) and degree_sequence(g) == parse_sequence("2^4 5 5")
    fields = dict(item.split("=") for item in lines[-1].split())
    v, e = int(fields["ell-vertex"]), int(fields["witness-ear"])
    assert g.degree(v) == 5 and g.degree(e) == 2 and g.has_edge(v, e)
    code, vout, _ = run("verify", "--graph", "-", "--seq", "2^4 5 5", "--ell", "5", stdin=out)
    assert code == 0
    assert vout.splitlines()[:2] == ["2-tree: yes", "degree-sequence: match"]


def test_edge_list_is_sorted():
    _, out, _ = run("realize", "2^5 3^2 5^6")
    rows = [tuple(map(int, l.split())) for l in out.splitlines()[1:-1]]
    assert rows == sorted(rows) and all(u < v for u, v in rows)


def test_realize_dot():
    code, out, _ = run("realize", "--dot", "2,2,2")
    assert code == 0
    assert out == (
        "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
        "// ell-vertex=0 witness-ear=1\n"
    )


def test_realize_rejects():
    code, out, err = run("realize", "2^3 4^4")
    assert code == 1 and out == "" and "condition e" in err
    assert run("realize", "--ell", "7", "2^4 5 5")[0] == 2
    assert run("realize", "--ell", "2", "2^4 5 5")[0] == 2


def test_verify_failures(tmp_path):
    cycle = "4 4\n0 1\n1 2\n2 3\n0 3\n"
    code, out, _ = run("verify", "--graph", "-", stdin=cycle)
    assert code == 1 and out.startswith("2-tree: no (")
    k4e = "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n"
    code, out, _ = run("verify", "--graph", "-", "--seq", "2 2 2 4 4", stdin=k4e)
    assert code == 1 and "degree-sequence: mismatch (graph has 2^2 3^2)" in out
    code, out, _ = run("verify", "--graph", "-", "--ell", "4", stdin=k4e)
    assert code == 1 and "witness: none for ell=4" in out
    assert run("verify", "--graph", str(tmp_path / "missing"))[0] == 2
    assert run("verify", "--graph", "-", stdin="garbage")[0] == 2


def test_census():
    code, out, _ = run("census", "5")
    assert code == 0 and out == "2^3 4^2\n2^2 3^2 4\n"
    code, out, _ = run("census", "4", "--graphs")
    assert out.splitlines()[0] == "degree-sequence=2^2 3^2"
    g = parse_edge_list(out)
    assert is_two_tree(g) and g.vertex_count == 4
    assert run("census", "2")[0] == 2


def test_random_deterministic():
    a = run("random", "12", "--seed", "4")
    b = run("random", "12", "--seed", "4")
    assert a == b and a[0] == 0
    lines = a[1].splitlines()
    g = parse_edge_list(a[1])
    assert is_two_tree(g)
    assert lines[-1] == "degree-sequence=" + str(degree_sequence(g))
    assert run("random", "2", "--seed", "1")[0] == 2


def test_ktree_check():
    assert run("ktree-check", "-k", "3", "3 3 3 3") == (
        0,
        "passes all known necessary conditions (not sufficient for k ≥ 3)\n",
        "",
    )
    code, out, _ = run("ktree-check", "-k", "2", "2^5 5^4")
    assert code == 1 and out == "violates condition (iv)\nviolates condition (vi)\n"
    assert run("ktree-check", "-k", "0", "1 1")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["recognize"],
        ["recognize", "2 x"],
        ["recognize", "2 2 2", "--file", "f"],
        ["recognize", "--nope", "2"],
        ["census", "many"],
        ["random", "5"],
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and "error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "twotrees", "recognize", "2,2,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "2-tree: yes\n"


def test_console_script_pipe():
    realize = subprocess.run(["twotrees", "realize", "--ell", "5", "2^4 5 5"], capture_output=True, text=True)
    verify = subprocess.run(
        ["twotrees", "verify", "--graph", "-", "--seq", "2^4 5 5", "--ell", "5"],
        input=realize.stdout,
        capture_output=True,
        text=True,
    )
    assert realize.returncode == 0 and verify.returncode == 0
