import json
import subprocess
import sys
from fractions import Fraction

import pytest

from permsum import evaluate
from permsum import constructors as C
from permsum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "dif", "9", "0")
    assert code == 0 and out.splitlines()[0] == "1,4,2,5,3,6,8,7,9"
    code, out, _ = run(capsys, "construct", "prod", "6", "1")
    assert code == 0 and out.splitlines()[0] == "2,1,3,4,5,6"
    code, out, _ = run(capsys, "construct", "cycdif", "15")
    assert code == 0 and out.splitlines()[0] == "1,3,2,4,6,5,7,14,10,12,13,15,11,9,8"


@pytest.mark.parametrize("argv", [
    ("construct", "dif", "6", "4"),
    ("construct", "prod", "5", "1"),
    ("construct", "cycdif", "8", "1"),
    ("construct", "sum", "8", "1"),
    ("construct", "dif", "6", "1/2"),
])
def test_construct_rejects(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_excluded_message(capsys):
    _, _, err = run(capsys, "construct", "dif", "6", "4")
    assert "excluded" in err


@pytest.mark.parametrize("f, perm, out", [
    ("cycsqdif", "1,4,3,5,7,2,12,8,10,11,9,6", "0"),
    ("dif", "1,2,3,4", "-3"),
    ("dif", "1,3,2,4", "0"),
    ("sum", "1,2", "1/3"),
])
def test_eval(capsys, f, perm, out):
    code, text, _ = run(capsys, "eval", f, perm)
    assert code == 0 and text.strip() == out


@pytest.mark.parametrize("perm", ["1,1,2", "1,x", "", "0,1"])
def test_eval_rejects(capsys, perm):
    assert run(capsys, "eval", "dif", perm)[0] == 2


@pytest.mark.parametrize("argv, out", [
    (("values", "5", "dif", "--integers-only"), "-4 -2 -1 1 2 4"),
    (("values", "3", "dif"), "-2 -1/2 1/2 2"),
    (("values", "2", "dif"), "-1 1"),
])
def test_values(capsys, argv, out):
    code, text, _ = run(capsys, *argv)
    assert code == 0 and " ".join(text.split()) == out


def test_values_budget(capsys):
    code, text, _ = run(capsys, "values", "9", "dif", "--nodes", "1000")
    assert code == 1 and text.startswith("budget-exceeded")


def test_search(capsys):
    code, text, _ = run(capsys, "search", "cycsqdif", "12", "0")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "found"
    perm = tuple(int(x) for x in lines[1].split(","))
    assert evaluate("cycsqdif", perm) == 0
    for argv in (("dif", "5", "0"), ("sum", "6", "1")):
        code, text, _ = run(capsys, "search", *argv)
        assert code == 1 and text.splitlines()[0] == "exhausted-nonexistent"
    code, text, _ = run(capsys, "search", "cycsqdif", "15", "0", "--strategy", "dfs", "--nodes", "2000")
    assert code == 1 and text.splitlines()[0] == "budget-exceeded"
    assert run(capsys, "search", "dif", "5", "x")[0] == 2


def test_search_progress_goes_to_stderr(capsys):
    code, out, err = run(capsys, "search", "cycsqdif", "10", "0", "--strategy", "dfs", "--progress")
    assert code == 1 and "nodes=" in err and "nodes=" not in out.splitlines()[0]


def test_text_and_json_agree(capsys):
    for argv in (("search", "cycsqdif", "12", "0"), ("construct", "prod", "9"), ("eval", "dif", "3,1,2")):
        _, text, _ = run(capsys, *argv)
        _, obj = run_json(capsys, *argv)
        value = Fraction(int(obj["value"]["num"]), int(obj["value"]["den"]))
        if argv[0] != "eval":  # eval echoes only the value of its input
            perm_line = ",".join(map(str, obj["perm"]))
            assert perm_line in text.splitlines()
        if "perm" in obj:
            assert evaluate(obj["functional"], obj["perm"]) == value
        assert any(line.endswith(str(value)) for line in text.splitlines())
        assert isinstance(obj["elapsed"], str)


def test_json_not_found_has_no_perm(capsys):
    code, obj = run_json(capsys, "search", "dif", "5", "0")
    assert code == 1 and obj["status"] == "exhausted-nonexistent" and "perm" not in obj
    code, obj = run_json(capsys, "construct", "dif", "6", "4")
    assert code == 2 and obj["status"] == "error"


def test_verify(capsys):
    code, text, _ = run(capsys, "verify", "paper")
    assert code == 0 and text.splitlines()[-1] == "16/16 passed"
    code, text, _ = run(capsys, "verify", "seeds")
    assert code == 0 and "FAIL" not in text
    code, obj = run_json(capsys, "verify", "all")
    assert code == 0 and all(r["status"] == "pass" for r in obj)


def test_verify_corrupted_table(capsys, tmp_path):
    rows = [{"name": s.name, "functional": s.functional.value, "perm": list(s.perm), "value": str(s.value)}
            for s in C.PAPER_SEEDS]
    entries = rows[5]["perm"]
    entries[3], entries[4] = entries[4], entries[3]
    path = tmp_path / "table.json"
    path.write_text(json.dumps(rows))
    code, text, _ = run(capsys, "verify", "paper", "--file", str(path))
    assert code == 1
    failed = [line for line in text.splitlines() if line.startswith("FAIL")]
    assert len(failed) == 1 and failed[0].split()[1] == rows[5]["name"]


def test_tree(capsys):
    code, text, _ = run(capsys, "tree", "32")
    assert code == 0
    assert '1 -> 4 [label="L"];' in text and '1 -> 2 [label="R"];' in text
    code, text, _ = run(capsys, "tree", "6")
    assert code == 0 and sum("->" in line and "invis" not in line for line in text.splitlines()) == 5
    assert run(capsys, "tree", "5")[0] == 2
    code, text, _ = run(capsys, "tree", "--perm", "2,1,3")
    assert code == 0 and "digraph" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "permsum", "eval", "prod", "2,1,3,4,5,6"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
