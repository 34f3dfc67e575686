import json
import pathlib
import subprocess
import sys

import pytest

from fracpi.cli import main
from fracpi.model import size
from fracpi.syntax import parse

PROGRAMS = pathlib.Path(__file__).resolve().parent.parent / "programs"


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


def prog(name):
    return PROGRAMS / f"{name}.pi"


def test_check(capsys):
    code, out, _ = run(capsys, "check", prog("cnot"))
    assert code == 0
    assert out.splitlines() == ["dom: (* (+ 1 1) (+ 1 1))",
                                "cod: (* (+ 1 1) (+ 1 1))"]


def test_run(capsys):
    assert run(capsys, "run", prog("collect_false"), "--input", "F")[:2] == \
        (0, "(inl tt)\n")
    assert run(capsys, "run", prog("collect_false"), "--input", "T")[:2] == \
        (1, "exception\n")
    code, out, _ = run(capsys, "run", prog("toffoli"), "--input", "(T , (T , F))")
    assert (code, out.strip()) == (0, "((inr tt) , ((inr tt) , (inr tt)))")


def test_run_rejects_ill_typed_input(capsys):
    code, _, err = run(capsys, "run", prog("not"), "--input", "tt")
    assert code == 2 and "not a value" in err


@pytest.mark.parametrize("name", ["not", "cnot", "toffoli", "collect_false",
                                  "id_via_ancilla", "revx"])
def test_truth_table_row_count(capsys, name):
    code, out, _ = run(capsys, "truth-table", "--json", prog(name))
    rows = json.loads(out)
    assert code == 0
    assert len(rows) == size(parse(prog(name).read_text()).dom)


def test_truth_table_text(capsys):
    code, out, _ = run(capsys, "truth-table", prog("collect_false"))
    assert out.splitlines() == ["(inl tt) -> (inl tt)", "(inr tt) -> exception"]


def test_invert(capsys):
    code, out, _ = run(capsys, "invert", prog("id_via_ancilla"))
    assert code == 0
    from fracpi.combinators import invert
    assert parse(out) == invert(parse(prog("id_via_ancilla").read_text()))


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", prog("toffoli"))
    assert code == 0 and "8/8" in out and "bijective: yes" in out
    code, out, _ = run(capsys, "verify", prog("collect_false"))
    assert code == 1 and "FAIL (inr tt): exception" in out


def test_list_and_examples(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "example", "toffoli4", "--verify")
    assert code == 0 and "16/16 rows pass" in out
    code, out, _ = run(capsys, "example", "toffoli4", "--extract")
    assert code == 0 and parse(out).dom == parse(out).cod
    code, _, err = run(capsys, "example", "nope")
    assert code == 2 and "toffoli4" in err


def test_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.pi"
    bad.write_text("(; id @ (+ 1 1)\n   id @ 1)")
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and err.startswith("error: 1:1")
    bad.write_text("(; id @")
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and "end of input" in err
    code, _, err = run(capsys, "check", tmp_path / "missing.pi")
    assert code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "fracpi", "run", str(prog("not")),
                        "--input", "F"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "(inr tt)"
