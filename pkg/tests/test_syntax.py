import pathlib
import random

import pytest
from hypothesis import given, settings, strategies as st

from fracpi import combinators as pc
from fracpi.circuits import gallery
from fracpi.combinators import CNOT, NOT, TOFFOLI
from fracpi.errors import ParseError, TypeMismatch
from fracpi.frac import Eta, collect_false, id_via_ancilla, revx
from fracpi.generators import random_frac_program, random_program
from fracpi.model import (BOOL, FALSE, GC, ONE, TRUE, TT, ZERO, Frac, InL,
                          Pair, Prod)
from fracpi.syntax import parse, parse_ty, parse_val, pretty, show, tokenize

PROGRAMS = pathlib.Path(__file__).resolve().parent.parent / "programs"


def test_values():
    assert parse_val("tt") == TT
    assert parse_val("F") == FALSE and parse_val("\U0001d54b") == TRUE
    assert parse_val("((inl tt) , (T , gc))") == Pair(FALSE, Pair(TRUE, GC))
    assert parse_val("(inl (inr tt))") == InL(TRUE)


def test_types():
    assert parse_ty("(* (+ 1 1) 0)") == Prod(BOOL, ZERO)
    assert parse_ty("(/ (F , T) : (* (+ 1 1) (+ 1 1)))") == \
        Frac(Prod(BOOL, BOOL), Pair(FALSE, TRUE))


def test_combinators():
    assert parse("swap+ @ (+ 1 1)") == NOT
    assert parse("(; id @ 1 (eta F : (+ 1 1)))") == pc.Seq(pc.Id(ONE), Eta(FALSE, BOOL))
    three = parse("(; id @ 1 id @ 1 id @ 1)")
    assert three == pc.seq(pc.Id(ONE), pc.Id(ONE), pc.Id(ONE))
    assert parse("factorzl @ (* 0 (+ 1 1))") == pc.Factorzl(BOOL)
    assert parse("(p+ id @ 1 swap* @ (* 1 0))") == \
        pc.Plus(pc.Id(ONE), pc.SwapTimes(ONE, ZERO))


def test_comments_and_whitespace():
    text = "# header\n(p*   # first\n  id @ 1\n\n  id @ 0)  # done\n"
    assert parse(text) == pc.Times(pc.Id(ONE), pc.Id(ZERO))
    assert [t.text for t in tokenize("(a,b)")] == ["(", "a", ",", "b", ")"]


@pytest.mark.parametrize("text, line, col", [
    ("(; id @ 1", 1, 10),
    ("(p* id @ 1\n  id @ 2)", 2, 8),
    ("frob @ 1", 1, 1),
    ("id @ 1 id @ 1", 1, 8),
    ("(eta F (+ 1 1))", 1, 8),
])
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert (e.value.line, e.value.column) == (line, col)


def test_type_errors_have_positions():
    with pytest.raises(TypeMismatch) as e:
        parse("(;\n  id @ (+ 1 1)\n  id @ 1)")
    assert str(e.value).startswith("1:1")
    with pytest.raises(TypeMismatch) as e:
        parse("(eta tt : (+ 1 1))")
    assert "1:1" in str(e.value)
    with pytest.raises(TypeMismatch):
        parse("assocl+ @ (+ 1 1)")


def test_show_is_canonical():
    assert show(CNOT).count("\n") == 0
    assert show(pc.Factorzl(BOOL)) == "factorzl @ (* 0 (+ 1 1))"
    assert show(Eta(TRUE, BOOL)) == "(eta (inr tt) : (+ 1 1))"


@pytest.mark.parametrize("nc", gallery(), ids=lambda nc: nc.name)
def test_gallery_round_trips(nc):
    assert parse(show(nc.dynamic)) == nc.dynamic
    assert parse(pretty(nc.dynamic)) == nc.dynamic


def test_pretty_breaks_long_lines():
    text = pretty(TOFFOLI, width=40)
    assert all(len(line) <= 40 or "@" in line for line in text.splitlines())
    assert parse(text) == TOFFOLI


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_random_round_trip(seed):
    rng = random.Random(seed)
    for c in (random_program(rng), random_frac_program(rng)):
        assert parse(show(c)) == c
        assert parse(pretty(c, width=30)) == c


@pytest.mark.parametrize("name, expected", [
    ("not", NOT), ("cnot", CNOT), ("toffoli", TOFFOLI),
    ("collect_false", collect_false()), ("id_via_ancilla", id_via_ancilla()),
    ("revx", revx(FALSE, BOOL, TRUE, BOOL)),
])
def test_program_files(name, expected):
    text = (PROGRAMS / f"{name}.pi").read_text(encoding="utf-8")
    assert parse(text) == expected


def test_annotation_must_be_inhabited():
    c = parse("(; (eta (inl tt) : (+ 1 1)) (eps (inl tt) : (+ 1 1)))")
    assert c.dom == c.cod == ONE
    with pytest.raises(TypeMismatch):
        parse("(eps tt : 0)")
    with pytest.raises(TypeMismatch):
        parse("(eta gc : (+ 1 1))")
