"""One test per acceptance criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
Corpora are seeded so a failure can be replayed.
"""

import itertools
import random
import time

import pytest

from fracpi import pointed as pp
from fracpi.circuits import by_name, gallery, toffoli4_family
from fracpi.cli import truth_table
from fracpi.combinators import TOFFOLI, Seq, evaluate, invert
from fracpi.extraction import check_ext, ext_comb
from fracpi.frac import collect_false, eval_d, id_via_ancilla, revx
from fracpi.generators import (MAX_DEPTH, MAX_SIZE, random_frac_program,
                               random_program, random_pt_program)
from fracpi.model import (BOOL, FALSE, GC, ONE, TRUE, Pair, Prod, Sum, bits,
                          bools, enumerate_values, show_val, size)
from fracpi.syntax import parse, show

N_CORE = 10_000
N_POINTED = 10_000
N_FRAC = 1_000
CORE_SECONDS = 60.0
EXT_SECONDS = 120.0


@pytest.fixture(scope="module")
def core_corpus():
    start = time.perf_counter()
    rng = random.Random(20240601)
    corpus = [random_program(rng) for _ in range(N_CORE)]
    return corpus, time.perf_counter() - start


@pytest.fixture(scope="module")
def pointed_corpus():
    start = time.perf_counter()
    rng = random.Random(20240602)
    corpus = [random_pt_program(rng) for _ in range(N_POINTED)]
    return corpus, time.perf_counter() - start


def test_01_reversibility(core_corpus, record):
    corpus, gen_time = core_corpus
    start = time.perf_counter()
    failures = checked = 0
    for c in corpus:
        assert size(c.dom) <= MAX_SIZE
        inv = invert(c)
        for v in enumerate_values(c.dom):
            checked += 1
            failures += evaluate(inv, evaluate(c, v)) != v
    elapsed = gen_time + time.perf_counter() - start
    ok = failures == 0 and elapsed < CORE_SECONDS
    record(1, f"reversibility on {len(corpus)} programs", ok,
           f"{checked} inputs, {failures} failures, {elapsed:.1f}s < {CORE_SECONDS:.0f}s")
    assert ok


def test_02_bijectivity(core_corpus, record):
    corpus, _ = core_corpus
    failures = 0
    for c in corpus:
        outs = [evaluate(c, v) for v in enumerate_values(c.dom)]
        cod = enumerate_values(c.cod)
        ok = (size(c.dom) == size(c.cod) and len(set(outs)) == len(outs)
              and set(outs) == set(cod))
        failures += not ok
    record(2, f"bijectivity on {len(corpus)} programs", failures == 0,
           f"{failures} failures")
    assert failures == 0


def test_03_collect_false(record):
    c = collect_false()
    got = (eval_d(c, FALSE), eval_d(c, TRUE))
    ok = c.dom == c.cod == BOOL and got == (FALSE, None)
    shown = ["absent" if v is None else show_val(v) for v in got]
    record(3, "eta/eps example present on F, absent on T", ok,
           f"F -> {shown[0]}, T -> {shown[1]}")
    assert ok


def test_04_id_via_ancilla(record):
    c = id_via_ancilla()
    rows = [(v, eval_d(c, v)) for v in enumerate_values(BOOL)]
    passed = sum(out == v for v, out in rows)
    ok = c.dom == c.cod == BOOL and passed == 2
    record(4, "id via ancilla is the identity on booleans", ok, f"{passed}/2")
    assert ok


def test_05_revx(record):
    c = revx(FALSE, BOOL, TRUE, BOOL)
    out = eval_d(c, GC)
    back = eval_d(Seq(c, invert(c)), GC)
    fwd = eval_d(Seq(invert(c), c), Pair(GC, GC))
    ok = out == Pair(GC, GC) and back == GC and fwd == Pair(GC, GC)
    record(5, "revx splits a collector and inverts", ok)
    assert ok


def _small_types():
    # every type built from 1, +, * with 1 <= size <= 4, up to a height of 3
    level = {ONE}
    for _ in range(3):
        new = set(level)
        for a, b in itertools.product(level, repeat=2):
            for t in (Sum(a, b), Prod(a, b)):
                if size(t) <= 4:
                    new.add(t)
        level = new
    return sorted(level, key=str)


def test_06_singleton_laws(record):
    checked = failures = 0
    types = _small_types()
    for t in types:
        for v in enumerate_values(t):
            for name, lhs, rhs in pp.sing_laws(pp.Pt(t, v)):
                checked += 1
                failures += not pp.law_holds(lhs, rhs)
    ok = failures == 0 and checked == 7 * sum(size(t) for t in types)
    record(6, "seven singleton (co)monad laws", ok,
           f"{checked} instances over {len(types)} types, {failures} failures")
    assert ok


def test_07_pointed_determinism(pointed_corpus, record):
    corpus, _ = pointed_corpus
    failures = sum(pp.pt_eval(c, pp.focus_of(c.dom)) != pp.focus_of(c.cod)
                   for c in corpus)
    record(7, f"pointed evaluation determinism on {len(corpus)} programs",
           failures == 0, f"{failures} failures")
    assert failures == 0


def test_08_extraction_never_fails(pointed_corpus, record):
    corpus, gen_time = pointed_corpus
    start = time.perf_counter()
    members = [nc.pointed(v) for nc in gallery() if nc.pointed
               for v in enumerate_values(nc.dynamic.dom)]
    failures = sum(not check_ext(c) for c in members + corpus)
    elapsed = gen_time + time.perf_counter() - start
    ok = failures == 0 and elapsed < EXT_SECONDS
    record(8, f"check_ext on {len(members)} gallery members and "
              f"{len(corpus)} programs", ok,
           f"{failures} failures, {elapsed:.1f}s < {EXT_SECONDS:.0f}s")
    assert ok


def test_09_toffoli(record):
    t3 = sum(evaluate(TOFFOLI, bits(x, y, z)) == bits(x, y, z ^ (x & y))
             for x, y, z in itertools.product((0, 1), repeat=3))
    d = by_name("toffoli4").dynamic
    t4 = absent = 0
    for xs in itertools.product((0, 1), repeat=4):
        out = eval_d(d, bits(*xs))
        absent += out is None
        t4 += out == bits(*xs[:3], xs[3] ^ (xs[0] & xs[1] & xs[2]))
    extracted = {ext_comb(toffoli4_family(v)) for v in enumerate_values(bools(4))}
    ok = t3 == 8 and t4 == 16 and absent == 0 and len(extracted) == 1
    record(9, "Toffoli truth tables and uniform extraction", ok,
           f"3-bit {t3}/8, 4-bit {t4}/16, {absent} absent, "
           f"{len(extracted)} distinct extraction(s)")
    assert ok


def test_10_frontend(record):
    rng = random.Random(20240603)
    programs = [nc.dynamic for nc in gallery()]
    programs += [random_frac_program(rng) for _ in range(N_FRAC)]
    bad_round_trip = sum(parse(show(c)) != c for c in programs)
    bad_rows = sum(len(truth_table(c)) != size(c.dom) for c in programs)
    ok = bad_round_trip == 0 and bad_rows == 0
    record(10, f"parse/print round trip on {len(programs)} programs", ok,
           f"{bad_round_trip} round-trip, {bad_rows} row-count failures")
    assert ok


def test_corpus_parameters():
    # the generators honour the corpus bounds used above
    assert MAX_SIZE == 8 and MAX_DEPTH == 6
