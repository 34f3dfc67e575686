import random

from hypothesis import given, settings, strategies as st

from fracpi import combinators as pc
from fracpi import pointed as pp
from fracpi.combinators import CNOT, NOT, invert
from fracpi.extraction import check_ext, ext_comb, ext_ty
from fracpi.frac import Eps, Eta, eval_d
from fracpi.generators import random_pt_program
from fracpi.model import BOOL, FALSE, GC, ONE, TRUE, TT, Frac, Pair, Prod
from fracpi.pointed import (Lift, PEps, PEta, PId, PProd, PRecip, PSeq,
                            PSing, Pt, PTimes, Return, pt_invert, sing_laws)

F, T = Pt(BOOL, FALSE), Pt(BOOL, TRUE)


def test_ext_ty():
    assert (ext_ty(F).ty, ext_ty(F).val) == (BOOL, FALSE)
    r = ext_ty(PProd(F, PSing(T)))
    assert (r.ty, r.val) == (Prod(BOOL, BOOL), Pair(FALSE, TRUE))
    r = ext_ty(PRecip(PProd(F, T)))
    assert r.ty == Frac(Prod(BOOL, BOOL), Pair(FALSE, TRUE))
    assert r.val == GC
    r = ext_ty(PRecip(PRecip(T)))
    assert r.ty == Frac(Frac(BOOL, TRUE), GC) and r.val == GC


def test_ext_comb_cases():
    assert ext_comb(Lift(NOT, FALSE)) == NOT
    assert ext_comb(PEta(T)) == Eta(TRUE, BOOL)
    assert ext_comb(PEps(T)) == Eps(TRUE, BOOL)
    assert ext_comb(Return(T)) == pc.Id(BOOL)
    assert ext_comb(PSeq(Lift(NOT, FALSE), PId(T))) == pc.Seq(NOT, pc.Id(BOOL))
    assert ext_comb(PTimes(Lift(NOT, TRUE), PId(pp.UNIT))) == \
        pc.Times(NOT, pc.Id(ONE))
    assert ext_comb(pp.PSwapTimes(F, PRecip(T))) == \
        pc.SwapTimes(BOOL, Frac(BOOL, TRUE))


def test_extracted_borrow_cannot_fail():
    c = pp.pseq(PEta(F), PTimes(pp.SingMap(PSeq(Lift(NOT, FALSE),
                                                 Lift(NOT, TRUE))),
                                PId(PRecip(F))),
                PEps(F))
    assert check_ext(c)
    assert eval_d(ext_comb(c), TT) == TT


def test_laws_extract():
    for T0 in (F, PProd(F, T), PRecip(T)):
        for _, lhs, rhs in sing_laws(T0):
            assert check_ext(lhs) and check_ext(rhs)


def test_revrev_and_prevx_extract():
    assert check_ext(pp.revrev(T))
    assert check_ext(pp.prevx(F, T))
    d = ext_comb(pp.prevx(F, T))
    assert eval_d(d, GC) == Pair(GC, GC)


def test_check_ext_reports_a_broken_program():
    # a hand-built program whose extraction disagrees with its pointed type
    good = Lift(CNOT, Pair(TRUE, FALSE))
    assert check_ext(good)

    class Lying(pp.Lift):
        pass
    bad = Lying(NOT, FALSE)
    object.__setattr__(bad, "cod", F)
    assert not check_ext(bad)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32))
def test_random_extractions_never_fail(seed):
    c = random_pt_program(random.Random(seed))
    assert check_ext(c)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_extraction_commutes_with_inversion(seed):
    c = random_pt_program(random.Random(seed))
    assert ext_comb(pt_invert(c)) == invert(ext_comb(c))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32))
def test_pointed_and_extracted_evaluation_agree(seed):
    c = random_pt_program(random.Random(seed))
    start = ext_ty(c.dom).val
    assert start == pp.focus_of(c.dom)
    assert eval_d(ext_comb(c), start) == pp.pt_eval(c, start)
