"""Pointed types: evaluation tracked by the type checker.

A pointed type is a finite type together with the value in focus.  Every
pointed combinator knows its pointed domain and codomain when it is
built, and sequential composition demands that they agree *including* the
foci.  ``PEps(T)`` consumes ``PSing T * PRecip T``, so a program whose
ancilla is not restored cannot even be constructed: the composition
raises :class:`PointMismatch` instead of failing at run time.

Only the multiplicative fragment is lifted.  ``Merge``/``Split`` move
between a pair of pointed types and a pointed product type, which is what
lets a core gate act on several separately tracked wires.
"""

from __future__ import annotations

from dataclasses import dataclass

from fracpi import combinators as pc
from fracpi.errors import IllTyped, PointMismatch, TypeMismatch
from fracpi.model import (GC, ONE, TT, Pair, Prod, Ty, Val, has_type,
                          is_core_ty, show_ty, show_val)
from fracpi.wiring import Builder, route


class PtTy:
    def __str__(self):
        return show_pt(self)


@dataclass(frozen=True)
class Pt(PtTy):
    t: Ty
    v: Val

    def __post_init__(self):
        if not is_core_ty(self.t):
            raise IllTyped(f"pointed types are built over core types: {self.t}")
        if not has_type(self.v, self.t):
            raise IllTyped(f"{self.v} does not inhabit {self.t}")


@dataclass(frozen=True)
class PProd(PtTy):
    fst: PtTy
    snd: PtTy


@dataclass(frozen=True)
class PSing(PtTy):
    inner: PtTy


@dataclass(frozen=True)
class PRecip(PtTy):
    inner: PtTy


UNIT = Pt(ONE, TT)


def focus_of(T: PtTy) -> Val:
    if isinstance(T, Pt):
        return T.v
    if isinstance(T, PProd):
        return Pair(focus_of(T.fst), focus_of(T.snd))
    if isinstance(T, PSing):
        return focus_of(T.inner)
    if isinstance(T, PRecip):
        return GC
    raise TypeError(T)


def show_pt(T: PtTy) -> str:
    if isinstance(T, Pt):
        return f"(# {show_ty(T.t)} {show_val(T.v)})"
    if isinstance(T, PProd):
        return f"(p* {show_pt(T.fst)} {show_pt(T.snd)})"
    if isinstance(T, PSing):
        return f"(sing {show_pt(T.inner)})"
    if isinstance(T, PRecip):
        return f"(recip {show_pt(T.inner)})"
    raise TypeError(T)


def _erase(T):
    if isinstance(T, Pt):
        return T.t
    if isinstance(T, PProd):
        return ("*", _erase(T.fst), _erase(T.snd))
    if isinstance(T, PSing):
        return ("sing", _erase(T.inner))
    return ("recip", _erase(T.inner))


def _first_point_diff(a, b):
    if isinstance(a, Pt):
        return (a.v, b.v) if a.v != b.v else None
    if isinstance(a, PProd):
        return (_first_point_diff(a.fst, b.fst)
                or _first_point_diff(a.snd, b.snd))
    return _first_point_diff(a.inner, b.inner)


def _agree(location, expected: PtTy, found: PtTy):
    if expected == found:
        return
    if _erase(expected) != _erase(found):
        raise TypeMismatch(location, expected, found)
    want, got = _first_point_diff(expected, found)
    raise PointMismatch(want, got, location)


class PtComb:
    def __post_init__(self):
        dom, cod = self._infer()
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)

    def _infer(self):
        raise NotImplementedError

    def _run(self, v):
        raise NotImplementedError

    def inverse(self) -> "PtComb":
        raise NotImplementedError

    def children(self):
        return ()


@dataclass(frozen=True)
class Lift(PtComb):
    """A core combinator applied at one input; its output is in the type."""

    c: pc.Comb
    at: Val

    def _infer(self):
        if not self.c.core:
            raise IllTyped(f"only core combinators can be lifted: {self.c}")
        return Pt(self.c.dom, self.at), Pt(self.c.cod, self.c._run(self.at))

    def _run(self, v):
        return self.c._run(v)

    def inverse(self):
        return Lift(self.c.inverse(), self.cod.v)


@dataclass(frozen=True)
class PSeq(PtComb):
    c1: PtComb
    c2: PtComb

    def _infer(self):
        _agree("pointed sequence", self.c1.cod, self.c2.dom)
        return self.c1.dom, self.c2.cod

    def _run(self, v):
        return self.c2._run(self.c1._run(v))

    def inverse(self):
        return PSeq(self.c2.inverse(), self.c1.inverse())

    def children(self):
        return (self.c1, self.c2)


@dataclass(frozen=True)
class PTimes(PtComb):
    c1: PtComb
    c2: PtComb

    def _infer(self):
        return (PProd(self.c1.dom, self.c2.dom),
                PProd(self.c1.cod, self.c2.cod))

    def _run(self, v):
        return Pair(self.c1._run(v.fst), self.c2._run(v.snd))

    def inverse(self):
        return PTimes(self.c1.inverse(), self.c2.inverse())

    def children(self):
        return (self.c1, self.c2)


@dataclass(frozen=True)
class PId(PtComb):
    T: PtTy

    def _infer(self):
        return self.T, self.T

    def _run(self, v):
        return v

    def inverse(self):
        return self


@dataclass(frozen=True)
class PSwapTimes(PtComb):
    T1: PtTy
    T2: PtTy

    def _infer(self):
        return PProd(self.T1, self.T2), PProd(self.T2, self.T1)

    def _run(self, v):
        return Pair(v.snd, v.fst)

    def inverse(self):
        return PSwapTimes(self.T2, self.T1)


@dataclass(frozen=True)
class PAssoclTimes(PtComb):
    T1: PtTy
    T2: PtTy
    T3: PtTy

    def _infer(self):
        return (PProd(self.T1, PProd(self.T2, self.T3)),
                PProd(PProd(self.T1, self.T2), self.T3))

    def _run(self, v):
        return Pair(Pair(v.fst, v.snd.fst), v.snd.snd)

    def inverse(self):
        return PAssocrTimes(self.T1, self.T2, self.T3)


@dataclass(frozen=True)
class PAssocrTimes(PtComb):
    T1: PtTy
    T2: PtTy
    T3: PtTy

    def _infer(self):
        return (PProd(PProd(self.T1, self.T2), self.T3),
                PProd(self.T1, PProd(self.T2, self.T3)))

    def _run(self, v):
        return Pair(v.fst.fst, Pair(v.fst.snd, v.snd))

    def inverse(self):
        return PAssoclTimes(self.T1, self.T2, self.T3)


@dataclass(frozen=True)
class PUniteTimesL(PtComb):
    T: PtTy

    def _infer(self):
        return PProd(UNIT, self.T), self.T

    def _run(self, v):
        return v.snd

    def inverse(self):
        return PUnitiTimesL(self.T)


@dataclass(frozen=True)
class PUnitiTimesL(PtComb):
    T: PtTy

    def _infer(self):
        return self.T, PProd(UNIT, self.T)

    def _run(self, v):
        return Pair(TT, v)

    def inverse(self):
        return PUniteTimesL(self.T)


@dataclass(frozen=True)
class PEta(PtComb):
    """Put the focus of ``T`` into a singleton and create its collector."""

    T: PtTy

    def _infer(self):
        return UNIT, PProd(PSing(self.T), PRecip(self.T))

    def _run(self, v):
        return Pair(focus_of(self.T), GC)

    def inverse(self):
        return PEps(self.T)


@dataclass(frozen=True)
class PEps(PtComb):
    T: PtTy

    def _infer(self):
        return PProd(PSing(self.T), PRecip(self.T)), UNIT

    def _run(self, v):
        # unreachable for well-built programs; the type already fixed v.fst
        if v.fst != focus_of(self.T):
            raise IllTyped(f"collector for {focus_of(self.T)} got {v.fst}")
        return TT

    def inverse(self):
        return PEta(self.T)


class _Relabel(PtComb):
    """Combinators that only change the pointed type, never the carrier."""

    def _run(self, v):
        return v


@dataclass(frozen=True)
class Return(_Relabel):
    T: PtTy

    def _infer(self):
        return self.T, PSing(self.T)

    def inverse(self):
        return Extract(self.T)


@dataclass(frozen=True)
class Extract(_Relabel):
    T: PtTy

    def _infer(self):
        return PSing(self.T), self.T

    def inverse(self):
        return Return(self.T)


@dataclass(frozen=True)
class SingMap(PtComb):
    f: PtComb

    def _infer(self):
        return PSing(self.f.dom), PSing(self.f.cod)

    def _run(self, v):
        return self.f._run(v)

    def inverse(self):
        return SingMap(self.f.inverse())

    def children(self):
        return (self.f,)


@dataclass(frozen=True)
class TensorSing(_Relabel):
    """A pair of singletons is a singleton of the pair."""

    T1: PtTy
    T2: PtTy

    def _infer(self):
        return (PProd(PSing(self.T1), PSing(self.T2)),
                PSing(PProd(self.T1, self.T2)))

    def inverse(self):
        return CotensorSing(self.T1, self.T2)


@dataclass(frozen=True)
class CotensorSing(_Relabel):
    T1: PtTy
    T2: PtTy

    def _infer(self):
        return (PSing(PProd(self.T1, self.T2)),
                PProd(PSing(self.T1), PSing(self.T2)))

    def inverse(self):
        return TensorSing(self.T1, self.T2)


@dataclass(frozen=True)
class JoinSing(_Relabel):
    """A singleton of a singleton is the same singleton."""

    T: PtTy

    def _infer(self):
        return PSing(PSing(self.T)), PSing(self.T)

    def inverse(self):
        return DuplicateSing(self.T)


@dataclass(frozen=True)
class DuplicateSing(_Relabel):
    T: PtTy

    def _infer(self):
        return PSing(self.T), PSing(PSing(self.T))

    def inverse(self):
        return JoinSing(self.T)


@dataclass(frozen=True)
class Merge(_Relabel):
    """``t1#v1 * t2#v2  <->  (t1 * t2)#(v1, v2)``"""

    T1: Pt
    T2: Pt

    def _infer(self):
        for T in (self.T1, self.T2):
            if not isinstance(T, Pt):
                raise TypeMismatch("merge", "a plain pointed type", T)
        return (PProd(self.T1, self.T2),
                Pt(Prod(self.T1.t, self.T2.t), Pair(self.T1.v, self.T2.v)))

    def inverse(self):
        return Split(self.cod)


@dataclass(frozen=True)
class Split(_Relabel):
    T: Pt

    def _infer(self):
        if not (isinstance(self.T, Pt) and isinstance(self.T.t, Prod)):
            raise TypeMismatch("split", "a pointed product type", self.T)
        t, v = self.T.t, self.T.v
        return self.T, PProd(Pt(t.fst, v.fst), Pt(t.snd, v.snd))

    def inverse(self):
        return Merge(self.cod.fst, self.cod.snd)


def pt_dom_cod(c: PtComb):
    return c.dom, c.cod


def pt_eval(c: PtComb, v: Val) -> Val:
    """Run ``c`` on its only admissible input, the focus of its domain."""
    if v != focus_of(c.dom):
        raise IllTyped(f"input {v} is not the focus {focus_of(c.dom)} of {c.dom}")
    return c._run(v)


def pt_invert(c: PtComb) -> PtComb:
    return c.inverse()


def pseq(*cs: PtComb) -> PtComb:
    out = cs[-1]
    for c in reversed(cs[:-1]):
        out = PSeq(c, out)
    return out


POINTED = Builder(prod=PProd, id=PId, swap=PSwapTimes, assocl=PAssoclTimes,
                  assocr=PAssocrTimes, times=PTimes, seq=PSeq,
                  invert=pt_invert)


def strength(A: PtTy, B: PtTy) -> PtComb:
    """``A * Sing B  ->  Sing (A * B)``"""
    return PSeq(PTimes(Return(A), PId(PSing(B))), TensorSing(A, B))


def costrength(A: PtTy, B: PtTy) -> PtComb:
    """``Sing (A * B)  ->  A * Sing B``"""
    return PSeq(CotensorSing(A, B), PTimes(Extract(A), PId(PSing(B))))


def sing_laws(T: PtTy):
    """The singleton (co)monad laws at ``T`` as ``(name, lhs, rhs)`` triples."""
    S = PSing(T)
    return [
        ("monad left unit",
         PSeq(Return(S), JoinSing(T)), PId(S)),
        ("monad right unit",
         PSeq(SingMap(Return(T)), JoinSing(T)), PId(S)),
        ("monad associativity",
         PSeq(JoinSing(PSing(T)), JoinSing(T)),
         PSeq(SingMap(JoinSing(T)), JoinSing(T))),
        ("comonad left counit",
         PSeq(DuplicateSing(T), Extract(S)), PId(S)),
        ("comonad right counit",
         PSeq(DuplicateSing(T), SingMap(Extract(T))), PId(S)),
        ("comonad coassociativity",
         PSeq(DuplicateSing(T), DuplicateSing(PSing(T))),
         PSeq(DuplicateSing(T), SingMap(DuplicateSing(T)))),
        ("idempotency",
         pseq(JoinSing(T), DuplicateSing(T), JoinSing(T)), JoinSing(T)),
    ]


def law_holds(lhs: PtComb, rhs: PtComb) -> bool:
    if (lhs.dom, lhs.cod) != (rhs.dom, rhs.cod):
        return False
    x = focus_of(lhs.dom)
    return pt_eval(lhs, x) == pt_eval(rhs, x)


def revrev(T: PtTy) -> PtComb:
    """Collect a collector: ``Recip (Recip T)  ->  Sing T``.

    A fresh singleton of ``T`` is allocated with its collector; that
    collector is promoted to a singleton and handed to the incoming
    collector-of-collectors, leaving the singleton behind.
    """
    R, RR = PRecip(T), PRecip(PRecip(T))
    return pseq(
        PUnitiTimesL(RR),
        PTimes(PEta(T), PId(RR)),
        PAssocrTimes(PSing(T), R, RR),
        PTimes(PId(PSing(T)), PTimes(Return(R), PId(RR))),
        PTimes(PId(PSing(T)), PEps(R)),
        PSwapTimes(PSing(T), UNIT),
        PUniteTimesL(PSing(T)))


def prevx(A: PtTy, B: PtTy) -> PtComb:
    """Split a pair collector: ``Recip (A * B)  ->  Recip A * Recip B``."""
    RAB = PRecip(PProd(A, B))
    types = {"a": PSing(A), "b": PSing(B), "ra": PRecip(A),
             "rb": PRecip(B), "rab": RAB}
    return pseq(
        PUnitiTimesL(RAB),
        PTimes(PEta(A), PId(RAB)),
        PUnitiTimesL(PProd(PProd(PSing(A), PRecip(A)), RAB)),
        PTimes(PEta(B), PId(PProd(PProd(PSing(A), PRecip(A)), RAB))),
        route((("b", "rb"), (("a", "ra"), "rab")),
              ((("a", "b"), "rab"), ("ra", "rb")), types, POINTED),
        PTimes(PTimes(TensorSing(A, B), PId(RAB)),
               PId(PProd(PRecip(A), PRecip(B)))),
        PTimes(PEps(PProd(A, B)), PId(PProd(PRecip(A), PRecip(B)))),
        PUniteTimesL(PProd(PRecip(A), PRecip(B))))
