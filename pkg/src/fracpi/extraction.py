"""Extract dynamically checked programs from pointed ones.

Pointed types become plain types plus a value, singletons are erased, and
a reciprocal becomes ``1/v`` holding the GC token.  The foci that the
pointed type checker tracked become the witnesses of ``Eta``/``Eps``, so
the runtime check in the extracted program can never fire;
:func:`check_ext` confirms this for a given program by running it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch

from fracpi import combinators as pc
from fracpi import pointed as pp
from fracpi.frac import Eps, Eta, eval_d
from fracpi.model import GC, Frac, Pair, Prod, Ty, Val, has_type


@dataclass(frozen=True)
class ExtResult:
    ty: Ty
    val: Val

    def __post_init__(self):
        assert has_type(self.val, self.ty), (self.val, self.ty)


def ext_ty(T: pp.PtTy) -> ExtResult:
    if isinstance(T, pp.Pt):
        return ExtResult(T.t, T.v)
    if isinstance(T, pp.PProd):
        a, b = ext_ty(T.fst), ext_ty(T.snd)
        return ExtResult(Prod(a.ty, b.ty), Pair(a.val, b.val))
    if isinstance(T, pp.PSing):
        return ext_ty(T.inner)
    if isinstance(T, pp.PRecip):
        inner = ext_ty(T.inner)
        return ExtResult(Frac(inner.ty, inner.val), GC)
    raise TypeError(T)


def _ty(T):
    return ext_ty(T).ty


@singledispatch
def ext_comb(c: pp.PtComb) -> pc.Comb:
    """The dynamic program underlying ``c``."""
    raise TypeError(f"cannot extract {c!r}")


@ext_comb.register
def _(c: pp.Lift):
    return c.c


@ext_comb.register
def _(c: pp.PSeq):
    return pc.Seq(ext_comb(c.c1), ext_comb(c.c2))


@ext_comb.register
def _(c: pp.PTimes):
    return pc.Times(ext_comb(c.c1), ext_comb(c.c2))


@ext_comb.register
def _(c: pp.PSwapTimes):
    return pc.SwapTimes(_ty(c.T1), _ty(c.T2))


@ext_comb.register
def _(c: pp.PAssoclTimes):
    return pc.AssoclTimes(_ty(c.T1), _ty(c.T2), _ty(c.T3))


@ext_comb.register
def _(c: pp.PAssocrTimes):
    return pc.AssocrTimes(_ty(c.T1), _ty(c.T2), _ty(c.T3))


@ext_comb.register
def _(c: pp.PUniteTimesL):
    return pc.UniteTimesL(_ty(c.T))


@ext_comb.register
def _(c: pp.PUnitiTimesL):
    return pc.UnitiTimesL(_ty(c.T))


@ext_comb.register
def _(c: pp.PEta):
    r = ext_ty(c.T)
    return Eta(r.val, r.ty)


@ext_comb.register
def _(c: pp.PEps):
    r = ext_ty(c.T)
    return Eps(r.val, r.ty)


@ext_comb.register
def _(c: pp.SingMap):
    return ext_comb(c.f)


# PId and every singleton/merge relabelling erase to an identity.
@ext_comb.register(pp.PId)
@ext_comb.register(pp._Relabel)
def _(c):
    return pc.Id(_ty(c.dom))


def check_ext(c: pp.PtComb) -> bool:
    """True iff the extraction of ``c`` runs to the extracted codomain value."""
    d = ext_comb(c)
    src, dst = ext_ty(c.dom), ext_ty(c.cod)
    if (d.dom, d.cod) != (src.ty, dst.ty):
        return False
    return eval_d(d, src.val) == dst.val
