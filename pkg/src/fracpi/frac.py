"""Fractional types with a dynamically checked deallocation.

``Eta(v, t)`` creates, from no information, the value ``v`` together with
a GC process of type ``1/v`` that can collect it.  ``Eps(v, t)`` hands a
value to such a process; if the value is not ``v`` evaluation fails.
:func:`eval_d` reports that failure as ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from fracpi import combinators as pc
from fracpi.combinators import CNOT, Comb, Seq, Times, seq
from fracpi.errors import IllTyped
from fracpi.model import (BOOL, FALSE, GC, ONE, TT, Frac, Pair, Prod, Ty, Val,
                          has_type)
from fracpi.wiring import route


class GcMismatch(Exception):
    """Raised inside evaluation when a GC process meets the wrong value."""


def _check_witness(v, t):
    if not has_type(v, t):
        raise IllTyped(f"{v} does not inhabit {t}")


@dataclass(frozen=True)
class Eta(Comb):
    v: Val
    t: Ty

    def __post_init__(self):
        _check_witness(self.v, self.t)
        super().__post_init__()

    def _infer(self):
        return ONE, Prod(self.t, Frac(self.t, self.v))

    def _run(self, v):
        return Pair(self.v, GC)

    def inverse(self):
        return Eps(self.v, self.t)


@dataclass(frozen=True)
class Eps(Comb):
    v: Val
    t: Ty

    def __post_init__(self):
        _check_witness(self.v, self.t)
        super().__post_init__()

    def _infer(self):
        return Prod(self.t, Frac(self.t, self.v)), ONE

    def _run(self, v):
        if v.fst != self.v:
            raise GcMismatch(v.fst, self.v)
        return TT

    def inverse(self):
        return Eta(self.v, self.t)


def infer_d(c: Comb):
    return c.dom, c.cod


def eval_d(c: Comb, v: Val) -> Optional[Val]:
    """Evaluate ``c`` on ``v``; ``None`` when some ``Eps`` check fails."""
    if not has_type(v, c.dom):
        raise IllTyped(f"{v} does not inhabit {c.dom}")
    try:
        return c._run(v)
    except GcMismatch:
        return None


def collect_false() -> Comb:
    """``B <-> B``: returns its input when it is false, fails otherwise.

    A fresh false bit and its collector are allocated; the collector is
    applied to the input, and the fresh bit is returned in its place.
    """
    return seq(
        pc.UnitiTimesL(BOOL),
        Times(Eta(FALSE, BOOL), pc.Id(BOOL)),
        pc.AssocrTimes(BOOL, Frac(BOOL, FALSE), BOOL),
        Times(pc.Id(BOOL), pc.SwapTimes(Frac(BOOL, FALSE), BOOL)),
        Times(pc.Id(BOOL), Eps(FALSE, BOOL)),
        pc.SwapTimes(BOOL, ONE),
        pc.UniteTimesL(BOOL))


def id_via_ancilla() -> Comb:
    """Identity on booleans that moves its input onto a borrowed ancilla.

    The ancilla (false) is routed to the output and the original input
    wire, cleared to false by the second CNOT, is collected instead.
    """
    g = Frac(BOOL, FALSE)
    swap_then_cnot = Seq(pc.SwapTimes(BOOL, BOOL), CNOT)
    return seq(
        # allocate: ((anc, gc), x)
        pc.UnitiTimesL(BOOL),
        Times(Eta(FALSE, BOOL), pc.Id(BOOL)),
        # interact: ((x, anc), gc), anc ^= x, then x ^= anc
        Seq(pc.SwapTimes(Prod(BOOL, g), BOOL),
            pc.AssoclTimes(BOOL, BOOL, g)),
        Times(CNOT, pc.Id(g)),
        Times(swap_then_cnot, pc.Id(g)),
        # collect the cleared input wire: (anc, (x, gc))
        pc.AssocrTimes(BOOL, BOOL, g),
        seq(Times(pc.Id(BOOL), Eps(FALSE, BOOL)),
            pc.SwapTimes(BOOL, ONE),
            pc.UniteTimesL(BOOL)))


def revx(v1: Val, t1: Ty, v2: Val, t2: Ty) -> Comb:
    """Split the collector of a pair into collectors of its components.

    ``1/(v1, v2) <-> 1/v1 * 1/v2``: allocate ``v1`` and ``v2`` with their
    collectors, then feed the pair to the original collector.
    """
    _check_witness(v1, t1)
    _check_witness(v2, t2)
    pair = Pair(v1, v2)
    t12 = Prod(t1, t2)
    g1, g2, g12 = Frac(t1, v1), Frac(t2, v2), Frac(t12, pair)
    types = {"x1": t1, "x2": t2, "g1": g1, "g2": g2, "g12": g12}
    return seq(
        pc.UnitiTimesL(g12),
        Times(Eta(v1, t1), pc.Id(g12)),
        pc.UnitiTimesL(Prod(Prod(t1, g1), g12)),
        Times(Eta(v2, t2), pc.Id(Prod(Prod(t1, g1), g12))),
        route((("x2", "g2"), (("x1", "g1"), "g12")),
              ((("x1", "x2"), "g12"), ("g1", "g2")), types),
        Times(Eps(pair, t12), pc.Id(Prod(g1, g2))),
        pc.UniteTimesL(Prod(g1, g2)))

