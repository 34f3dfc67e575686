"""Random well-typed programs for property testing.

All generators take a :class:`random.Random` so corpora are reproducible
from a seed, and work with hypothesis by seeding them from ``st.integers()``.
"""

from __future__ import annotations

import random

from fracpi import combinators as pc
from fracpi import pointed as pp
from fracpi.frac import Eps, Eta
from fracpi.model import (BOOL, ONE, ZERO, Frac, Prod, Sum, Ty, Zero,
                          enumerate_values, size)

MAX_SIZE = 8
MAX_DEPTH = 6


def random_type(rng: random.Random, max_size: int = MAX_SIZE,
                nonempty: bool = False, height: int = 3) -> Ty:
    while True:
        t = _raw_type(rng, height)
        n = size(t)
        if n <= max_size and (n > 0 or not nonempty):
            return t


def _raw_type(rng, height):
    r = rng.random()
    if height == 0 or r < 0.25:
        return rng.choice([ZERO, ONE, ONE, BOOL, BOOL, BOOL])
    if r < 0.6:
        return Sum(_raw_type(rng, height - 1), _raw_type(rng, height - 1))
    return Prod(_raw_type(rng, height - 1), _raw_type(rng, height - 1))


def _primitives(rng, t: Ty):
    """Every primitive whose domain is ``t`` (a few chosen at random)."""
    out = [pc.Id(t), pc.UnitiTimesL(t), pc.UnitiPlusL(t)]
    if isinstance(t, Sum):
        a, b = t.left, t.right
        out.append(pc.SwapPlus(a, b))
        if isinstance(a, Zero):
            out.append(pc.UnitePlusL(b))
        if isinstance(b, Sum):
            out.append(pc.AssoclPlus(a, b.left, b.right))
        if isinstance(a, Sum):
            out.append(pc.AssocrPlus(a.left, a.right, b))
        if isinstance(a, Prod) and isinstance(b, Prod) and a.snd == b.snd:
            out.append(pc.Factor(a.fst, b.fst, a.snd))
    elif isinstance(t, Prod):
        a, b = t.fst, t.snd
        out.append(pc.SwapTimes(a, b))
        if a == ONE:
            out.append(pc.UniteTimesL(b))
        if isinstance(b, Prod):
            out.append(pc.AssoclTimes(a, b.fst, b.snd))
        if isinstance(a, Prod):
            out.append(pc.AssocrTimes(a.fst, a.snd, b))
        if isinstance(a, Zero):
            out.append(pc.Absorbr(b))
        if isinstance(a, Sum):
            out.append(pc.Dist(a.left, a.right, b))
        if a == BOOL and size(b) <= MAX_SIZE // 2:
            out.append(pc.controlled(_endo(rng, b)))
    elif isinstance(t, Zero):
        out.append(pc.Factorzl(random_type(rng, height=1)))
    for g in pc.gates().values():
        if g.dom == t:
            out.append(g)
    return out


def _endo(rng, t):
    """A random ``t <-> t``: a program followed by a shuffle back to ``t``."""
    c = random_comb(rng, t, 2)
    if c.cod == t:
        return c
    return pc.Seq(c, pc.invert(c))


def random_comb(rng: random.Random, dom: Ty, depth: int = MAX_DEPTH) -> pc.Comb:
    """A random core combinator with domain ``dom`` and nesting <= depth."""
    if depth <= 0 or rng.random() < 0.25:
        # avoid piling units onto units; prefer shape-changing primitives
        prims = _primitives(rng, dom)
        return rng.choice(prims[2:] if len(prims) > 3 else prims)
    moves = ["seq", "seq", "prim"]
    if isinstance(dom, Sum):
        moves.append("plus")
    if isinstance(dom, Prod):
        moves.append("times")
    move = rng.choice(moves)
    if move == "seq":
        c1 = random_comb(rng, dom, depth - 1)
        return pc.Seq(c1, random_comb(rng, c1.cod, depth - 1))
    if move == "plus":
        return pc.Plus(random_comb(rng, dom.left, depth - 1),
                       random_comb(rng, dom.right, depth - 1))
    if move == "times":
        return pc.Times(random_comb(rng, dom.fst, depth - 1),
                        random_comb(rng, dom.snd, depth - 1))
    return rng.choice(_primitives(rng, dom))


def random_program(rng: random.Random, depth: int = MAX_DEPTH) -> pc.Comb:
    # mostly inhabited domains, so exhaustive checks have something to check
    t = random_type(rng, nonempty=rng.random() < 0.9)
    return random_comb(rng, t, depth)


def random_frac_program(rng: random.Random, depth: int = 4) -> pc.Comb:
    """A random program that allocates and possibly collects an ancilla.

    The ancilla ``v`` goes through a random endomorphism before it is
    handed back to its collector, so the collection fails exactly on the
    runs where that endomorphism moves ``v``.  Some programs instead keep
    the ancilla and its collector in the output.
    """
    payload = random_type(rng, nonempty=True, max_size=4)
    t = random_type(rng, nonempty=True)
    v = rng.choice(enumerate_values(t))
    body = random_comb(rng, payload, depth)
    if rng.random() < 0.3:
        return pc.Seq(pc.UnitiTimesL(payload),
                      pc.Times(Eta(v, t), body))
    borrow = pc.seq(Eta(v, t), pc.Times(_endo(rng, t), pc.Id(Frac(t, v))),
                    Eps(v, t))
    return pc.seq(pc.UnitiTimesL(payload), pc.Times(borrow, body),
                  pc.UniteTimesL(body.cod))


# ---------------------------------------------------------------------------
# Pointed programs

def random_pt_type(rng: random.Random, height: int = 2) -> pp.PtTy:
    r = rng.random()
    if height == 0 or r < 0.45:
        t = random_type(rng, nonempty=True)
        return pp.Pt(t, rng.choice(enumerate_values(t)))
    if r < 0.7:
        return pp.PProd(random_pt_type(rng, height - 1),
                        random_pt_type(rng, height - 1))
    if r < 0.85:
        return pp.PSing(random_pt_type(rng, height - 1))
    return pp.PRecip(random_pt_type(rng, height - 1))


def _pt_moves(rng, T, depth):
    moves = [lambda: pp.PId(T), lambda: pp.Return(T),
             lambda: pp.PUnitiTimesL(T)]
    if depth > 0:
        moves.append(lambda: _borrow(rng, T, depth - 1))
    if isinstance(T, pp.Pt):
        moves.append(lambda: pp.Lift(random_comb(rng, T.t, 3), T.v))
        if isinstance(T.t, Prod):
            moves.append(lambda: pp.Split(T))
        if T == pp.UNIT:
            moves.append(lambda: pp.PEta(random_pt_type(rng, 1)))
    if isinstance(T, pp.PProd):
        a, b = T.fst, T.snd
        moves.append(lambda: pp.PSwapTimes(a, b))
        if isinstance(a, pp.Pt) and isinstance(b, pp.Pt):
            moves.append(lambda: pp.Merge(a, b))
        if isinstance(b, pp.PProd):
            moves.append(lambda: pp.PAssoclTimes(a, b.fst, b.snd))
        if isinstance(a, pp.PProd):
            moves.append(lambda: pp.PAssocrTimes(a.fst, a.snd, b))
        if a == pp.UNIT:
            moves.append(lambda: pp.PUniteTimesL(b))
        if isinstance(a, pp.PSing) and isinstance(b, pp.PSing):
            moves.append(lambda: pp.TensorSing(a.inner, b.inner))
        if isinstance(a, pp.PSing) and b == pp.PRecip(a.inner):
            moves.append(lambda: pp.PEps(a.inner))
    if isinstance(T, pp.PSing):
        inner = T.inner
        moves.append(lambda: pp.Extract(inner))
        moves.append(lambda: pp.DuplicateSing(inner))
        if isinstance(inner, pp.PSing):
            moves.append(lambda: pp.JoinSing(inner.inner))
        if isinstance(inner, pp.PProd):
            moves.append(lambda: pp.CotensorSing(inner.fst, inner.snd))
    if isinstance(T, pp.PRecip):
        if isinstance(T.inner, pp.PRecip):
            moves.append(lambda: pp.revrev(T.inner.inner))
        if isinstance(T.inner, pp.PProd):
            moves.append(lambda: pp.prevx(T.inner.fst, T.inner.snd))
    return moves


def _borrow(rng, T, depth):
    """Allocate a singleton with its collector, work on it, then collect it.

    The work on the singleton is a random program followed by its inverse,
    so it reaches the collector with the focus it was allocated with.
    """
    A = random_pt_type(rng, 1)
    f = random_pt_comb(rng, A, min(depth, 2))
    restore = pp.PSeq(f, pp.pt_invert(f))
    work = random_pt_comb(rng, T, min(depth, 2))
    return pp.pseq(
        pp.PUnitiTimesL(T),
        pp.PTimes(pp.PEta(A), pp.PId(T)),
        pp.PTimes(pp.PTimes(pp.SingMap(restore), pp.PId(pp.PRecip(A))), work),
        pp.PTimes(pp.PEps(A), pp.PId(work.cod)),
        pp.PUniteTimesL(work.cod))


def random_pt_comb(rng: random.Random, dom: pp.PtTy,
                   depth: int = MAX_DEPTH) -> pp.PtComb:
    if depth <= 0 or rng.random() < 0.3:
        return rng.choice(_pt_moves(rng, dom, depth))()
    move = rng.choice(["seq", "seq", "times", "sing", "step"])
    if move == "times" and isinstance(dom, pp.PProd):
        return pp.PTimes(random_pt_comb(rng, dom.fst, depth - 1),
                         random_pt_comb(rng, dom.snd, depth - 1))
    if move == "sing" and isinstance(dom, pp.PSing):
        return pp.SingMap(random_pt_comb(rng, dom.inner, depth - 1))
    if move == "step":
        return rng.choice(_pt_moves(rng, dom, depth))()
    c1 = random_pt_comb(rng, dom, depth - 1)
    return pp.PSeq(c1, random_pt_comb(rng, c1.cod, depth - 1))


def random_pt_program(rng: random.Random,
                      depth: int = MAX_DEPTH) -> pp.PtComb:
    return random_pt_comb(rng, random_pt_type(rng), depth)
