"""Reversible combinators over finite types.

Every combinator denotes a type isomorphism and hence a permutation of
the values of its domain.  Primitives carry their type instantiation, so
``dom``/``cod`` are computed when the term is built and an ill-composed
sequence is rejected immediately with :class:`TypeMismatch`.

The fractional extension (``Eta``/``Eps`` in :mod:`fracpi.frac`) subclasses
:class:`Comb` as well; :func:`evaluate` only accepts core terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from fracpi.errors import IllTyped, TypeMismatch
from fracpi.model import (ONE, TT, ZERO, InL, InR, Pair, Prod, Sum, Ty, Val,
                          Zero, has_type, is_core_ty)


class Comb:
    """Base class; subclasses implement ``_infer``, ``_run`` and ``inverse``."""

    def __post_init__(self):
        dom, cod = self._infer()
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        core = is_core_ty(dom) and is_core_ty(cod) and all(
            c.core for c in self.children())
        object.__setattr__(self, "core", core)

    def _infer(self):
        raise NotImplementedError

    def _run(self, v: Val) -> Val:
        raise NotImplementedError

    def inverse(self) -> "Comb":
        raise NotImplementedError

    def children(self):
        return ()

    def __str__(self):
        from fracpi.syntax import show
        return show(self)


class Primitive(Comb):
    keyword: str

    @property
    def annotation(self) -> Ty:
        """The type written after ``@`` in concrete syntax (the domain)."""
        return self.dom

    @classmethod
    def from_annotation(cls, t: Ty) -> "Primitive":
        raise NotImplementedError


def _expect(cond, cls, t):
    if not cond:
        raise TypeMismatch(cls.keyword, f"a type of the form {cls._shape}", t)


@dataclass(frozen=True)
class Id(Primitive):
    t: Ty
    keyword = "id"
    _shape = "t"

    def _infer(self):
        return self.t, self.t

    def _run(self, v):
        return v

    def inverse(self):
        return self

    @classmethod
    def from_annotation(cls, t):
        return cls(t)


@dataclass(frozen=True)
class UnitePlusL(Primitive):
    t: Ty
    keyword = "unite+l"
    _shape = "(+ 0 t)"

    def _infer(self):
        return Sum(ZERO, self.t), self.t

    def _run(self, v):
        return v.v

    def inverse(self):
        return UnitiPlusL(self.t)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Sum) and isinstance(t.left, Zero), cls, t)
        return cls(t.right)


@dataclass(frozen=True)
class UnitiPlusL(Primitive):
    t: Ty
    keyword = "uniti+l"
    _shape = "t"

    def _infer(self):
        return self.t, Sum(ZERO, self.t)

    def _run(self, v):
        return InR(v)

    def inverse(self):
        return UnitePlusL(self.t)

    @classmethod
    def from_annotation(cls, t):
        return cls(t)


@dataclass(frozen=True)
class SwapPlus(Primitive):
    t1: Ty
    t2: Ty
    keyword = "swap+"
    _shape = "(+ t1 t2)"

    def _infer(self):
        return Sum(self.t1, self.t2), Sum(self.t2, self.t1)

    def _run(self, v):
        return InR(v.v) if isinstance(v, InL) else InL(v.v)

    def inverse(self):
        return SwapPlus(self.t2, self.t1)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Sum), cls, t)
        return cls(t.left, t.right)


@dataclass(frozen=True)
class AssoclPlus(Primitive):
    t1: Ty
    t2: Ty
    t3: Ty
    keyword = "assocl+"
    _shape = "(+ t1 (+ t2 t3))"

    def _infer(self):
        return (Sum(self.t1, Sum(self.t2, self.t3)),
                Sum(Sum(self.t1, self.t2), self.t3))

    def _run(self, v):
        if isinstance(v, InL):
            return InL(v)
        if isinstance(v.v, InL):
            return InL(InR(v.v.v))
        return InR(v.v.v)

    def inverse(self):
        return AssocrPlus(self.t1, self.t2, self.t3)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Sum) and isinstance(t.right, Sum), cls, t)
        return cls(t.left, t.right.left, t.right.right)


@dataclass(frozen=True)
class AssocrPlus(Primitive):
    t1: Ty
    t2: Ty
    t3: Ty
    keyword = "assocr+"
    _shape = "(+ (+ t1 t2) t3)"

    def _infer(self):
        return (Sum(Sum(self.t1, self.t2), self.t3),
                Sum(self.t1, Sum(self.t2, self.t3)))

    def _run(self, v):
        if isinstance(v, InR):
            return InR(InR(v.v))
        if isinstance(v.v, InL):
            return v.v
        return InR(InL(v.v.v))

    def inverse(self):
        return AssoclPlus(self.t1, self.t2, self.t3)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Sum) and isinstance(t.left, Sum), cls, t)
        return cls(t.left.left, t.left.right, t.right)


@dataclass(frozen=True)
class UniteTimesL(Primitive):
    t: Ty
    keyword = "unite*l"
    _shape = "(* 1 t)"

    def _infer(self):
        return Prod(ONE, self.t), self.t

    def _run(self, v):
        return v.snd

    def inverse(self):
        return UnitiTimesL(self.t)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Prod) and t.fst == ONE, cls, t)
        return cls(t.snd)


@dataclass(frozen=True)
class UnitiTimesL(Primitive):
    t: Ty
    keyword = "uniti*l"
    _shape = "t"

    def _infer(self):
        return self.t, Prod(ONE, self.t)

    def _run(self, v):
        return Pair(TT, v)

    def inverse(self):
        return UniteTimesL(self.t)

    @classmethod
    def from_annotation(cls, t):
        return cls(t)


@dataclass(frozen=True)
class SwapTimes(Primitive):
    t1: Ty
    t2: Ty
    keyword = "swap*"
    _shape = "(* t1 t2)"

    def _infer(self):
        return Prod(self.t1, self.t2), Prod(self.t2, self.t1)

    def _run(self, v):
        return Pair(v.snd, v.fst)

    def inverse(self):
        return SwapTimes(self.t2, self.t1)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Prod), cls, t)
        return cls(t.fst, t.snd)


@dataclass(frozen=True)
class AssoclTimes(Primitive):
    t1: Ty
    t2: Ty
    t3: Ty
    keyword = "assocl*"
    _shape = "(* t1 (* t2 t3))"

    def _infer(self):
        return (Prod(self.t1, Prod(self.t2, self.t3)),
                Prod(Prod(self.t1, self.t2), self.t3))

    def _run(self, v):
        return Pair(Pair(v.fst, v.snd.fst), v.snd.snd)

    def inverse(self):
        return AssocrTimes(self.t1, self.t2, self.t3)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Prod) and isinstance(t.snd, Prod), cls, t)
        return cls(t.fst, t.snd.fst, t.snd.snd)


@dataclass(frozen=True)
class AssocrTimes(Primitive):
    t1: Ty
    t2: Ty
    t3: Ty
    keyword = "assocr*"
    _shape = "(* (* t1 t2) t3)"

    def _infer(self):
        return (Prod(Prod(self.t1, self.t2), self.t3),
                Prod(self.t1, Prod(self.t2, self.t3)))

    def _run(self, v):
        return Pair(v.fst.fst, Pair(v.fst.snd, v.snd))

    def inverse(self):
        return AssoclTimes(self.t1, self.t2, self.t3)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Prod) and isinstance(t.fst, Prod), cls, t)
        return cls(t.fst.fst, t.fst.snd, t.snd)


@dataclass(frozen=True)
class Absorbr(Primitive):
    t: Ty
    keyword = "absorbr"
    _shape = "(* 0 t)"

    def _infer(self):
        return Prod(ZERO, self.t), ZERO

    def _run(self, v):
        raise IllTyped("absorbr has an empty domain")

    def inverse(self):
        return Factorzl(self.t)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Prod) and isinstance(t.fst, Zero), cls, t)
        return cls(t.snd)


@dataclass(frozen=True)
class Factorzl(Primitive):
    t: Ty
    keyword = "factorzl"
    _shape = "(* 0 t)"

    def _infer(self):
        return ZERO, Prod(ZERO, self.t)

    def _run(self, v):
        raise IllTyped("factorzl has an empty domain")

    def inverse(self):
        return Absorbr(self.t)

    # The domain is always 0, so the codomain is written instead.
    @property
    def annotation(self):
        return self.cod

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Prod) and isinstance(t.fst, Zero), cls, t)
        return cls(t.snd)


@dataclass(frozen=True)
class Dist(Primitive):
    t1: Ty
    t2: Ty
    t3: Ty
    keyword = "dist"
    _shape = "(* (+ t1 t2) t3)"

    def _infer(self):
        return (Prod(Sum(self.t1, self.t2), self.t3),
                Sum(Prod(self.t1, self.t3), Prod(self.t2, self.t3)))

    def _run(self, v):
        tag = v.fst
        if isinstance(tag, InL):
            return InL(Pair(tag.v, v.snd))
        return InR(Pair(tag.v, v.snd))

    def inverse(self):
        return Factor(self.t1, self.t2, self.t3)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Prod) and isinstance(t.fst, Sum), cls, t)
        return cls(t.fst.left, t.fst.right, t.snd)


@dataclass(frozen=True)
class Factor(Primitive):
    t1: Ty
    t2: Ty
    t3: Ty
    keyword = "factor"
    _shape = "(+ (* t1 t3) (* t2 t3))"

    def _infer(self):
        return (Sum(Prod(self.t1, self.t3), Prod(self.t2, self.t3)),
                Prod(Sum(self.t1, self.t2), self.t3))

    def _run(self, v):
        p = v.v
        if isinstance(v, InL):
            return Pair(InL(p.fst), p.snd)
        return Pair(InR(p.fst), p.snd)

    def inverse(self):
        return Dist(self.t1, self.t2, self.t3)

    @classmethod
    def from_annotation(cls, t):
        _expect(isinstance(t, Sum) and isinstance(t.left, Prod)
                and isinstance(t.right, Prod)
                and t.left.snd == t.right.snd, cls, t)
        return cls(t.left.fst, t.right.fst, t.left.snd)


@dataclass(frozen=True)
class Seq(Comb):
    c1: Comb
    c2: Comb

    def _infer(self):
        if self.c1.cod != self.c2.dom:
            raise TypeMismatch("sequence", self.c1.cod, self.c2.dom)
        return self.c1.dom, self.c2.cod

    def _run(self, v):
        return self.c2._run(self.c1._run(v))

    def inverse(self):
        return Seq(self.c2.inverse(), self.c1.inverse())

    def children(self):
        return (self.c1, self.c2)


@dataclass(frozen=True)
class Plus(Comb):
    c1: Comb
    c2: Comb

    def _infer(self):
        return Sum(self.c1.dom, self.c2.dom), Sum(self.c1.cod, self.c2.cod)

    def _run(self, v):
        if isinstance(v, InL):
            return InL(self.c1._run(v.v))
        return InR(self.c2._run(v.v))

    def inverse(self):
        return Plus(self.c1.inverse(), self.c2.inverse())

    def children(self):
        return (self.c1, self.c2)


@dataclass(frozen=True)
class Times(Comb):
    c1: Comb
    c2: Comb

    def _infer(self):
        return Prod(self.c1.dom, self.c2.dom), Prod(self.c1.cod, self.c2.cod)

    def _run(self, v):
        return Pair(self.c1._run(v.fst), self.c2._run(v.snd))

    def inverse(self):
        return Times(self.c1.inverse(), self.c2.inverse())

    def children(self):
        return (self.c1, self.c2)


PRIMITIVES = {cls.keyword: cls for cls in (
    Id, UnitePlusL, UnitiPlusL, SwapPlus, AssoclPlus, AssocrPlus,
    UniteTimesL, UnitiTimesL, SwapTimes, AssoclTimes, AssocrTimes,
    Absorbr, Factorzl, Dist, Factor)}


def seq(*cs: Comb) -> Comb:
    """Right-nested sequential composition of one or more combinators."""
    return reduce(lambda acc, c: Seq(c, acc), reversed(cs[:-1]), cs[-1])


def infer(c: Comb):
    return c.dom, c.cod


def evaluate(c: Comb, v: Val) -> Val:
    if not c.core:
        raise IllTyped(f"not a core program: {c}")
    if not has_type(v, c.dom):
        raise IllTyped(f"{v} does not inhabit {c.dom}")
    return c._run(v)


def invert(c: Comb) -> Comb:
    return c.inverse()


def controlled(c: Comb) -> Comb:
    """Run ``c`` on the payload only when the control bit is true (``inr tt``)."""
    if c.dom != c.cod:
        raise TypeMismatch("controlled", c.dom, c.cod)
    t = c.dom
    return seq(Dist(ONE, ONE, t),
               Plus(Id(Prod(ONE, t)), Times(Id(ONE), c)),
               Factor(ONE, ONE, t))


NOT = SwapPlus(ONE, ONE)
CNOT = controlled(NOT)
TOFFOLI = controlled(CNOT)


def gates():
    return {"NOT": NOT, "CNOT": CNOT, "TOFFOLI": TOFFOLI}

