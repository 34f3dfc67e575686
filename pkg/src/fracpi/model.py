"""Finite types and their values.

Types are built from ``0``, ``1``, sums and products; the fractional type
``1/v`` and its single inhabitant, the GC token, live here as well so that
the dynamic language can reuse every structural operation (size,
enumeration, typing) unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List

from fracpi.errors import IllTyped


class Ty:
    __slots__ = ()

    def __str__(self):
        return show_ty(self)


@dataclass(frozen=True)
class Zero(Ty):
    pass


@dataclass(frozen=True)
class One(Ty):
    pass


@dataclass(frozen=True)
class Sum(Ty):
    left: Ty
    right: Ty


@dataclass(frozen=True)
class Prod(Ty):
    fst: Ty
    snd: Ty


@dataclass(frozen=True)
class Frac(Ty):
    """The type of a GC process that collects exactly ``value``."""

    base: Ty
    value: "Val"

    def __post_init__(self):
        if not has_type(self.value, self.base):
            raise IllTyped(
                f"{show_val(self.value)} does not inhabit {show_ty(self.base)}")


class Val:
    __slots__ = ()

    def __str__(self):
        return show_val(self)


@dataclass(frozen=True)
class Unit(Val):
    pass


@dataclass(frozen=True)
class InL(Val):
    v: Val


@dataclass(frozen=True)
class InR(Val):
    v: Val


@dataclass(frozen=True)
class Pair(Val):
    fst: Val
    snd: Val


@dataclass(frozen=True)
class GcToken(Val):
    """Runtime representative of any GC process; all information is in the type."""


ZERO = Zero()
ONE = One()
BOOL = Sum(ONE, ONE)
TT = Unit()
GC = GcToken()
FALSE = InL(TT)
TRUE = InR(TT)


def bit(b) -> Val:
    return TRUE if b else FALSE


def bits(*bs) -> Val:
    """Right-nested tuple of booleans: ``bits(1, 0, 1) == (T, (F, T))``."""
    if not bs:
        raise ValueError("bits() needs at least one bit")
    v = bit(bs[-1])
    for b in reversed(bs[:-1]):
        v = Pair(bit(b), v)
    return v


def to_bits(v: Val) -> tuple:
    if isinstance(v, Pair):
        return to_bits(v.fst) + to_bits(v.snd)
    if v == TRUE:
        return (True,)
    if v == FALSE:
        return (False,)
    raise ValueError(f"{v} is not a tuple of booleans")


def bools(n: int) -> Ty:
    """Right-nested product of ``n`` booleans."""
    t = BOOL
    for _ in range(n - 1):
        t = Prod(BOOL, t)
    return t


def size(t: Ty) -> int:
    if isinstance(t, Zero):
        return 0
    if isinstance(t, One):
        return 1
    if isinstance(t, Sum):
        return size(t.left) + size(t.right)
    if isinstance(t, Prod):
        return size(t.fst) * size(t.snd)
    if isinstance(t, Frac):
        return 1
    raise TypeError(t)


def iter_values(t: Ty) -> Iterator[Val]:
    if isinstance(t, One):
        yield TT
    elif isinstance(t, Sum):
        for v in iter_values(t.left):
            yield InL(v)
        for v in iter_values(t.right):
            yield InR(v)
    elif isinstance(t, Prod):
        snds = list(iter_values(t.snd))
        for a in iter_values(t.fst):
            for b in snds:
                yield Pair(a, b)
    elif isinstance(t, Frac):
        yield GC
    elif not isinstance(t, Zero):
        raise TypeError(t)


def enumerate_values(t: Ty) -> List[Val]:
    """All values of ``t``: left injections first, products row-major."""
    return list(iter_values(t))


def has_type(v: Val, t: Ty) -> bool:
    if isinstance(t, One):
        return isinstance(v, Unit)
    if isinstance(t, Sum):
        if isinstance(v, InL):
            return has_type(v.v, t.left)
        if isinstance(v, InR):
            return has_type(v.v, t.right)
        return False
    if isinstance(t, Prod):
        return (isinstance(v, Pair) and has_type(v.fst, t.fst)
                and has_type(v.snd, t.snd))
    if isinstance(t, Frac):
        return isinstance(v, GcToken)
    return False


def val_eq(v1: Val, v2: Val) -> bool:
    return v1 == v2


def is_core_ty(t: Ty) -> bool:
    if isinstance(t, (Zero, One)):
        return True
    if isinstance(t, Sum):
        return is_core_ty(t.left) and is_core_ty(t.right)
    if isinstance(t, Prod):
        return is_core_ty(t.fst) and is_core_ty(t.snd)
    return False


def show_ty(t: Ty) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Sum):
        return f"(+ {show_ty(t.left)} {show_ty(t.right)})"
    if isinstance(t, Prod):
        return f"(* {show_ty(t.fst)} {show_ty(t.snd)})"
    if isinstance(t, Frac):
        return f"(/ {show_val(t.value)} : {show_ty(t.base)})"
    raise TypeError(t)


def show_val(v: Val) -> str:
    if isinstance(v, Unit):
        return "tt"
    if isinstance(v, InL):
        return f"(inl {show_val(v.v)})"
    if isinstance(v, InR):
        return f"(inr {show_val(v.v)})"
    if isinstance(v, Pair):
        return f"({show_val(v.fst)} , {show_val(v.snd)})"
    if isinstance(v, GcToken):
        return "gc"
    raise TypeError(v)
