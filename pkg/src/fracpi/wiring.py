"""Build rewiring combinators between nested product shapes.

A shape is a binary tree of wire labels: a label is a ``str`` and a node is
a 2-tuple.  :func:`route` produces a combinator from one shape to another
shape over the same labels, using only swap and associativity of the
product plus identities.  The routing is fully deterministic:

1. right-normalise the source (``assocr`` until it is a right-nested list),
2. bubble-sort the list into the target order by adjacent swaps,
3. apply the inverse of the right-normalisation of the target.

The same algorithm serves the core/dynamic language and the pointed one
through a small builder object (see :data:`CORE` and
:data:`fracpi.pointed.POINTED`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple, Union

from fracpi import combinators as pc
from fracpi.model import Prod

Shape = Union[str, Tuple["Shape", "Shape"]]


@dataclass(frozen=True)
class Builder:
    prod: Callable
    id: Callable
    swap: Callable
    assocl: Callable
    assocr: Callable
    times: Callable
    seq: Callable
    invert: Callable


CORE = Builder(prod=Prod, id=pc.Id, swap=pc.SwapTimes, assocl=pc.AssoclTimes,
               assocr=pc.AssocrTimes, times=pc.Times, seq=pc.Seq,
               invert=pc.invert)


def leaves(shape: Shape) -> list:
    if isinstance(shape, str):
        return [shape]
    return leaves(shape[0]) + leaves(shape[1])


class _Router:
    def __init__(self, b: Builder, types: Dict[str, Any]):
        self.b = b
        self.types = types

    def ty(self, shape):
        if isinstance(shape, str):
            return self.types[shape]
        return self.b.prod(self.ty(shape[0]), self.ty(shape[1]))

    def then(self, *cs):
        out = None
        for c in cs:
            if c is None:
                continue
            out = c if out is None else self.b.seq(out, c)
        return out

    def under(self, left, c):
        # lift ``c`` to act on the right component of (left, _)
        if c is None:
            return None
        return self.b.times(self.b.id(self.ty(left)), c)

    def prepend(self, left, rn):
        """(left, rn) with rn right-nested  ->  right-nested."""
        if isinstance(left, str):
            return None, (left, rn)
        a, b = left
        c1 = self.b.assocr(self.ty(a), self.ty(b), self.ty(rn))
        c2, bn = self.prepend(b, rn)
        c3, out = self.prepend(a, bn)
        return self.then(c1, self.under(a, c2), c3), out

    def normalise(self, shape):
        if isinstance(shape, str):
            return None, shape
        left, right = shape
        cr, rn = self.normalise(right)
        cp, out = self.prepend(left, rn)
        return self.then(self.under(left, cr), cp), out

    def swap_at(self, order, i):
        """Swap positions i and i+1 of the right-nested list ``order``."""
        n = len(order)
        x, y = order[i], order[i + 1]
        if i == n - 2:
            c = self.b.swap(self.ty(x), self.ty(y))
        else:
            rest = _nest(order[i + 2:])
            c = self.then(
                self.b.assocl(self.ty(x), self.ty(y), self.ty(rest)),
                self.b.times(self.b.swap(self.ty(x), self.ty(y)),
                             self.b.id(self.ty(rest))),
                self.b.assocr(self.ty(y), self.ty(x), self.ty(rest)))
        for k in range(i - 1, -1, -1):
            c = self.under(order[k], c)
        return c

    def permute(self, order, target):
        order = list(order)
        pos = {label: k for k, label in enumerate(target)}
        steps = []
        for end in range(len(order) - 1, 0, -1):
            for i in range(end):
                if pos[order[i]] > pos[order[i + 1]]:
                    steps.append(self.swap_at(order, i))
                    order[i], order[i + 1] = order[i + 1], order[i]
        return self.then(*steps)


def _nest(labels):
    out = labels[-1]
    for label in reversed(labels[:-1]):
        out = (label, out)
    return out


def route(src: Shape, dst: Shape, types: Dict[str, Any],
          builder: Builder = CORE) -> Any:
    """Combinator rewiring ``src`` into ``dst``; ``types`` maps label to type."""
    src_labels, dst_labels = leaves(src), leaves(dst)
    if sorted(src_labels) != sorted(dst_labels) or \
            len(set(src_labels)) != len(src_labels):
        raise ValueError(f"cannot route {src} to {dst}")
    r = _Router(builder, types)
    c_src, _ = r.normalise(src)
    c_perm = r.permute(src_labels, dst_labels)
    c_dst, _ = r.normalise(dst)
    c_back: Optional[Any] = None if c_dst is None else builder.invert(c_dst)
    out = r.then(c_src, c_perm, c_back)
    if out is None:
        return builder.id(r.ty(src))
    return out
