"""Named example circuits and their verification.

Each :class:`NamedCircuit` pairs a dynamic (fractional) program with a
reference function and, where available, a family of pointed programs
indexed by the input value.  :func:`verify` runs every check on every
input of the domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from fracpi import pointed as pp
from fracpi.combinators import CNOT, TOFFOLI, Comb, invert
from fracpi.extraction import check_ext, ext_comb, ext_ty
from fracpi.frac import eval_d, id_via_ancilla, revx
from fracpi.model import (BOOL, FALSE, GC, TRUE, Pair, Val, bits, bools,
                          enumerate_values, to_bits)
from fracpi.pointed import (POINTED, Extract, Lift, Merge, PEps, PEta, PId,
                            PRecip, Pt, PTimes, PUniteTimesL, PUnitiTimesL,
                            Return, pseq, pt_invert)
from fracpi.wiring import leaves, route

ANCILLA = Pt(BOOL, FALSE)


@dataclass
class NamedCircuit:
    name: str
    dynamic: Comb
    spec: Callable[[Val], Val]
    pointed: Optional[Callable[[Val], pp.PtComb]] = None
    # every family member extracts to the very same program
    uniform: bool = False
    description: str = ""


# ---------------------------------------------------------------------------
# Pointed wiring helpers

def _components(T: Pt, n: int) -> List[Pt]:
    """Split ``t1 * (t2 * ...)``#v into ``n`` pointed components."""
    out = []
    t, v = T.t, T.v
    for _ in range(n - 1):
        out.append(Pt(t.fst, v.fst))
        t, v = t.snd, v.snd
    out.append(Pt(t, v))
    return out


def merge(Ts: List[Pt]) -> pp.PtComb:
    """``T1 * (T2 * (...))  ->  (t1 * (t2 * ...))#(v1, (v2, ...))``"""
    if len(Ts) == 1:
        return PId(Ts[0])
    rest = merge(Ts[1:])
    return pp.PSeq(PTimes(PId(Ts[0]), rest), Merge(Ts[0], rest.cod))


def gate(c: Comb, Ts: List[Pt]) -> pp.PtComb:
    """Apply the core gate ``c`` to a right-nested bundle of pointed wires."""
    m = merge(Ts)
    lifted = Lift(c, m.cod.v)
    out = _components(lifted.cod, len(Ts))
    return pseq(m, lifted, pt_invert(merge(out)))


class Wires:
    """A bundle of labelled pointed wires that programs are appended to."""

    def __init__(self, shape, types: Dict[str, pp.PtTy]):
        self.shape = shape
        self.types = dict(types)
        self.steps: List[pp.PtComb] = []

    def ty(self, shape):
        if isinstance(shape, str):
            return self.types[shape]
        return pp.PProd(self.ty(shape[0]), self.ty(shape[1]))

    def route(self, shape):
        if shape != self.shape:
            self.steps.append(route(self.shape, shape, self.types, POINTED))
            self.shape = shape

    def _assign(self, shape, T):
        if isinstance(shape, str):
            self.types[shape] = T
        else:
            self._assign(shape[0], T.fst)
            self._assign(shape[1], T.snd)

    def gate(self, c: Comb, labels):
        """Route ``labels`` to the front and apply the core gate ``c`` there."""
        labels = list(labels)
        rest = [x for x in leaves(self.shape) if x not in labels]
        front = labels[0] if len(labels) == 1 else _nest(labels)
        back = rest[0] if len(rest) == 1 else _nest(rest)
        self.route((front, back))
        g = gate(c, [self.types[x] for x in labels])
        self.steps.append(PTimes(g, PId(self.ty(back))))
        self._assign(front, g.cod)

    def program(self) -> pp.PtComb:
        return pseq(*self.steps)


def _nest(labels):
    out = labels[-1]
    for x in reversed(labels[:-1]):
        out = (x, out)
    return out


def with_ancilla(T0: Pt, n: int, body: Callable[[Wires], None]) -> pp.PtComb:
    """Borrow a false ancilla around ``body`` acting on the ``n`` wires of T0.

    Wires are labelled ``x1..xn`` plus ``a`` (ancilla) and ``g`` (its
    collector).  The ancilla is returned through ``Return(ANCILLA)``, so the
    program only type checks when ``body`` restores it to false.
    """
    xs = _components(T0, n)
    names = [f"x{i + 1}" for i in range(n)]
    inputs = _nest(names)
    allocate = pseq(
        PUnitiTimesL(T0),
        PTimes(PEta(ANCILLA), PId(T0)),
        PTimes(PTimes(Extract(ANCILLA), PId(PRecip(ANCILLA))),
               pt_invert(merge(xs))))
    w = Wires((("a", "g"), inputs),
              {"a": ANCILLA, "g": PRecip(ANCILLA), **dict(zip(names, xs))})
    body(w)
    w.route((("a", "g"), inputs))
    outs = [w.types[x] for x in names]
    m = merge(outs)
    collect = pseq(
        PTimes(PTimes(Return(w.types["a"]), PId(w.types["g"])), m),
        PTimes(PEps(ANCILLA), PId(m.cod)),
        PUniteTimesL(m.cod))
    return pseq(allocate, w.program(), collect)


# ---------------------------------------------------------------------------
# Reference functions

def _toffoli_spec(v: Val) -> Val:
    *controls, target = to_bits(v)
    return bits(*controls, target ^ all(controls))


def _identity(v: Val) -> Val:
    return v


# ---------------------------------------------------------------------------
# Circuits

def toffoli3_family(v: Val) -> pp.PtComb:
    return Lift(TOFFOLI, v)


def cnot_circuit() -> NamedCircuit:
    return NamedCircuit(
        name="cnot", dynamic=CNOT, spec=_toffoli_spec,
        pointed=lambda v: Lift(CNOT, v), uniform=True,
        description="controlled NOT built from the control combinator")


def toffoli3_verified() -> NamedCircuit:
    return NamedCircuit(
        name="toffoli3", dynamic=TOFFOLI, spec=_toffoli_spec,
        pointed=toffoli3_family, uniform=True,
        description="3-bit Toffoli, checked point by point via lifting")


def _toffoli4_body(w: Wires):
    w.gate(TOFFOLI, ["x1", "x2", "a"])    # a = x1 & x2
    w.gate(TOFFOLI, ["a", "x3", "x4"])    # x4 ^= a & x3
    w.gate(TOFFOLI, ["x1", "x2", "a"])    # uncompute a


def toffoli4_family(v: Val) -> pp.PtComb:
    """4-bit Toffoli at input ``v`` using one borrowed false ancilla."""
    return with_ancilla(Pt(bools(4), v), 4, _toffoli4_body)


def toffoli4() -> NamedCircuit:
    dynamic = ext_comb(toffoli4_family(bits(0, 0, 0, 0)))
    return NamedCircuit(
        name="toffoli4", dynamic=dynamic, spec=_toffoli_spec,
        pointed=toffoli4_family, uniform=True,
        description="4-bit Toffoli from three 3-bit Toffolis and an ancilla")


def _id_body(w: Wires):
    w.gate(CNOT, ["x1", "a"])    # a = x
    w.gate(CNOT, ["a", "x1"])    # x = 0


def id_via_ancilla_family(v: Val) -> pp.PtComb:
    # the borrowed wire leaves as the output; the cleared input wire is
    # collected in its place, so the two labels trade places
    def body(w: Wires):
        _id_body(w)
        w.types["a"], w.types["x1"] = w.types["x1"], w.types["a"]
        w.shape = _swap_labels(w.shape, "a", "x1")
    return with_ancilla(Pt(BOOL, v), 1, body)


def _swap_labels(shape, x, y):
    if isinstance(shape, str):
        return {x: y, y: x}.get(shape, shape)
    return (_swap_labels(shape[0], x, y), _swap_labels(shape[1], x, y))


def id_circuit() -> NamedCircuit:
    return NamedCircuit(
        name="id-via-ancilla", dynamic=id_via_ancilla(), spec=_identity,
        pointed=id_via_ancilla_family, uniform=True,
        description="identity that returns the ancilla and collects the input")


def revx_circuit() -> NamedCircuit:
    A, B = Pt(BOOL, FALSE), Pt(BOOL, TRUE)
    return NamedCircuit(
        name="revx", dynamic=revx(FALSE, BOOL, TRUE, BOOL),
        spec=lambda v: Pair(GC, GC),
        pointed=lambda v: pp.prevx(A, B), uniform=True,
        description="split 1/(F, T) into 1/F * 1/T")


def revrev_circuit() -> NamedCircuit:
    family = lambda v: pp.revrev(ANCILLA)  # noqa: E731
    return NamedCircuit(
        name="revrev", dynamic=ext_comb(family(GC)), spec=lambda v: FALSE,
        pointed=family, uniform=True,
        description="collect a collector, rematerialising its value")


def gallery() -> List[NamedCircuit]:
    return [id_circuit(), revx_circuit(), revrev_circuit(), cnot_circuit(),
            toffoli3_verified(), toffoli4()]


def by_name(name: str) -> NamedCircuit:
    for c in gallery():
        if c.name == name:
            return c
    raise KeyError(name)


# ---------------------------------------------------------------------------
# Verification

@dataclass
class Row:
    input: Val
    output: Optional[Val]
    expected: Val
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


@dataclass
class Report:
    name: str
    rows: List[Row]
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return sum(r.ok for r in self.rows)

    @property
    def ok(self):
        return not self.failures and all(r.ok for r in self.rows)


def verify(nc: NamedCircuit) -> Report:
    d = nc.dynamic
    domain = enumerate_values(d.dom)
    inv = invert(d)
    rows = []
    extracted = {}
    for v in domain:
        out = eval_d(d, v)
        row = Row(v, out, nc.spec(v))
        if out is None:
            row.failures.append("dynamic evaluation failed its GC check")
        elif out != row.expected:
            row.failures.append(f"expected {row.expected}, got {out}")
        elif eval_d(inv, out) != v:
            row.failures.append("inverse does not restore the input")
        if nc.pointed is not None:
            p = nc.pointed(v)
            if ext_ty(p.dom).val != v:
                row.failures.append("pointed program is not focused on input")
            if ext_ty(p.cod).val != row.expected:
                row.failures.append("pointed codomain disagrees with the reference function")
            if not check_ext(p):
                row.failures.append("extraction failed its GC check")
            e = extracted[v] = ext_comb(p)
            if any(eval_d(e, w) != eval_d(d, w) for w in domain):
                row.failures.append("extraction differs from dynamic program")
        rows.append(row)
    report = Report(nc.name, rows)
    if nc.uniform and len(set(extracted.values())) > 1:
        report.failures.append("family members extract to different programs")
    return report

