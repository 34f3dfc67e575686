"""S-expression concrete syntax for types, values and dynamic programs.

::

    ty   ::= 0 | 1 | (+ ty ty) | (* ty ty) | (/ val : ty)
    val  ::= tt | (inl val) | (inr val) | (val , val) | gc | F | T
    comb ::= prim @ ty | (; comb comb ...) | (p+ comb comb) | (p* comb comb)
           | (eta val : ty) | (eps val : ty)

``F``/``T`` abbreviate ``(inl tt)``/``(inr tt)``.  ``(; a b c)`` is
``(; a (; b c))``.  The type after ``@`` is the primitive's domain, except
for ``factorzl`` whose domain is always ``0`` and which is annotated with
its codomain.  ``#`` starts a comment running to the end of the line.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple

from fracpi import combinators as pc
from fracpi.errors import IllTyped, ParseError, TypeMismatch
from fracpi.frac import Eps, Eta
from fracpi.model import (FALSE, GC, ONE, TRUE, TT, ZERO, Frac, InL, InR,
                          Pair, Prod, Sum, Ty, Val, has_type, show_ty,
                          show_val)

__all__ = ["parse", "parse_ty", "parse_val", "show", "show_ty", "show_val",
           "pretty"]


class Token(NamedTuple):
    text: str
    line: int
    col: int


_TOKEN = re.compile(r"\s+|#[^\n]*|[(),:@]|[^\s(),:@#]+")


def tokenize(text: str) -> List[Token]:
    tokens = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        s = m.group()
        if not s.isspace() and not s.startswith("#"):
            tokens.append(Token(s, line, m.start() - line_start + 1))
        newlines = s.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + s.rindex("\n") + 1
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0
        lines = text.split("\n")
        self.end = Token("<end of input>", len(lines), len(lines[-1]) + 1)

    def peek(self, k=0):
        i = self.pos + k
        return self.tokens[i] if i < len(self.tokens) else self.end

    def next(self):
        tok = self.peek()
        if tok is self.end:
            raise ParseError("unexpected end of input", tok.line, tok.col)
        self.pos += 1
        return tok

    def expect(self, text):
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected '{text}', found '{tok.text}'",
                             tok.line, tok.col)
        return tok

    def done(self):
        tok = self.peek()
        if tok is not self.end:
            raise ParseError(f"unexpected '{tok.text}' after the end",
                             tok.line, tok.col)

    @staticmethod
    def error(tok, what):
        return ParseError(f"expected {what}, found '{tok.text}'",
                          tok.line, tok.col)

    # -- values -------------------------------------------------------------

    def val(self) -> Val:
        tok = self.next()
        atoms = {"tt": TT, "gc": GC, "F": FALSE, "T": TRUE,
                 "\U0001d53d": FALSE, "\U0001d54b": TRUE}
        if tok.text in atoms:
            return atoms[tok.text]
        if tok.text != "(":
            raise self.error(tok, "a value")
        head = self.peek().text
        if head in ("inl", "inr"):
            self.next()
            v = self.val()
            self.expect(")")
            return InL(v) if head == "inl" else InR(v)
        a = self.val()
        self.expect(",")
        b = self.val()
        self.expect(")")
        return Pair(a, b)

    # -- types --------------------------------------------------------------

    def ty(self) -> Ty:
        tok = self.next()
        if tok.text == "0":
            return ZERO
        if tok.text == "1":
            return ONE
        if tok.text != "(":
            raise self.error(tok, "a type")
        op = self.next()
        if op.text in ("+", "*"):
            a, b = self.ty(), self.ty()
            self.expect(")")
            return Sum(a, b) if op.text == "+" else Prod(a, b)
        if op.text == "/":
            v, t = self.annotated(tok)
            return Frac(t, v)
        raise self.error(op, "'+', '*' or '/'")

    def annotated(self, start):
        """``val : ty )`` with the value checked against the type."""
        v = self.val()
        self.expect(":")
        t = self.ty()
        self.expect(")")
        if not has_type(v, t):
            raise TypeMismatch(f"{start.line}:{start.col}",
                               f"a value of {show_ty(t)}", show_val(v))
        return v, t

    # -- combinators --------------------------------------------------------

    def comb(self) -> pc.Comb:
        tok = self.next()
        try:
            if tok.text in pc.PRIMITIVES:
                self.expect("@")
                return pc.PRIMITIVES[tok.text].from_annotation(self.ty())
            if tok.text != "(":
                raise self.error(tok, "a combinator")
            head = self.next()
            if head.text == ";":
                cs = [self.comb(), self.comb()]
                while self.peek().text != ")":
                    cs.append(self.comb())
                self.expect(")")
                return pc.seq(*cs)
            if head.text in ("p+", "p*"):
                a, b = self.comb(), self.comb()
                self.expect(")")
                return pc.Plus(a, b) if head.text == "p+" else pc.Times(a, b)
            if head.text in ("eta", "eps"):
                v, t = self.annotated(tok)
                return Eta(v, t) if head.text == "eta" else Eps(v, t)
            raise self.error(head, "';', 'p+', 'p*', 'eta' or 'eps'")
        except TypeMismatch as e:
            if re.match(r"\d+:\d+", str(e.location)):
                raise
            raise TypeMismatch(f"{tok.line}:{tok.col}: {e.location}",
                               e.expected, e.found) from None
        except IllTyped as e:
            raise TypeMismatch(f"{tok.line}:{tok.col}", "a well-typed term",
                               str(e)) from None


def _parse_all(text, method):
    p = _Parser(text)
    out = method(p)
    p.done()
    return out


def parse(text: str) -> pc.Comb:
    """Parse one program; raises ParseError or TypeMismatch with a position."""
    return _parse_all(text, _Parser.comb)


def parse_ty(text: str) -> Ty:
    return _parse_all(text, _Parser.ty)


def parse_val(text: str) -> Val:
    return _parse_all(text, _Parser.val)


_HEADS = {pc.Seq: ";", pc.Plus: "p+", pc.Times: "p*"}


def show(c: pc.Comb) -> str:
    """Canonical single-line text of ``c``."""
    if isinstance(c, pc.Primitive):
        return f"{c.keyword} @ {show_ty(c.annotation)}"
    if isinstance(c, (Eta, Eps)):
        name = "eta" if isinstance(c, Eta) else "eps"
        return f"({name} {show_val(c.v)} : {show_ty(c.t)})"
    head = _HEADS.get(type(c))
    if head is None:
        raise TypeError(f"no concrete syntax for {c!r}")
    return f"({head} {show(c.c1)} {show(c.c2)})"


def _seq_chain(c):
    out = []
    while isinstance(c, pc.Seq):
        out.append(c.c1)
        c = c.c2
    return out + [c]


def pretty(c: pc.Comb, width: int = 78, indent: int = 0) -> str:
    """Multi-line layout; sequence chains are flattened to ``(; a b c ...)``."""
    flat = show(c)
    if indent + len(flat) <= width or type(c) not in _HEADS:
        return flat
    parts = _seq_chain(c) if isinstance(c, pc.Seq) else [c.c1, c.c2]
    pad = " " * (indent + 2)
    body = "\n".join(pad + pretty(p, width, indent + 2) for p in parts)
    return f"({_HEADS[type(c)]}\n{body})"
