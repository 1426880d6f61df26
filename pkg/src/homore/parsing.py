"""Text form of Ore polynomials.

Grammar (whitespace is ignored)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := power ('*' power)*
    power   := atom ['^' INT]
    atom    := INT ['/' INT] | 'Y' | 'X' | NAME | '(' expr ')'

Products are taken in normal order: a factor that depends on Y may not follow
one that contains X, so ``Y*X`` is accepted and ``X*Y`` is a syntax error.
``NAME`` is a parameter (``k``, ``q``) and only allowed over a parameter ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ore import OrePoly, format_ore
from .polynomial import Polynomial
from .scalars import QQ, ParamRing, mpq


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2):
            toks.append(_Tok("name", m.group(2), m.start(2)))
        elif m.group(3):
            toks.append(_Tok("op", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _x_free(p: OrePoly) -> bool:
    return all(n == 0 for n in p.terms)


def _y_free(p: OrePoly) -> bool:
    return all(a.degree <= 0 for a in p.terms.values())


def _normal_product(a: OrePoly, b: OrePoly, pos: int) -> OrePoly:
    ring = a.ring
    out = OrePoly.zero(ring)
    if _x_free(a):
        c = a.coefficient(0)
        return OrePoly({n: c * q for n, q in b.terms.items()}, ring)
    if not _y_free(b):
        raise ParseError("Y-dependent factor after X", pos)
    for m, p in a.terms.items():
        for n, q in b.terms.items():
            out = out + OrePoly.monomial(p.scale(q[0]), m + n)
    return out


class _Parser:
    def __init__(self, text: str, ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.names = ring.names if isinstance(ring, ParamRing) else ()

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind=None, text=None) -> _Tok | None:
        t = self.tok
        if (kind is None or t.kind == kind) and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def expect(self, kind, text, what):
        t = self.take(kind, text)
        if t is None:
            raise ParseError(f"expected {what}", self.tok.pos)
        return t

    def parse(self) -> OrePoly:
        if self.tok.kind == "end":
            raise ParseError("empty expression", self.tok.pos)
        p = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return p

    def expr(self) -> OrePoly:
        sign = 1
        if self.take("op", "-"):
            sign = -1
        else:
            self.take("op", "+")
        acc = self.term().scale(sign)
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.take().text
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> OrePoly:
        acc = self.power()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.take()
            pos = self.tok.pos
            acc = _normal_product(acc, self.power(), pos)
        return acc

    def power(self) -> OrePoly:
        pos = self.tok.pos
        base = self.atom()
        if not self.take("op", "^"):
            return base
        n = int(self.expect("int", None, "integer exponent").text)
        out = OrePoly.one(self.ring)
        for _ in range(n):
            out = _normal_product(out, base, pos)
        return out

    def atom(self) -> OrePoly:
        t = self.tok
        ring = self.ring
        if t.kind == "int":
            self.take()
            value = mpq(int(t.text))
            if self.take("op", "/"):
                den = self.expect("int", None, "denominator")
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos)
                value = mpq(int(t.text), int(den.text))
            return OrePoly.from_poly(Polynomial.constant(ring(value), ring))
        if t.kind == "name":
            self.take()
            if t.text == "Y":
                return OrePoly.Y(ring)
            if t.text == "X":
                return OrePoly.X(ring)
            if t.text in self.names:
                return OrePoly.from_poly(Polynomial.constant(ring.gen(t.text), ring))
            raise ParseError(f"unknown symbol {t.text!r}", t.pos)
        if self.take("op", "("):
            inner = self.expr()
            self.expect("op", ")", "')'")
            return inner
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.pos)


def parse_ore_poly(text: str, ring=QQ) -> OrePoly:
    """Parse ``text`` into an OrePoly over ``ring``."""
    return _Parser(text, ring).parse()


def serialize_ore_poly(p: OrePoly) -> str:
    return format_ore(p)
