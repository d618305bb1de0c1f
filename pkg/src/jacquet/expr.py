"""Expression grammar for ring elements, and the canonical text forms.

    expr     := term { "+" term }
    term     := [ integer "*" ] factor { "x" factor }
    factor   := "d(" seg ")" | "z(" point ")" | "L(" seg "," seg ")" | "c(" point ")" | "1"
    seg      := line_id "," rational "," rational
    point    := line_id ":" rational
    rational := integer [ "/" positive-integer ]

Integers may carry a leading ``-``.  Whitespace is ignored.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Mapping, NamedTuple, Sequence

from .core import (
    CuspidalLine,
    CuspidalPoint,
    CuspSum,
    JacquetError,
    Multisegment,
    RElem,
    Segment,
    TensorElem,
)
from .structure import langlands_class, zelevinsky_class


class ParseError(JacquetError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[()+*,:/]))")


def tokenize(text: str) -> List[Token]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, lines: Mapping[str, CuspidalLine]):
        self.toks = tokenize(text)
        self.i = 0
        self.lines = lines

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.tok
        if t.text != text or t.kind == "end":
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.pos)
        return self.next()

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind != "end"

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            raise ParseError(f"expected an integer, found {t.text or 'end of input'!r}", t.pos)
        self.next()
        return int(t.text)

    def rational(self) -> Fraction:
        num = self.integer()
        if self.at("/"):
            self.next()
            t = self.tok
            den = self.integer()
            if den <= 0:
                raise ParseError("denominator must be a positive integer", t.pos)
            return Fraction(num, den)
        return Fraction(num)

    def line(self) -> CuspidalLine:
        t = self.tok
        if t.kind != "ident":
            raise ParseError(f"expected a line id, found {t.text or 'end of input'!r}", t.pos)
        self.next()
        if t.text not in self.lines:
            raise ParseError(f"unknown line id {t.text!r}", t.pos)
        return self.lines[t.text]

    def seg(self) -> Segment:
        pos = self.tok.pos
        ln = self.line()
        self.expect(",")
        a = self.rational()
        self.expect(",")
        b = self.rational()
        try:
            return Segment(ln, a, b)
        except JacquetError as exc:
            raise ParseError(f"malformed segment: {exc}", pos) from None

    def point(self) -> CuspidalPoint:
        ln = self.line()
        self.expect(":")
        return CuspidalPoint(ln, self.rational())

    def factor(self) -> RElem:
        t = self.tok
        if t.kind == "int" and t.text == "1":
            self.next()
            return RElem.one()
        if t.kind != "ident" or t.text not in ("d", "z", "L", "c"):
            raise ParseError(f"expected a factor, found {t.text or 'end of input'!r}", t.pos)
        self.next()
        self.expect("(")
        if t.text == "d":
            val = RElem.basis(self.seg())
        elif t.text == "c":
            p = self.point()
            val = RElem.basis(Segment(p.line, p.e, p.e))
        elif t.text == "z":
            val = zelevinsky_class(self.point())
        else:
            a = self.seg()
            self.expect(",")
            b = self.seg()
            try:
                val = langlands_class(a, b)
            except JacquetError:
                raise ParseError("L(...) of a pair that is not linked", t.pos) from None
        self.expect(")")
        return val

    def term(self) -> RElem:
        coeff = 1
        if self.tok.kind == "int" and self.toks[self.i + 1].text == "*":
            coeff = self.integer()
            self.next()
        val = self.factor()
        while self.tok.kind == "ident" and self.tok.text == "x":
            self.next()
            val = val * self.factor()
        return val.scale(coeff)

    def expr(self) -> RElem:
        val = self.term()
        while self.at("+"):
            self.next()
            val = val + self.term()
        return val

    def finish(self):
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)


def parse_expr(text: str, lines: Mapping[str, CuspidalLine]) -> RElem:
    p = _Parser(text, lines)
    val = p.expr()
    p.finish()
    return val


def parse_segment(text: str, lines: Mapping[str, CuspidalLine]) -> Segment:
    p = _Parser(text, lines)
    s = p.seg()
    p.finish()
    return s


def parse_segments(text: str, lines: Mapping[str, CuspidalLine]) -> List[Segment]:
    """Segments separated by ';'."""
    return [parse_segment(part, lines) for part in text.split(";") if part.strip()]


def parse_points(text: str, lines: Mapping[str, CuspidalLine]) -> List[CuspidalPoint]:
    """Comma-separated points ``line:e``; the empty string is the empty multiset."""
    if not text.strip():
        return []
    p = _Parser(text, lines)
    pts = [p.point()]
    while p.at(","):
        p.next()
        pts.append(p.point())
    p.finish()
    return pts


def parse_profile(text: str, lines: Mapping[str, CuspidalLine]) -> List[List[CuspidalPoint]]:
    """Point multisets separated by ';' (one per tensor factor)."""
    return [parse_points(part, lines) for part in text.split(";")]


# ---------------------------------------------------------------------------
# printing


def format_segment(s: Segment) -> str:
    return f"{s.line.id},{s.start},{s.end}"


def format_label(m: Multisegment) -> str:
    if not m:
        return "1"
    return " x ".join(f"d({format_segment(s)})" for s in m)


def format_expr(x: RElem) -> str:
    """One-line form that parses back to ``x``."""
    if not x:
        return "0*1"
    return " + ".join(f"{c}*{format_label(m)}" for m, c in x.sorted_items())


def format_signed(x: RElem) -> str:
    parts = []
    for m, c in x.sorted_items():
        sign = "+" if c > 0 else "−"
        mag = f"{abs(c)}*" if abs(c) != 1 else ""
        parts.append(f"{sign} {mag}{format_label(m)}")
    return " ".join(parts) if parts else "0"


def format_terms(x: RElem) -> List[str]:
    return [f"{c} {format_label(m)}" for m, c in x.sorted_items()]


def format_tensor(t: TensorElem) -> List[str]:
    return [f"{c} " + " (x) ".join(format_label(m) for m in key) for key, c in t.sorted_items()]


def format_point(p: CuspidalPoint, bare: bool = False) -> str:
    return str(p.e) if bare else f"{p.line.id}:{p.e}"


def format_word(word: Sequence[CuspidalPoint], bare: bool = False) -> str:
    return "(" + ",".join(format_point(p, bare) for p in word) + ")"


def format_words(x: CuspSum, bare: bool = False) -> List[str]:
    return [f"{c} {format_word(w, bare)}" for w, c in x.sorted_items()]
