"""Surface syntax for variety terms.

Grammar (whitespace-insensitive)::

    expr   := "pt" | "P(" n ")" | "Q(" n ")" | "G(" k "," N ")" | "SG(" k "," N ")"
            | "CI(" d ("," d)* ";" N ")" | "Prod(" factor ("," factor)+ ")"
            | "PB(" a ("," a)+ ")" | "LS(G(2,5)," c ")"
    factor := "P(" n "):" d

Printing produces the same syntax back, so ``parse_variety(to_text(t)) == t``
for every term.

>>> parse_variety("CI(2,2;7)")
CompleteIntersection(degrees=(2, 2), N=7)
>>> to_text(parse_variety("  Prod( P(3):1 , P(1):2 ) "))
'Prod(P(1):2,P(3):1)'
"""

from __future__ import annotations

import re

from .errors import ParseError
from .terms import (
    CompleteIntersection,
    Grassmann,
    LinearSectionG25,
    LinearSpace,
    Point,
    PolarizedProduct,
    ProjBundleP1,
    Quadric,
    SympGrassmann,
    VarietyTerm,
)

_TOKEN = re.compile(r"(?P<name>[A-Za-z]+)|(?P<int>\d+)|(?P<sym>[(),;:])")


class _Tokens:
    """A scanned token stream with positions for error reporting."""

    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            self.items.append((kind, m.group(kind), pos))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.items[self.i] if self.i < len(self.items) else None

    def next(self, kind: str, value: str | None = None) -> str:
        tok = self.peek()
        want = value if value is not None else kind
        if tok is None:
            raise ParseError(f"expected {want!r}, found end of input", len(self.text))
        k, v, pos = tok
        if k != kind or (value is not None and v != value):
            raise ParseError(f"expected {want!r}, found {v!r}", pos)
        self.i += 1
        return v

    def next_int(self) -> int:
        return int(self.next("int"))

    def expect_end(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])


def parse_variety(text: str) -> VarietyTerm:
    """Parse an expression into a validity-checked term.

    Raises :class:`ParseError` with a position for syntax problems and
    :class:`~fanolines.errors.ValidationError` for well-formedness violations
    (for example ``G(0,3)``).
    """
    if not text or not text.strip():
        raise ParseError("empty input", 0)
    toks = _Tokens(text)
    term = _parse_expr(toks)
    toks.expect_end()
    return term


def _parse_expr(toks: _Tokens) -> VarietyTerm:
    tok = toks.peek()
    if tok is None:
        raise ParseError("expected a variety expression", 0)
    kind, value, pos = tok
    if kind != "name":
        raise ParseError(f"expected a constructor name, found {value!r}", pos)
    toks.i += 1
    if value == "pt":
        return Point()
    if value == "P":
        toks.next("sym", "(")
        n = toks.next_int()
        toks.next("sym", ")")
        return LinearSpace(n)
    if value == "Q":
        toks.next("sym", "(")
        n = toks.next_int()
        toks.next("sym", ")")
        return Quadric(n)
    if value in ("G", "SG"):
        toks.next("sym", "(")
        k = toks.next_int()
        toks.next("sym", ",")
        N = toks.next_int()
        toks.next("sym", ")")
        return Grassmann(k, N) if value == "G" else SympGrassmann(k, N)
    if value == "CI":
        toks.next("sym", "(")
        degrees = [toks.next_int()]
        while toks.peek() and toks.peek()[:2] == ("sym", ","):
            toks.next("sym", ",")
            degrees.append(toks.next_int())
        toks.next("sym", ";")
        N = toks.next_int()
        toks.next("sym", ")")
        return CompleteIntersection(tuple(degrees), N)
    if value == "Prod":
        toks.next("sym", "(")
        factors = [_parse_factor(toks)]
        while toks.peek() and toks.peek()[:2] == ("sym", ","):
            toks.next("sym", ",")
            factors.append(_parse_factor(toks))
        toks.next("sym", ")")
        return PolarizedProduct(tuple(factors))
    if value == "PB":
        toks.next("sym", "(")
        twists = [toks.next_int()]
        while toks.peek() and toks.peek()[:2] == ("sym", ","):
            toks.next("sym", ",")
            twists.append(toks.next_int())
        toks.next("sym", ")")
        return ProjBundleP1(tuple(twists))
    if value == "LS":
        toks.next("sym", "(")
        toks.next("name", "G")
        toks.next("sym", "(")
        toks.next("int", "2")
        toks.next("sym", ",")
        toks.next("int", "5")
        toks.next("sym", ")")
        toks.next("sym", ",")
        c = toks.next_int()
        toks.next("sym", ")")
        return LinearSectionG25(c)
    raise ParseError(f"unknown constructor {value!r}", pos)


def _parse_factor(toks: _Tokens) -> tuple[int, int]:
    toks.next("name", "P")
    toks.next("sym", "(")
    n = toks.next_int()
    toks.next("sym", ")")
    toks.next("sym", ":")
    d = toks.next_int()
    return (n, d)


def to_text(v: VarietyTerm) -> str:
    """Canonical textual form; inverse of :func:`parse_variety`."""
    match v:
        case Point():
            return "pt"
        case LinearSpace(n):
            return f"P({n})"
        case Quadric(n):
            return f"Q({n})"
        case Grassmann(k, N):
            return f"G({k},{N})"
        case SympGrassmann(k, N):
            return f"SG({k},{N})"
        case CompleteIntersection(degrees, N):
            return "CI(" + ",".join(map(str, degrees)) + f";{N})"
        case PolarizedProduct(factors):
            return "Prod(" + ",".join(f"P({n}):{d}" for n, d in factors) + ")"
        case ProjBundleP1(twists):
            return "PB(" + ",".join(map(str, twists)) + ")"
        case LinearSectionG25(c):
            return f"LS(G(2,5),{c})"
    raise TypeError(f"not a variety term: {v!r}")
