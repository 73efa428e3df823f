"""Text syntax for representations and multisegments.

Grammar::

    expr    := "1" | product
    product := atom { "x" atom }
    atom    := ("Z" | "L") "(" seg { ";" seg } ")" | point
    seg     := "[" point ".." point "]" | "[" point "]"
    point   := label [ "*v^" rational ]
    rational:= ["-"] digits [ "/" digits ]

``v`` is the character ``nu``; exponents are exact rationals.  Rule files
extend the grammar with ``$name`` label variables and ``<kind:k>`` wildcards,
handled by :func:`parse_pattern_atoms`.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .forms import Lform, Product, RepForm, Zform
from .segcore import CuspidalPoint, Multisegment, Segment
from .support import CuspidalLabel

__all__ = [
    "ParseError",
    "SourceSpan",
    "Wildcard",
    "format_form",
    "format_multisegment",
    "format_point",
    "format_segment",
    "parse_expr",
    "parse_multisegment",
    "parse_pattern_atoms",
]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_VAR = re.compile(r"\$[A-Za-z_][A-Za-z0-9_]*")
_RATIONAL = re.compile(r"-?[0-9]+(?:/[0-9]+)?")
_TOKEN_END = re.compile(r"[^\s\]\);.]*")
_DECIMAL_TAIL = re.compile(r"\.[0-9]+")
_WILDCARD = re.compile(r"<([a-z]+)(?::([0-9]+))?>")


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan, text: str):
        super().__init__(message)
        self.message = message
        self.span = span
        self.text = text

    def __str__(self) -> str:
        return f"{self.message} at {self.span.start}..{self.span.end}"

    def render(self) -> str:
        """Message followed by the input with the span underlined."""
        width = max(1, self.span.end - self.span.start)
        return f"error: {self.message}\n  {self.text}\n  {' ' * self.span.start}{'^' * width}"


@dataclass(frozen=True)
class Wildcard:
    """Pattern atom standing for a whole factor (rule files only)."""

    kind: str
    weight: int | None
    span: SourceSpan


LabelResolver = Callable[[str], "CuspidalLabel | None"]


class _Parser:
    def __init__(self, text: str, resolve: LabelResolver, patterns: bool = False):
        self.text = text
        self.resolve = resolve
        self.patterns = patterns
        self.pos = 0

    # -- helpers ---------------------------------------------------------
    def fail(self, message: str, start: int, end: int | None = None) -> ParseError:
        n = len(self.text)
        start = min(start, n)
        end = min(max(start + 1, end if end is not None else start + 1), n)
        if start == n and n > 0:
            start = n - 1
        return ParseError(message, SourceSpan(start, max(start, end)), self.text)

    def ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> int:
        self.ws()
        if not self.text.startswith(s, self.pos):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            raise self.fail(f"expected {s!r}, found {found!r}", self.pos)
        start = self.pos
        self.pos += len(s)
        return start

    def word(self) -> tuple[str, int] | None:
        self.ws()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            return None
        return m.group(), m.start()

    # -- grammar ---------------------------------------------------------
    def expr(self) -> list[RepForm | Wildcard]:
        self.ws()
        if self.text.strip() == "1":
            self.pos = len(self.text)
            return []
        atoms = [self.atom()]
        while True:
            w = self.word()
            if w is None or w[0] != "x":
                break
            self.pos = w[1] + 1
            atoms.append(self.atom())
        self.ws()
        if self.pos != len(self.text):
            m = _TOKEN_END.match(self.text, self.pos)
            end = self.pos + max(1, len(m.group()) if m else 1)
            raise self.fail("unexpected input", self.pos, end)
        return atoms

    def atom(self) -> RepForm | Wildcard:
        self.ws()
        if self.patterns and self.peek("<"):
            m = _WILDCARD.match(self.text, self.pos)
            if not m:
                raise self.fail("malformed wildcard", self.pos)
            self.pos = m.end()
            weight = int(m.group(2)) if m.group(2) else None
            return Wildcard(m.group(1), weight, SourceSpan(m.start(), m.end()))
        w = self.word()
        if w is not None and w[0] in ("Z", "L"):
            save = self.pos
            self.pos = w[1] + 1
            if self.peek("("):
                return self.form(Zform if w[0] == "Z" else Lform)
            self.pos = save
        if w is None and not (self.patterns and self.peek("$")):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            raise self.fail(f"expected a representation, found {found!r}", self.pos)
        p = self.point()
        return Zform(Multisegment([Segment.point(p)]))

    def form(self, kind: type) -> RepForm:
        self.expect("(")
        segs = [self.segment()]
        while self.peek(";"):
            self.expect(";")
            segs.append(self.segment())
        self.expect(")")
        return kind(Multisegment(segs))

    def segment(self) -> Segment:
        self.expect("[")
        p = self.point()
        if self.peek(".."):
            self.expect("..")
            self.ws()
            q_at = self.pos
            q = self.point()
            q_end = self.pos
            if q.label != p.label:
                raise self.fail("range endpoints use different labels", q_at, q_end)
            span = (q.exponent - p.exponent) / p.label.step
            if span.denominator != 1 or span < 0:
                raise self.fail(
                    f"off-lattice range: {p.label.id} has step {p.label.step}", q_at, q_end
                )
            seg = Segment(p.label, p.exponent, int(span) + 1)
        else:
            seg = Segment.point(p)
        self.expect("]")
        return seg

    def point(self) -> CuspidalPoint:
        self.ws()
        start = self.pos
        m = (_VAR if self.patterns and self.peek("$") else _IDENT).match(self.text, self.pos)
        if not m:
            raise self.fail("expected a label", self.pos)
        name = m.group()
        label = self.resolve(name)
        if label is None:
            raise self.fail(f"unknown label {name!r}", start, m.end())
        self.pos = m.end()
        exponent = Fraction(0)
        if self.peek("*"):
            self.expect("*")
            self.ws()
            if not self.text.startswith("v^", self.pos):
                raise self.fail("expected 'v^' after '*'", self.pos, self.pos + 2)
            self.pos += 2
            exponent = self.rational()
        return CuspidalPoint(label, exponent)

    def rational(self) -> Fraction:
        start = self.pos
        tok = _TOKEN_END.match(self.text, self.pos)
        tok_end = start + max(1, len(tok.group()) if tok else 1)
        m = _RATIONAL.match(self.text, self.pos)
        if m:
            dec = _DECIMAL_TAIL.match(self.text, m.end())
            if dec:
                raise self.fail("malformed rational exponent (decimals are not allowed)", start, dec.end())
        if not m or (m.end() < len(self.text) and self.text[m.end()] in "/0123456789"):
            raise self.fail("malformed rational exponent", start, tok_end)
        text = m.group()
        if "/" in text and int(text.split("/")[1]) == 0:
            raise self.fail("zero denominator in exponent", start, m.end())
        self.pos = m.end()
        return Fraction(text)


def _resolver(registry: Mapping[str, CuspidalLabel]) -> LabelResolver:
    return registry.get


def parse_expr(text: str, registry: Mapping[str, CuspidalLabel]) -> RepForm:
    """Parse a representation expression against a label registry."""
    atoms = _Parser(text, _resolver(registry)).expr()
    if len(atoms) == 1:
        return atoms[0]  # type: ignore[return-value]
    return Product(tuple(atoms))  # type: ignore[arg-type]


def parse_pattern_atoms(
    text: str, variables: Mapping[str, CuspidalLabel]
) -> list[RepForm | Wildcard]:
    """Parse a rule pattern: ``$var`` labels and ``<kind:k>`` wildcards allowed."""
    return _Parser(text, variables.get, patterns=True).expr()


def parse_multisegment(text: str, registry: Mapping[str, CuspidalLabel]) -> Multisegment:
    """Parse ``seg {";" seg}``."""
    p = _Parser(text, _resolver(registry))
    segs = [p.segment()]
    while p.peek(";"):
        p.expect(";")
        segs.append(p.segment())
    p.ws()
    if p.pos != len(text):
        raise p.fail("unexpected input", p.pos)
    return Multisegment(segs)


def _format_exponent(e: Fraction) -> str:
    return "" if e == 0 else f"*v^{e}"


def format_point(p: CuspidalPoint) -> str:
    return f"{p.label.id}{_format_exponent(p.exponent)}"


def format_segment(s: Segment) -> str:
    first = f"{s.label.id}{_format_exponent(s.start)}"
    if s.length == 1:
        return f"[{first}]"
    return f"[{first} .. {s.label.id}{_format_exponent(s.end)}]"


def format_multisegment(m: Multisegment) -> str:
    return ";".join(format_segment(s) for s in m)


def format_form(f: RepForm) -> str:
    """Canonical text; a one-point Z-form prints as the bare point."""
    if isinstance(f, Product):
        if not f.factors:
            return "1"
        return " x ".join(format_form(g) for g in f.factors)
    if isinstance(f, Zform) and len(f.m) == 1 and f.m.segments[0].length == 1:
        s = f.m.segments[0]
        return format_point(CuspidalPoint(s.label, s.start))
    tag = "Z" if isinstance(f, Zform) else "L"
    return f"{tag}({format_multisegment(f.m)})"
