"""Text grammar for monomials, monomial ideals, polynomials and rings.

Grammar (whitespace is ignored between tokens)::

    ring      := "F" PRIME "[" names "]" [ "/" "(" polylist ")" ]
    names     := NAME ("," NAME)*
    ideal     := "0" | ["("] monomial ("," monomial)* [")"]
    monomial  := "1" | factor (["*"] factor)*
    factor    := NAME ["^" INT]
    polylist  := poly ("," poly)*
    poly      := ["+"|"-"] term (("+"|"-") term)*
    term      := INT ["*" monomial] | monomial

Variable names are declared up front, so ``x^2y`` reads as ``x^2 * y`` when
``x`` and ``y`` are declared (the longest declared name wins).
"""

from __future__ import annotations

import re
from typing import Sequence

from .groebner import QuotientRing
from .monomial import ExponentVector, MonomialIdeal, minimalize
from .polyfp import PolyFp, is_prime

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")


class ParseError(ValueError):
    """Malformed input; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}\n  {text}\n  {' ' * position}^")


def parse_names(text: str) -> tuple[str, ...]:
    names = tuple(s.strip() for s in text.split(","))
    for name in names:
        if not _NAME.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}", text, max(text.find(name), 0))
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", text, 0)
    return names


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = sorted(names, key=len, reverse=True)
        self.index = {name: i for i, name in enumerate(names)}
        self.n = len(names)
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.accept(ch):
            self.error(f"expected {ch!r}")

    def at_end(self) -> bool:
        return self.peek() == ""

    def finish(self) -> None:
        if not self.at_end():
            self.error("unexpected trailing input")

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def name(self) -> int | None:
        self.skip()
        for name in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return self.index[name]
        return None

    def monomial(self) -> ExponentVector:
        exps = [0] * self.n
        if self.peek() == "1" and not _INT.match(self.text, self.pos + 1):
            self.pos += 1
            return tuple(exps)
        while True:
            j = self.name()
            if j is None:
                self.error("expected a declared variable")
            exps[j] += self.integer() if self.accept("^") else 1
            if self.accept("*"):
                continue
            nxt = self.peek()
            if nxt and (nxt.isalpha() or nxt == "_"):
                continue
            break
        return tuple(exps)

    def ideal(self) -> MonomialIdeal:
        if self.peek() == "0":
            self.pos += 1
            return MonomialIdeal(self.n, ())
        wrapped = self.accept("(")
        gens = [self.monomial()]
        while self.accept(","):
            gens.append(self.monomial())
        if wrapped:
            self.expect(")")
        return minimalize(gens, self.n)

    def term(self, p: int) -> PolyFp:
        ch = self.peek()
        if ch.isdigit():
            c = self.integer()
            if self.accept("*"):
                return PolyFp.monomial(p, self.monomial(), c)
            nxt = self.peek()
            if nxt and (nxt.isalpha() or nxt == "_"):
                return PolyFp.monomial(p, self.monomial(), c)
            return PolyFp.constant(p, self.n, c)
        return PolyFp.monomial(p, self.monomial())

    def poly(self, p: int) -> PolyFp:
        negate = self.accept("-")
        if not negate:
            self.accept("+")
        total = self.term(p)
        if negate:
            total = -total
        while True:
            if self.accept("+"):
                total = total + self.term(p)
            elif self.accept("-"):
                total = total - self.term(p)
            else:
                return total

    def polylist(self, p: int) -> list[PolyFp]:
        out = [self.poly(p)]
        while self.accept(","):
            out.append(self.poly(p))
        return out


def parse_monomial(text: str, names: Sequence[str]) -> ExponentVector:
    ps = _Parser(text, names)
    alpha = ps.monomial()
    ps.finish()
    return alpha


def parse_monomial_ideal(text: str, names: Sequence[str]) -> MonomialIdeal:
    ps = _Parser(text, names)
    ideal = ps.ideal()
    ps.finish()
    return ideal


def parse_poly(text: str, names: Sequence[str], p: int) -> PolyFp:
    ps = _Parser(text, names)
    f = ps.poly(p)
    ps.finish()
    return f


def parse_poly_list(text: str, names: Sequence[str], p: int) -> list[PolyFp]:
    ps = _Parser(text, names)
    if ps.accept("("):
        out = ps.polylist(p)
        ps.expect(")")
    else:
        out = ps.polylist(p)
    ps.finish()
    return out


_RING = re.compile(r"\s*F(\d+)\s*\[([^\]]*)\]\s*")


def parse_ring(text: str) -> QuotientRing:
    m = _RING.match(text)
    if not m:
        raise ParseError("expected a ring like F2[x,y] or F2[x,y]/(x^2)", text, 0)
    p = int(m.group(1))
    if not is_prime(p):
        raise ParseError(f"{p} is not prime", text, m.start(1))
    names = parse_names(m.group(2))
    rest = text[m.end():]
    relations: list[PolyFp] = []
    if rest.strip():
        ps = _Parser(text, names)
        ps.pos = m.end()
        ps.expect("/")
        ps.expect("(")
        relations = ps.polylist(p)
        ps.expect(")")
        ps.finish()
    return QuotientRing.create(p, len(names), relations, names)


def format_monomial(alpha: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, alpha):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def format_monomial_ideal(ideal: MonomialIdeal, names: Sequence[str]) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(format_monomial(g, names) for g in sorted(ideal.generators, reverse=True))


def format_poly(f: PolyFp, names: Sequence[str]) -> str:
    if not f:
        return "0"
    parts = []
    for alpha, c in f.sorted_terms():
        mono = format_monomial(alpha, names)
        if mono == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


def format_ring(ring: QuotientRing) -> str:
    head = f"F{ring.p}[{','.join(ring.names)}]"
    if not len(ring.relations):
        return head
    rels = ", ".join(format_poly(g, ring.names) for g in ring.relations)
    return f"{head}/({rels})"


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))
