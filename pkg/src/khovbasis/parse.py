"""Polynomial expressions, ordering specs and valuation specs from text.

Grammar for polynomials (explicit '*' is required)::

    expr     := [sign] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | var | '(' expr ')'
    rational := int ('/' posint)?
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import orderings as O
from .poly import Poly, PolyRing
from .valuation import MonomialValuation


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass
class Token:
    kind: str  # num, name, op, end
    text: str
    pos: int


def tokenize(s: str, line: int = 1, col0: int = 1) -> List[Token]:
    toks = []
    i = 0
    while True:
        m = _TOKEN.match(s, i)
        if not m:
            rest = s[i:]
            if not rest.strip():
                break
            j = i + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {s[j]!r}", line, col0 + j)
        kind = m.lastgroup
        toks.append(Token(kind, m.group(kind), m.start(kind)))
        i = m.end()
    toks.append(Token("end", "", len(s)))
    return toks


class _Parser:
    def __init__(self, s: str, ring: PolyRing, line: int, col0: int):
        self.ring = ring
        self.line = line
        self.col0 = col0
        self.toks = tokenize(s, line, col0)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str, tok: Token = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, self.col0 + tok.pos)

    def expect_op(self, op: str):
        t = self.peek()
        if t.kind != "op" or t.text != op:
            found = repr(t.text) if t.kind != "end" else "end of input"
            self.fail(f"expected {op!r}, found {found}")
        self.take()

    def parse(self) -> Poly:
        p = self.expr()
        t = self.peek()
        if t.kind != "end":
            self.fail(f"expected '+', '-', '*' or end of input, found {t.text!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            sign = -1 if t.text == "-" else 1
        acc = self.term() * sign
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t.text == "+" else acc - rhs
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        b = self.base()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            n = self.peek()
            if n.kind != "num":
                self.fail("expected a non-negative integer exponent")
            self.take()
            return b ** int(n.text)
        return b

    def base(self) -> Poly:
        t = self.peek()
        if t.kind == "num":
            self.take()
            val = Fraction(int(t.text))
            if self.peek().kind == "op" and self.peek().text == "/":
                self.take()
                d = self.peek()
                if d.kind != "num" or int(d.text) == 0:
                    self.fail("expected a positive integer denominator")
                self.take()
                val /= int(d.text)
            return self.ring.const(val)
        if t.kind == "name":
            self.take()
            if t.text not in self.ring.names:
                self.fail(f"unknown variable {t.text!r}", t)
            return self.ring.var(t.text)
        if t.kind == "op" and t.text == "(":
            self.take()
            p = self.expr()
            self.expect_op(")")
            return p
        found = repr(t.text) if t.kind != "end" else "end of input"
        self.fail(f"expected a number, variable or '(', found {found}")


def parse_poly(s: str, ring: PolyRing, line: int = 1, col: int = 1) -> Poly:
    return _Parser(s, ring, line, col).parse()


# --------------------------------------------------------------------------
# ordering and valuation specs

def _split_top(s: str, sep: str) -> List[str]:
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [x.strip() for x in out]


def _call(s: str) -> Tuple[str, Optional[str]]:
    s = s.strip()
    m = re.fullmatch(r"([A-Za-z_]+)\s*(?:\((.*)\))?", s, re.S)
    if not m:
        raise ParseError(f"malformed spec {s!r}")
    return m.group(1), m.group(2)


def _ints(s: str) -> List[int]:
    try:
        return [int(x) for x in _split_top(s, ",") if x]
    except ValueError:
        raise ParseError(f"expected a list of integers, got {s!r}") from None


def parse_ordering(spec: str, names: Sequence[str]) -> O.MonomialOrdering:
    """lex | degrevlex | neglex | negdeglex | weighted(w...) | matrix([r1],[r2],...) |
    block(spec:[vars]; spec:[vars]; ...)"""
    n = len(names)
    head, arg = _call(spec)
    simple = {"lex": O.lex, "degrevlex": O.degrevlex, "neglex": O.neglex, "negdeglex": O.negdeglex}
    if head in simple:
        if arg is not None:
            raise ParseError(f"{head} takes no arguments")
        return simple[head](n)
    if arg is None:
        raise ParseError(f"unknown ordering {spec!r}")
    if head == "weighted":
        w = _ints(arg)
        if len(w) != n:
            raise ParseError(f"weighted ordering needs {n} weights, got {len(w)}")
        return O.weighted(w)
    if head == "matrix":
        rows = [_ints(r.strip()[1:-1]) for r in _split_top(arg, ",")]
        if any(len(r) != n for r in rows):
            raise ParseError(f"matrix rows must have {n} entries")
        try:
            return O.matrix(rows)
        except ValueError as e:
            raise ParseError(str(e)) from None
    if head == "block":
        parts = []
        for p in _split_top(arg, ";"):
            m = re.fullmatch(r"(.*):\s*\[(.*)\]", p, re.S)
            if not m:
                raise ParseError(f"block part {p!r} must look like 'ordering:[vars]'")
            vs = [x.strip() for x in m.group(2).split(",") if x.strip()]
            for x in vs:
                if x not in names:
                    raise ParseError(f"unknown variable {x!r} in block ordering")
            idx = [names.index(x) for x in vs]
            parts.append((parse_ordering(m.group(1), vs), idx))
        try:
            return O.block(parts, n)
        except ValueError as e:
            raise ParseError(str(e)) from None
    raise ParseError(f"unknown ordering {head!r}")


def parse_valuation(spec: str, names: Sequence[str]) -> MonomialValuation:
    """weight(w...) | divisibility(var) | ordering(<ordering spec>)"""
    head, arg = _call(spec)
    if arg is None:
        raise ParseError(f"valuation spec {spec!r} needs arguments")
    if head == "weight":
        w = _ints(arg)
        if len(w) != len(names):
            raise ParseError(f"weight valuation needs {len(names)} entries, got {len(w)}")
        return MonomialValuation.weight(w)
    if head == "divisibility":
        x = arg.strip()
        if x not in names:
            raise ParseError(f"unknown variable {x!r} in divisibility valuation")
        return MonomialValuation.divisibility(len(names), list(names).index(x), x)
    if head == "ordering":
        return MonomialValuation.from_ordering(parse_ordering(arg, names))
    raise ParseError(f"unknown valuation {head!r}")
