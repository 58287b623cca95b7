"""Parser for the polynomial expression grammar.

::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)?
    atom   := NUMBER ['/' NUMBER] | IDENT | '(' expr ')'

Juxtaposition is not multiplication: ``x1 x2`` is a syntax error.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fields import QQ
from .poly import Poly
from .words import Alphabet

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    """Syntax or name error, with a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif ident is not None:
            tokens.append(("ident", ident, start))
        else:
            tokens.append(("sym", sym, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _line_col(text: str, offset: int, line0: int):
    line = text.count("\n", 0, offset)
    col = offset - (text.rfind("\n", 0, offset) + 1)
    return line0 + line, col + 1


class _Parser:
    def __init__(self, text, alphabet, field, line):
        self.text = text
        self.alphabet = alphabet
        self.field = field
        self.line = line
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, message, offset=None):
        if offset is None:
            offset = self.tokens[self.i][2]
        raise ParseError(message, *_line_col(self.text, offset, self.line))

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, sym):
        kind, value, _ = self.peek()
        if kind != "sym" or value != sym:
            self.error(f"expected {sym!r}, found {value or 'end of input'!r}")
        self.take()

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        kind, value, _ = self.peek()
        if kind != "end":
            if kind in ("ident", "num") or value == "(":
                self.error(f"unexpected {value!r} (juxtaposition is not multiplication; use '*')")
            self.error(f"unexpected {value!r}")
        return result

    def expr(self) -> Poly:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "sym" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.take()
                t = self.term()
                acc = acc + t if value == "+" else acc - t
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek()[:2] == ("sym", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[:2] == ("sym", "^"):
            self.take()
            kind, value, offset = self.take()
            if kind != "num":
                self.error("exponent must be a nonnegative integer literal", offset)
            base = base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value, offset = self.take()
        if kind == "num":
            c = Fraction(int(value))
            if self.peek()[:2] == ("sym", "/"):
                self.take()
                k2, v2, o2 = self.take()
                if k2 != "num":
                    self.error("rational literal needs an integer denominator", o2)
                if int(v2) == 0:
                    self.error("zero denominator", o2)
                c = Fraction(int(value), int(v2))
            return Poly.one(self.alphabet, self.field).scale(self.field(c))
        if kind == "ident":
            if value not in self.alphabet.names:
                self.error(f"unknown identifier {value!r}", offset)
            return Poly.letter(self.alphabet, value, self.field)
        if kind == "sym" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.error(f"unexpected {value or 'end of input'!r}", offset)


def parse_poly(text: str, alphabet: Alphabet, field=QQ, line: int = 1) -> Poly:
    """Parse an expression such as ``"x1*x2 + y1^2 - y1"``."""
    return _Parser(text, alphabet, field, line).parse()
