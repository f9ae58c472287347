"""Parser for the compact polynomial syntax used in configs and on the CLI.

Grammar (precedence climbing, lowest first):

    expr   := unary (('+' | '-') unary)*
    unary  := ('-' | '+') unary | factor
    factor := power ('*' power)*
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | 'x' | '(' expr ')'

'/' is not a general operator: it only forms rational literals, so '7/2*x'
means (7/2)*x and 'x/2' is rejected.  Exponents must be literal nonnegative
integers.  The output of poly.render is always accepted and round-trips.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Poly


class ParseError(ValueError):
    """Syntax error with the offset and what was expected there."""

    def __init__(self, message: str, position: int, expected=None):
        self.position = position
        self.expected = tuple(expected) if expected else ()
        detail = f"{message} at position {position}"
        if self.expected:
            detail += " (expected " + " or ".join(self.expected) + ")"
        super().__init__(detail)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([x+\-*/^()]))")

_END = ("end", "", -1)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            # only whitespace could remain unmatched before a bad char
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if bad >= len(text):
                break
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        else:
            tokens.append(("op", m.group(2), m.start(2)))
        pos = m.end()
    tokens.append(_END)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, expected=None):
        kind, value, pos = self.peek()
        if kind == "end":
            pos = len(self.text)
        raise ParseError(message, pos, expected)

    def parse(self) -> Poly:
        result = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            self.error(f"trailing input {value!r}", expected=("operator", "end of input"))
        return result

    def expr(self) -> Poly:
        left = self.unary()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                right = self.unary()
                left = left + right if value == "+" else left - right
            else:
                return left

    def unary(self) -> Poly:
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            inner = self.unary()
            return inner if value == "+" else -inner
        return self.factor()

    def factor(self) -> Poly:
        left = self.power()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                left = left * self.power()
            else:
                return left

    def power(self) -> Poly:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, _ = self.peek()
            if kind != "int":
                self.error("exponent must be a nonnegative integer literal",
                           expected=("integer",))
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value, _ = self.peek()
        if kind == "int":
            self.advance()
            num = int(value)
            kind, value, _ = self.peek()
            if kind == "op" and value == "/":
                self.advance()
                kind, value, _ = self.peek()
                if kind != "int":
                    self.error("denominator must be an integer literal",
                               expected=("integer",))
                self.advance()
                den = int(value)
                if den == 0:
                    self.error("zero denominator")
                return Poly.const(Fraction(num, den))
            return Poly.const(num)
        if kind == "op" and value == "x":
            self.advance()
            return Poly.x()
        if kind == "op" and value == "(":
            self.advance()
            inner = self.expr()
            kind, value, _ = self.peek()
            if not (kind == "op" and value == ")"):
                self.error("unclosed parenthesis", expected=(")",))
            self.advance()
            return inner
        self.error("expected a term", expected=("integer", "'x'", "'('"))


def parse_poly(text: str) -> Poly:
    """Parse the compact syntax into a Poly; raises ParseError on bad input."""
    if not text or not text.strip():
        raise ParseError("empty input", 0, expected=("integer", "'x'", "'('"))
    return _Parser(text).parse()
