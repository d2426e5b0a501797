"""Recursive-descent parser for rational-function expressions in ``x``.

Grammar::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('-'|'+') factor | base ('^' ['-'] integer)?
    base   := integer | 'x' | '(' expr ')'

Rational literals ``a/b`` fall out of the division rule.  Whitespace is
ignored.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ffrec.polyalg import X, Poly, RationalFunction

__all__ = ["ParseError", "parse", "parse_poly", "parse_rational"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class ParseError(ValueError):
    """Syntax error carrying the offending character offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.message = message
        self.text = text
        self.pos = pos

    def render(self) -> str:
        return f"{self.message}\n  {self.text}\n  {' ' * self.pos}^"

    def __str__(self):
        return f"{self.message} at column {self.pos + 1}"


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), m.lastindex, start))
        pos = m.end()
    tokens.append(("", 0, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, pos=None):
        if pos is None:
            pos = self.peek()[2]
        raise ParseError(message, self.text, pos)

    def expect(self, value):
        tok = self.peek()
        if tok[0] != value:
            self.error(f"expected '{value}'" + (f", found '{tok[0]}'" if tok[0] else ""))
        return self.advance()

    def parse(self) -> RationalFunction:
        if self.peek()[1] == 0:
            self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok[1] != 0:
            self.error(f"unexpected '{tok[0]}'")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.advance()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    self.error("division by zero", pos)
                value = value / rhs
        return value

    def factor(self):
        if self.peek()[0] in ("-", "+"):
            sign = self.advance()[0]
            value = self.factor()
            return -value if sign == "-" else value
        base = self.base()
        if self.peek()[0] == "^":
            _, _, pos = self.advance()
            negative = False
            if self.peek()[0] == "-":
                self.advance()
                negative = True
            tok = self.peek()
            if tok[1] != 1:
                self.error("exponent must be an integer literal")
            self.advance()
            k = int(tok[0])
            if negative:
                if base.is_zero():
                    self.error("division by zero", pos)
                k = -k
            base = base ** k
        return base

    def base(self):
        text, kind, pos = self.peek()
        if kind == 1:
            self.advance()
            return RationalFunction(int(text))
        if kind == 2:
            if text != self.var:
                self.error(f"unknown symbol '{text}' (only '{self.var}' is allowed)")
            self.advance()
            return RationalFunction(X)
        if text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if kind == 0:
            self.error("unexpected end of expression")
        self.error(f"unexpected '{text}'")


def parse(text: str, var: str = "x") -> RationalFunction:
    """Parse an expression into a reduced rational function."""
    return _Parser(text, var).parse()


def parse_rational(text: str) -> Fraction:
    f = parse(text)
    if not f.is_constant():
        raise ParseError("expected a rational constant", text, 0)
    return f.constant_value()


def parse_poly(text: str, var: str = "x") -> Poly:
    f = parse(text, var)
    if not f.is_polynomial():
        raise ParseError("expected a polynomial", text, 0)
    return f.num
