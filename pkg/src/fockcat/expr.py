"""Parser for algebra expressions such as ``p3*q2*p1 + (1+t)*q1``.

Grammar (whitespace between tokens is ignored)::

    expr   := ['+'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom
    atom   := INT ['/' INT] | INT 't' [texp] | 't' [texp]
            | ('p'|'q') INT | '(' expr ')'
    texp   := '^' ['-'] INT | '^' '(' ['-'] INT ['/' '2'] ')'

Products are noncommutative and kept in written order; juxtaposition of
factors is an error, except that an integer may prefix ``t`` directly
(``3t^2``), which is how coefficients are printed.
"""

from __future__ import annotations

from fractions import Fraction

from .heisenberg import Generator, HExpr
from .series import LaurentPoly

__all__ = ["ParseError", "parse_expression"]


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, (self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self, what="integer") -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error(f"expected {what}")
        return int(self.text[start : self.pos])

    def parse(self) -> HExpr:
        if not self.text.strip():
            self.error("empty expression", 0)
        out = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return out

    def expr(self) -> HExpr:
        self.eat("+")
        out = self.term()
        while True:
            if self.eat("+"):
                out = out + self.term()
            elif self.eat("-"):
                out = out - self.term()
            else:
                return out

    def term(self) -> HExpr:
        out = self.factor()
        while self.eat("*"):
            out = out * self.factor()
        ch = self.peek()
        if ch and ch not in "+-)":
            self.error("missing '*' between factors")
        return out

    def factor(self) -> HExpr:
        if self.eat("-"):
            return -self.factor()
        return self.atom()

    def atom(self) -> HExpr:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if not self.eat(")"):
                self.error("expected ')'")
            return inner
        if ch.isdigit():
            value = Fraction(self.integer())
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
                    self.error("expected denominator")
                den = self.integer("denominator")
                if den == 0:
                    self.error("zero denominator", self.pos - 1)
                value /= den
            if self.pos < len(self.text) and self.text[self.pos] in "tT":
                self.pos += 1
                return HExpr.scalar(self.t_power() * value)
            return HExpr.scalar(value)
        low = ch.lower()
        if low == "t":
            self.pos += 1
            return HExpr.scalar(self.t_power())
        if low in "pq":
            self.pos += 1
            if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
                self.error("expected non-negative generator index")
            return HExpr.word(Generator(low, self.integer("generator index")))
        self.error(f"unexpected {ch!r}")

    def t_power(self) -> LaurentPoly:
        if not (self.pos < len(self.text) and self.text[self.pos] == "^"):
            return LaurentPoly.t_power(1)
        self.pos += 1
        if self.eat("("):
            neg = self.eat("-")
            k = Fraction(self.integer("exponent"))
            if self.eat("/"):
                if self.integer("denominator") != 2:
                    self.error("only half-integer exponents are allowed", self.pos - 1)
                k /= 2
            if not self.eat(")"):
                self.error("expected ')'")
        else:
            neg = self.eat("-")
            k = Fraction(self.integer("exponent"))
        return LaurentPoly.t_power(-k if neg else k)


def parse_expression(text: str) -> HExpr:
    """Parse ``text`` into an (unnormalized) ``HExpr``."""
    return _Parser(text).parse()
