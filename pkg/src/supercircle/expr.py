"""Expression language for functions and operators.

Grammar::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' nat)?
    atom     := rational | 'x' | 'xi' | 'D' | 'Dbar' | '(' expr ')'
    rational := int ('/' nat)?

Products are compositions, so ``Dbar*x`` normalizes to ``x*Dbar - xi``.
Juxtaposition such as ``2x`` is a syntax error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .diffop import DiffOperator, compose_coeffs, _trim
from .superring import XI, X, ZERO, SuperFunction


class ParseError(ValueError):
    def __init__(self, message: str, text: str, offset: int, expected: tuple[str, ...] = ()):
        self.text = text
        self.offset = offset
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        self.expected = expected
        self.message = message
        detail = f"line {self.line}, column {self.column}: {message}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)


class NotAFunction(ValueError):
    """An operator expression was given where a function was required."""


# --- AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Atom:
    name: str  # x, xi, D or Dbar


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Atom, Neg, BinOp, Pow]

# --- tokenizer -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")
NAMES = ("x", "xi", "D", "Dbar")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "sym", "end"
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2):
            if m.group(2) not in NAMES:
                raise ParseError(f"unknown name {m.group(2)!r}", text, start, NAMES)
            tokens.append(Token("name", m.group(2), start))
        elif m.group(3):
            if m.group(3) not in "+-*/^()":
                raise ParseError(f"unexpected character {m.group(3)!r}", text, start)
            tokens.append(Token("sym", m.group(3), start))
        pos = m.end()
    tokens.append(Token("end", "", len(text.rstrip())))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, message: str, *expected: str):
        raise ParseError(message, self.text, self.tok.offset, expected)

    def describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def accept(self, sym: str) -> bool:
        if self.tok.kind == "sym" and self.tok.text == sym:
            self.i += 1
            return True
        return False

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.describe()}", "'+'", "'-'", "'*'", "'^'", "end of input")
        return node

    def expr(self) -> Expr:
        node = Neg(self.term()) if self.accept("-") else self.term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.term())
            elif self.accept("-"):
                node = BinOp("-", node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while self.accept("*"):
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.atom()
        if self.accept("^"):
            if self.tok.kind != "int":
                self.fail(f"unexpected {self.describe()}", "a natural exponent")
            node = Pow(node, int(self.tok.text))
            self.i += 1
        return node

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            value = Fraction(int(tok.text))
            if self.accept("/"):
                if self.tok.kind != "int" or int(self.tok.text) == 0:
                    self.fail(f"unexpected {self.describe()}", "a positive denominator")
                value /= int(self.tok.text)
                self.i += 1
            return Num(value)
        if tok.kind == "name":
            self.i += 1
            return Atom(tok.text)
        if self.accept("("):
            node = self.expr()
            if not self.accept(")"):
                self.fail(f"unexpected {self.describe()}", "')'")
            return node
        self.fail(f"unexpected {self.describe()}", "a number", "x", "xi", "D", "Dbar", "'('")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# --- normalization ---------------------------------------------------------------

_ATOMS = {
    "x": (X,),
    "xi": (XI,),
    "Dbar": (ZERO, SuperFunction.const(1)),
    # D = Dbar - 2 xi Dbar^2
    "D": (ZERO, SuperFunction.const(1), XI * -2),
}


def _add(a, b, sign=1):
    n = max(len(a), len(b))
    a = list(a) + [ZERO] * (n - len(a))
    b = list(b) + [ZERO] * (n - len(b))
    return tuple(p + q * sign for p, q in zip(a, b))


def coefficients(node: Expr) -> tuple[SuperFunction, ...]:
    """Normal form sum_i c_i Dbar^i of an expression, coefficients to the left."""
    if isinstance(node, Num):
        return _trim([SuperFunction.const(node.value)])
    if isinstance(node, Atom):
        return _ATOMS[node.name]
    if isinstance(node, Neg):
        return tuple(-c for c in coefficients(node.operand))
    if isinstance(node, Pow):
        base = coefficients(node.base)
        out: tuple[SuperFunction, ...] = (SuperFunction.const(1),)
        for _ in range(node.exponent):
            out = tuple(compose_coeffs(out, base))
        return _trim(out)
    left, right = coefficients(node.left), coefficients(node.right)
    if node.op == "+":
        return _trim(_add(left, right))
    if node.op == "-":
        return _trim(_add(left, right, -1))
    return _trim(compose_coeffs(left, right))


def parse_operator(text: str, src, dst) -> DiffOperator:
    return DiffOperator(src, dst, coefficients(parse(text)))


def parse_function(text: str) -> SuperFunction:
    cs = coefficients(parse(text))
    if len(cs) > 1:
        raise NotAFunction(f"{text!r} contains derivatives; a function of (x, xi) is required")
    return cs[0] if cs else ZERO
