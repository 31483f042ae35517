"""Recursive-descent parser for rational expressions in named variables.

Grammar (``^`` binds tighter than unary minus and is right associative)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)*
    atom   := NUMBER | NAME | '(' expr ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .mpoly import MPoly
from .ratfunc import RationalFunction

__all__ = [
    "ExpressionSyntaxError",
    "UnknownVariable",
    "Num",
    "Var",
    "BinOp",
    "Neg",
    "Pow",
    "parse_ast",
    "to_fraction",
    "parse",
]


class ExpressionSyntaxError(SyntaxError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownVariable(ValueError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable {name!r} at position {position}")
        self.name = name
        self.position = position


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, BinOp, Neg, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # only trailing whitespace left
        if m.group(1):
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(variables)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        return ExpressionSyntaxError(message, tok[2], self.text)

    def parse(self) -> Node:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            operand = self.unary()
            return Neg(operand) if val == "-" else operand
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        exps = []
        while self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num" or not tok[1].isdigit():
                raise self.error("exponent must be a nonnegative integer literal", tok)
            exps.append(int(tok[1]))
        e = 1
        for k in reversed(exps):
            e = k ** e
        return Pow(base, e) if exps else base

    def atom(self) -> Node:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Num(Fraction(val))
        if kind == "name":
            if val not in self.index:
                raise UnknownVariable(val, pos)
            return Var(self.index[val], val)
        if tok[:2] == ("op", "("):
            node = self.expr()
            if self.peek()[:2] != ("op", ")"):
                raise self.error("expected ')'")
            self.take()
            return node
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_ast(text: str, variables: Sequence[str]) -> Node:
    if len(set(variables)) != len(variables):
        raise ValueError("variable names must be distinct")
    return _Parser(text, variables).parse()


def to_fraction(node: Node, nvars: int) -> RationalFunction:
    """Flatten an expression tree into one reduced fraction."""
    if isinstance(node, Num):
        return RationalFunction(MPoly.const(node.value, nvars))
    if isinstance(node, Var):
        return RationalFunction(MPoly.var(node.index, nvars))
    if isinstance(node, Neg):
        return -to_fraction(node.operand, nvars)
    if isinstance(node, Pow):
        return to_fraction(node.base, nvars) ** node.exponent
    a, b = to_fraction(node.left, nvars), to_fraction(node.right, nvars)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    return a / b


def parse(text: str, variables: Sequence[str]) -> RationalFunction:
    """Parse ``text`` into a reduced fraction in ``variables`` (in order)."""
    return to_fraction(parse_ast(text, variables), len(variables))
