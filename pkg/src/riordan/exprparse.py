"""Recursive-descent parser for rational-function expressions in t.

Grammar (standard precedence, left-associative, '^' binds tightest):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' uint)?
    atom   := uint | 't' | 'x' | 'y' | '(' expr ')' | 'exp' '(' expr ')' | '-' atom

Only ASCII operators; whitespace is ignored.  Division and exp are checked at
evaluation time (the denominator needs a nonzero constant term, the exp
argument must vanish at 0), not at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import X, Y
from .series import Series, const_series, t_series


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Literal:
    value: int


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Negate:
    operand: "SeriesExpr"


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "SeriesExpr"
    right: "SeriesExpr"


@dataclass(frozen=True)
class Power:
    base: "SeriesExpr"
    exponent: int


@dataclass(frozen=True)
class ExpCall:
    argument: "SeriesExpr"


SeriesExpr = Union[Literal, Variable, Negate, BinaryOp, Power, ExpCall]

_OPERATORS = set("+-*/^()")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(("int", int(text[start:i]), start))
            continue
        if ch.isalpha():
            start = i
            while i < len(text) and text[i].isalpha():
                i += 1
            tokens.append(("name", text[start:i], start))
            continue
        if ch in _OPERATORS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str):
        kind_found, value, position = self.peek()
        if kind_found != kind:
            raise ParseError(f"expected {kind!r}, found {value!r}", position)
        return self.advance()

    def parse(self) -> SeriesExpr:
        tree = self.expr()
        kind, value, position = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value!r}", position)
        return tree

    def expr(self) -> SeriesExpr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            node = BinaryOp(op, node, self.term())
        return node

    def term(self) -> SeriesExpr:
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            node = BinaryOp(op, node, self.factor())
        return node

    def factor(self) -> SeriesExpr:
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            kind, value, position = self.peek()
            if kind != "int":
                raise ParseError(f"expected a non-negative integer exponent, found {value!r}", position)
            self.advance()
            node = Power(node, value)
        return node

    def atom(self) -> SeriesExpr:
        kind, value, position = self.peek()
        if kind == "int":
            self.advance()
            return Literal(value)
        if kind == "-":
            self.advance()
            return Negate(self.atom())
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "name":
            self.advance()
            if value in ("t", "x", "y"):
                return Variable(value)
            if value == "exp":
                self.expect("(")
                node = self.expr()
                self.expect(")")
                return ExpCall(node)
            raise ParseError(f"unknown name {value!r}", position)
        raise ParseError(f"unexpected token {value!r}", position)


def parse(text: str) -> SeriesExpr:
    return _Parser(text).parse()


def eval_expr(tree: SeriesExpr, order: int) -> Series:
    """Evaluate to an exact Series truncated at the given order."""
    if isinstance(tree, Literal):
        return const_series(tree.value, order)
    if isinstance(tree, Variable):
        if tree.name == "t":
            return t_series(order)
        return const_series(X if tree.name == "x" else Y, order)
    if isinstance(tree, Negate):
        return -eval_expr(tree.operand, order)
    if isinstance(tree, Power):
        return eval_expr(tree.base, order) ** tree.exponent
    if isinstance(tree, ExpCall):
        return eval_expr(tree.argument, order).exp()
    if isinstance(tree, BinaryOp):
        left = eval_expr(tree.left, order)
        right = eval_expr(tree.right, order)
        if tree.op == "+":
            return left + right
        if tree.op == "-":
            return left - right
        if tree.op == "*":
            return left * right
        return left * right.reciprocal()
    raise TypeError(f"not a series expression: {tree!r}")


def evaluate(text: str, order: int) -> Series:
    return eval_expr(parse(text), order)


_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


def render(tree: SeriesExpr) -> str:
    """Canonical text for a tree; reparsing it yields a structurally
    identical tree."""
    if isinstance(tree, Literal):
        return str(tree.value)
    if isinstance(tree, Variable):
        return tree.name
    if isinstance(tree, Negate):
        inner = render(tree.operand)
        if isinstance(tree.operand, (BinaryOp, Power)):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(tree, ExpCall):
        return f"exp({render(tree.argument)})"
    if isinstance(tree, Power):
        base = render(tree.base)
        if isinstance(tree.base, (BinaryOp, Negate, Power)):
            base = f"({base})"
        return f"{base}^{tree.exponent}"
    if isinstance(tree, BinaryOp):
        level = _PRECEDENCE[tree.op]
        left = render(tree.left)
        if isinstance(tree.left, BinaryOp) and _PRECEDENCE[tree.left.op] < level:
            left = f"({left})"
        right = render(tree.right)
        if isinstance(tree.right, BinaryOp) and _PRECEDENCE[tree.right.op] <= level:
            right = f"({right})"
        return f"{left} {tree.op} {right}"
    raise TypeError(f"not a series expression: {tree!r}")
