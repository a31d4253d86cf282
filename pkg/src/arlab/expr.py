"""Text format for polynomials.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)? | '-' factor
    atom     := rational | var | '(' expr ')'
    rational := int ('/' uint)?
    var      := 'T' | 'X' uint

Parsing is precedence climbing over a token stream; every error carries the
byte offset where it was detected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .mpoly import MPoly
from .upoly import UPoly


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


# AST


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str

    @property
    def index(self) -> int:
        return 0 if self.name == "T" else int(self.name[1:])


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Const, Var, Add, Mul, Neg, Pow]


def variables(node: Node) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Const):
        return set()
    if isinstance(node, (Add, Mul)):
        return variables(node.left) | variables(node.right)
    if isinstance(node, Neg):
        return variables(node.operand)
    return variables(node.base)


def ast_arity(node: Node) -> int:
    """Largest X-index used (0 when only T or constants appear)."""
    return max((Var(v).index for v in variables(node) if v != "T"), default=0)


# tokenizer

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")
_VAR = re.compile(r"T|X[1-9]\d*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    data = text.encode("utf-8")
    # offsets are byte offsets; work on the byte string decoded as latin-1 so
    # character positions equal byte positions
    s = data.decode("latin-1")
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            if s[pos:].strip() == "":
                break
            while s[pos].isspace():
                pos += 1
            raise ExprSyntaxError(f"unexpected character {s[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(s)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, off = self.take()
        if val != value or kind != "op":
            raise ExprSyntaxError(f"expected {value!r}", off)

    def parse(self) -> Node:
        node = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", off)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                node = Add(node, rhs if val == "+" else Neg(rhs))
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        kind, val, off = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return Neg(self.factor())
        base = self.atom()
        kind, val, off = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, off = self.peek()
            if kind == "num":
                self.take()
                nk, nv, noff = self.peek()
                if nk == "op" and nv == "/":
                    raise ExprSyntaxError("fractional exponent", noff)
                return Pow(base, int(val))
            if kind == "op" and val == "-":
                raise ExprSyntaxError("negative exponent", off)
            if kind == "op" and val == "(":
                nk, nv, _ = self.tokens[self.i + 1]
                if nk == "op" and nv == "-":
                    raise ExprSyntaxError("negative exponent", off)
                raise ExprSyntaxError("exponent must be an unsigned integer literal", off)
            raise ExprSyntaxError("expected exponent", off)
        return base

    def atom(self) -> Node:
        kind, val, off = self.take()
        if kind == "num":
            num = int(val)
            nk, nv, noff = self.peek()
            if nk == "op" and nv == "/":
                self.take()
                dk, dv, doff = self.take()
                if dk != "num":
                    raise ExprSyntaxError("expected unsigned integer denominator", doff)
                if int(dv) == 0:
                    raise ExprSyntaxError("zero denominator", doff)
                return Const(Fraction(num, int(dv)))
            return Const(Fraction(num))
        if kind == "id":
            if not _VAR.fullmatch(val):
                raise ExprSyntaxError(f"unknown identifier {val!r}", off)
            return Var(val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", off)
        raise ExprSyntaxError(f"unexpected {val!r}", off)


def parse(text: str) -> Node:
    """Parse ``text`` into an AST; raises :class:`ExprSyntaxError`."""
    return _Parser(text).parse()


# evaluation


def _evaluate(node: Node, leaf):
    if isinstance(node, Const):
        return leaf(node)
    if isinstance(node, Var):
        return leaf(node)
    if isinstance(node, Add):
        return _evaluate(node.left, leaf) + _evaluate(node.right, leaf)
    if isinstance(node, Mul):
        return _evaluate(node.left, leaf) * _evaluate(node.right, leaf)
    if isinstance(node, Neg):
        return -_evaluate(node.operand, leaf)
    return _evaluate(node.base, leaf) ** node.exponent


def to_upoly(node: Node | str) -> UPoly:
    if isinstance(node, str):
        node = parse(node)
    extra = variables(node) - {"T"}
    if extra:
        raise ValueError(f"univariate input may only use T, found {sorted(extra)}")

    def leaf(n):
        return UPoly.const(n.value) if isinstance(n, Const) else UPoly.T()

    return _evaluate(node, leaf)


def to_mpoly(node: Node | str, arity: int | None = None) -> MPoly:
    if isinstance(node, str):
        node = parse(node)
    if "T" in variables(node):
        raise ValueError("multivariate input uses X1, X2, ...; found T")
    needed = max(ast_arity(node), 1)
    if arity is None:
        arity = needed
    if needed > arity:
        raise ValueError(f"expression uses X{needed} but arity is {arity}")

    def leaf(n):
        if isinstance(n, Const):
            return MPoly.const(n.value, arity)
        return MPoly.var(n.index, arity)

    return _evaluate(node, leaf)


# printing


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join(terms: list[tuple[Fraction, str]]) -> str:
    """terms: (coefficient, monomial string or '' for the constant)."""
    if not terms:
        return "0"
    parts = []
    for i, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_format_coeff(a)}*{mono}"
        else:
            body = _format_coeff(a)
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def _power(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def print_canonical(p: UPoly | MPoly) -> str:
    """Deterministic text form; ``parse`` reads it back exactly."""
    if isinstance(p, UPoly):
        terms = [(c, _power("T", k) if k else "") for k, c in reversed(list(enumerate(p.coeffs))) if c]
        return _join(terms)
    if isinstance(p, MPoly):
        terms = []
        for e, c in p.sorted_terms():
            mono = "*".join(_power(f"X{i + 1}", k) for i, k in enumerate(e) if k)
            terms.append((c, mono))
        return _join(terms)
    raise TypeError(f"cannot print {type(p).__name__}")


def parse_poly(text: str, arity: int | None = None) -> UPoly | MPoly:
    """Parse to a UPoly when only T appears, otherwise to an MPoly."""
    node = parse(text)
    vs = variables(node)
    if vs <= {"T"} and arity is None:
        return to_upoly(node)
    return to_mpoly(node, arity)
