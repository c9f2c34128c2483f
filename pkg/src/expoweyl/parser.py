"""Surface syntax for Weyl-algebra expressions.

Grammar (whitespace is insignificant)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' ['-'] int)?
    atom   := int | symbol | 'X(' coords ')' | 'E(' coords ')' | 'Y' | 'D'
            | '[' expr ',' expr ']' | '(' expr ')'
    coords := ['-'] int (',' ['-'] int)*

Division is only allowed by scalar-valued expressions.  ``[a, b]`` is the
commutator ``a*b - b*a``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

GENERATORS = {"X", "E", "Y", "D"}


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


class EvalError(ValueError):
    def __init__(self, message: str, column: int | None = None):
        super().__init__(message if column is None else f"column {column}: {message}")
        self.message = message
        self.column = column


@dataclass(frozen=True)
class Num:
    value: int
    col: int = 0


@dataclass(frozen=True)
class Sym:
    name: str
    col: int = 0


@dataclass(frozen=True)
class Gen:
    kind: str  # X | E | Y | D
    coords: tuple[int, ...] = ()
    col: int = 0


@dataclass(frozen=True)
class Neg:
    arg: object
    col: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object
    col: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    col: int = 0


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object
    col: int = 0


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1) is not None:
            toks.append(("int", m.group(1), col))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", col)
            toks.append(("op", ch, col))
        pos = m.end()
    toks.append(("end", "", len(text.rstrip()) + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def at(self, value) -> bool:
        kind, v, _ = self.tok
        return kind == "op" and v == value

    def expect(self, value):
        kind, v, col = self.tok
        if kind != "op" or v != value:
            found = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected {value!r}, found {found}", col)
        self.i += 1

    def parse(self):
        node = self.expr()
        kind, v, col = self.tok
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", col)
        return node

    def expr(self):
        col = self.tok[2]
        if self.at("-"):
            self.i += 1
            node = Neg(self.term(), col)
        else:
            node = self.term()
        while self.at("+") or self.at("-"):
            op, c = self.tok[1], self.tok[2]
            self.i += 1
            node = BinOp(op, node, self.term(), c)
        return node

    def term(self):
        node = self.factor()
        while self.at("*") or self.at("/"):
            op, c = self.tok[1], self.tok[2]
            self.i += 1
            node = BinOp(op, node, self.factor(), c)
        return node

    def factor(self):
        node = self.atom()
        if self.at("^"):
            c = self.tok[2]
            self.i += 1
            sign = 1
            if self.at("-"):
                self.i += 1
                sign = -1
            kind, v, col = self.tok
            if kind != "int":
                raise ParseError("expected integer exponent", col)
            self.i += 1
            node = Pow(node, sign * int(v), c)
        return node

    def signed_int(self):
        sign = 1
        if self.at("-"):
            self.i += 1
            sign = -1
        kind, v, col = self.tok
        if kind != "int":
            found = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected integer, found {found}", col)
        self.i += 1
        return sign * int(v)

    def atom(self):
        kind, v, col = self.tok
        if kind == "int":
            self.i += 1
            return Num(int(v), col)
        if kind == "name":
            self.i += 1
            if v in ("X", "E"):
                self.expect("(")
                coords = [self.signed_int()]
                while self.at(","):
                    self.i += 1
                    coords.append(self.signed_int())
                self.expect(")")
                return Gen(v, tuple(coords), col)
            if v in ("Y", "D"):
                return Gen(v, (), col)
            return Sym(v, col)
        if kind == "op" and v == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if kind == "op" and v == "[":
            self.i += 1
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return Bracket(a, b, col)
        found = "end of input" if kind == "end" else repr(v)
        raise ParseError(f"unexpected {found}", col)


def parse(text: str):
    """Parse ``text`` into an expression tree; raises :class:`ParseError` with a 1-based column."""
    return _Parser(text).parse()


def evaluate(node, algebra):
    """Evaluate an expression tree to a normally ordered element of ``algebra``."""
    from .scalars import ScalarError

    ring = algebra.ring
    if isinstance(node, Num):
        return algebra.const(node.value)
    if isinstance(node, Sym):
        if not algebra.field.has_symbol(node.name):
            raise EvalError(f"unknown symbol {node.name!r}", node.col)
        return algebra.const(algebra.field.symbol(node.name))
    if isinstance(node, Gen):
        if node.kind == "D":
            return algebra.d()
        if node.kind == "Y":
            return algebra.y()
        if node.kind == "X":
            if len(node.coords) != ring.rank:
                raise EvalError(f"X expects {ring.rank} coordinates, got {len(node.coords)}", node.col)
            return algebra.element(ring.term(ring.monomial(x_part=node.coords)))
        if len(node.coords) not in (ring.rank, ring.e_rank):
            raise EvalError(f"E expects {ring.e_rank} coordinates, got {len(node.coords)}", node.col)
        return algebra.element(ring.term(ring.monomial(e_part=node.coords)))
    if isinstance(node, Neg):
        return -evaluate(node.arg, algebra)
    if isinstance(node, Bracket):
        a, b = evaluate(node.left, algebra), evaluate(node.right, algebra)
        return algebra.commutator(a, b)
    if isinstance(node, Pow):
        base = evaluate(node.base, algebra)
        if node.exp >= 0:
            return base**node.exp
        if base.is_scalar():
            c = base.terms.get((ring.unit_monomial, 0), algebra.field.zero)
            if not c:
                raise EvalError("zero raised to a negative power", node.col)
            return algebra.const(c**node.exp)
        if len(base.terms) == 1:
            ((m, k), c) = next(iter(base.terms.items()))
            if k == 0:
                inv = algebra.element(ring.term(m.inverse(), c.inverse()))
                return inv ** (-node.exp)
        raise EvalError("negative powers are only defined for units", node.col)
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, algebra), evaluate(node.right, algebra)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if not b.is_scalar():
            raise EvalError("division by a non-scalar", node.col)
        c = b.terms.get((ring.unit_monomial, 0))
        if c is None:
            raise EvalError("division by zero", node.col)
        try:
            return a.scale(c.inverse())
        except (ZeroDivisionError, ScalarError) as exc:
            raise EvalError(str(exc), node.col) from None
    raise TypeError(f"unknown node {node!r}")


def parse_element(text: str, algebra):
    return evaluate(parse(text), algebra)


def parse_scalar(text: str, field):
    """Parse a scalar-only expression (no generators) into ``field``."""
    node = parse(text)
    return _eval_scalar(node, field)


def _eval_scalar(node, F):
    if isinstance(node, Num):
        return F(node.value)
    if isinstance(node, Sym):
        if not F.has_symbol(node.name):
            raise EvalError(f"unknown symbol {node.name!r}", node.col)
        return F.symbol(node.name)
    if isinstance(node, Neg):
        return -_eval_scalar(node.arg, F)
    if isinstance(node, Pow):
        b = _eval_scalar(node.base, F)
        if node.exp < 0 and not b:
            raise EvalError("zero raised to a negative power", node.col)
        return b**node.exp
    if isinstance(node, BinOp):
        a, b = _eval_scalar(node.left, F), _eval_scalar(node.right, F)
        if node.op == "/" and not b:
            raise EvalError("division by zero", node.col)
        return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__, "/": a.__truediv__}[node.op](b)
    raise EvalError("generators are not allowed in a scalar expression", getattr(node, "col", None))
