"""Parse and format polynomial expressions.

Grammar (whitespace insignificant, implicit multiplication rejected):

    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := '-' unary | power
    power    := atom ('^' exponent)*
    exponent := INT | '(' INT ')'
    atom     := INT ('/' INT)? | VAR | '(' expr ')'

INT is a string of digits; a '/' between two integer literals forms an
exact rational constant.  Exponents must be non-negative integers.  Unary
minus binds looser than '^', so "-x^2" is -(x^2).  Variables follow the
convention: named mode uses x, y, z, w (dim <= 4); indexed mode uses
x1..xd.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Polynomial

NAMED_VARS = ("x", "y", "z", "w")

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([()+\-*/^]))")


class ParseError(ValueError):
    """Syntax or convention error, carrying the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class VarConvention:
    """Variable naming convention: 'named' (x,y,z,w) or 'indexed' (x1..xd)."""

    mode: str
    dim: int

    def __post_init__(self):
        if self.mode not in ("named", "indexed"):
            raise ValueError(f"unknown variable mode {self.mode!r}")
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        if self.mode == "named" and self.dim > len(NAMED_VARS):
            raise ValueError(f"named mode supports dim <= {len(NAMED_VARS)}, got {self.dim}")

    def names(self) -> tuple[str, ...]:
        if self.mode == "named":
            return NAMED_VARS[: self.dim]
        return tuple(f"x{i + 1}" for i in range(self.dim))

    def index_of(self, name: str) -> int | None:
        if self.mode == "named":
            if name in NAMED_VARS:
                idx = NAMED_VARS.index(name)
                return idx if idx < self.dim else -1
            return None
        m = re.fullmatch(r"x([1-9][0-9]*)", name)
        if m:
            idx = int(m.group(1)) - 1
            return idx if idx < self.dim else -1
        return None


def default_convention(dim: int) -> VarConvention:
    """Named variables for dim <= 4, indexed otherwise."""
    return VarConvention("named" if dim <= len(NAMED_VARS) else "indexed", dim)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_pos = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_pos]!r}", bad_pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, conv: VarConvention):
        self.tokens = _tokenize(text)
        self.conv = conv
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term()
                result = result + rhs if val == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                result = result * self.unary()
            else:
                return result

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        result = self.atom()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "^":
                self.advance()
                result = result ** self.exponent()
            else:
                return result

    def exponent(self) -> int:
        kind, val, pos = self.peek()
        if kind == "int":
            self.advance()
            return int(val)
        if kind == "op" and val == "(":
            self.advance()
            kind2, val2, pos2 = self.peek()
            if kind2 == "op" and val2 == "-":
                raise ParseError("exponent must be a non-negative integer", pos2)
            if kind2 != "int":
                raise ParseError("exponent must be a non-negative integer", pos2)
            self.advance()
            self.expect_op(")")
            return int(val2)
        if kind == "op" and val == "-":
            raise ParseError("exponent must be a non-negative integer", pos)
        raise ParseError("exponent must be a non-negative integer", pos)

    def atom(self) -> Polynomial:
        kind, val, pos = self.advance()
        if kind == "int":
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.advance()
                kind3, val3, pos3 = self.peek()
                if kind3 != "int":
                    raise ParseError("expected integer denominator", pos3)
                self.advance()
                if int(val3) == 0:
                    raise ParseError("zero denominator", pos3)
                return Polynomial.constant(self.conv.dim, Fraction(int(val), int(val3)))
            return Polynomial.constant(self.conv.dim, int(val))
        if kind == "name":
            idx = self.conv.index_of(val)
            if idx is None:
                raise ParseError(f"unknown variable {val!r}", pos)
            if idx == -1:
                raise ParseError(
                    f"variable {val!r} exceeds dimension {self.conv.dim}", pos
                )
            return Polynomial.variable(self.conv.dim, idx)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {val!r}" if val else "unexpected end of input", pos)


def parse(text: str, conv: VarConvention) -> Polynomial:
    """Parse an expression into canonical fully-expanded form."""
    return _Parser(text, conv).parse()


def format_poly(p: Polynomial, conv: VarConvention) -> str:
    """Canonical string under descending graded-lex term order.

    Inverse of :func:`parse`: ``parse(format_poly(p, conv), conv) == p``.
    """
    if conv.dim != p.dim:
        raise ValueError(f"convention dim {conv.dim} != polynomial dim {p.dim}")
    if p.is_zero:
        return "0"
    names = conv.names()
    pieces: list[str] = []
    for exps, coeff in p.sorted_terms():
        vars_part = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps)
            if e > 0
        )
        mag = abs(coeff)
        if not vars_part:
            body = str(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{mag}*{vars_part}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)
