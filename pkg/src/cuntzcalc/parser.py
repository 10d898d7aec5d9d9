"""Expression language for the calculator.

Grammar (whitespace free between tokens; ``'`` binds tightest)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := postfix (['*'] postfix)*          # juxtaposition or explicit *
    postfix := atom ("'")*
    atom    := NUMBER ['/' NUMBER]               # exact rational literal
             | 'i'                               # imaginary unit
             | 'S' '[' NUMBER (',' NUMBER)* ']'  # generator word
             | '(' expr ')'
             | 'apply' '(' map ',' expr ')'
             | 'phi' '(' expr ')'
             | 'inner' '(' expr ',' expr ')'
             | IDENT                             # repl binding
    map     := 'Phi' | 'Psi' | 'id'
             | 'ad' '(' expr ')'
             | 'kraus' '(' '(' expr ',' expr ')' (',' '(' expr ',' expr ')')* ')'
             | 'hom' '(' expr (',' expr)* ')'
             | 'compose' '(' map ',' map ')'
             | 'sum' '(' map (',' map)* ')'
             | 'qfree' '(' '[' row (',' row)* ']' ')'
    row     := '[' expr (',' expr)* ']'

``phi`` and ``inner`` evaluate to scalars; everything else evaluates to an
element.  Scalars mixed into element arithmetic are read as multiples of
the unit.  Parse and evaluation errors carry line and column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element
from .maps import (
    Compose,
    Homomorphism,
    Identity,
    MapExpr,
    MapSum,
    WeightedKraus,
    ad,
    canonical_endomorphism,
    quasi_free,
    standard_left_inverse,
)
from .scalars import GaussianRational, as_scalar
from .state import inner, phi

__all__ = ["ExprError", "parse", "evaluate", "RESERVED"]

RESERVED = {
    "S",
    "i",
    "apply",
    "phi",
    "inner",
    "Phi",
    "Psi",
    "id",
    "ad",
    "kraus",
    "hom",
    "compose",
    "sum",
    "qfree",
}


class ExprError(ValueError):
    """Parse or evaluation error, carrying source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


# -- lexing ---------------------------------------------------------------

_PUNCT = {
    "[": "LBRACK",
    "]": "RBRACK",
    "(": "LPAREN",
    ")": "RPAREN",
    ",": "COMMA",
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "/": "SLASH",
    "'": "PRIME",
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _lex(src: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(Token("NUMBER", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", src[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ExprError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    line: int
    col: int


@dataclass(frozen=True)
class Num(Node):
    value: Fraction


@dataclass(frozen=True)
class Imag(Node):
    pass


@dataclass(frozen=True)
class Gen(Node):
    letters: tuple


@dataclass(frozen=True)
class Ref(Node):
    name: str


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Adj(Node):
    arg: Node


@dataclass(frozen=True)
class Apply(Node):
    map: Node
    arg: Node


@dataclass(frozen=True)
class PhiCall(Node):
    arg: Node


@dataclass(frozen=True)
class InnerCall(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class MapName(Node):
    kind: str  # "Phi" | "Psi" | "id"


@dataclass(frozen=True)
class AdMap(Node):
    arg: Node


@dataclass(frozen=True)
class KrausMap(Node):
    pairs: tuple  # of (weight expr, op expr)


@dataclass(frozen=True)
class HomMap(Node):
    images: tuple


@dataclass(frozen=True)
class ComposeMap(Node):
    outer: Node
    inner: Node


@dataclass(frozen=True)
class SumMap(Node):
    parts: tuple


@dataclass(frozen=True)
class QfreeMap(Node):
    rows: tuple  # of tuples of exprs


_FACTOR_START = {"NUMBER", "IDENT", "LPAREN"}


class _Parser:
    def __init__(self, tokens: list[Token], n: int):
        self.tokens = tokens
        self.pos = 0
        self.n = n

    # -- token helpers ---------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise ExprError(f"expected {what}, got {shown!r}", tok.line, tok.col)
        return self.next()

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ExprError(message, tok.line, tok.col)

    # -- grammar ------------------------------------------------------------

    def parse_expr(self) -> Node:
        tok = self.peek()
        if tok.kind == "MINUS":
            self.next()
            node: Node = Neg(tok.line, tok.col, self.parse_term())
        else:
            node = self.parse_term()
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.next()
            rhs = self.parse_term()
            cls = Add if op.kind == "PLUS" else Sub
            node = cls(op.line, op.col, node, rhs)
        return node

    def parse_term(self) -> Node:
        node = self.parse_postfix()
        while True:
            tok = self.peek()
            if tok.kind == "STAR":
                self.next()
                node = Mul(tok.line, tok.col, node, self.parse_postfix())
            elif tok.kind in _FACTOR_START:
                node = Mul(tok.line, tok.col, node, self.parse_postfix())
            else:
                return node

    def parse_postfix(self) -> Node:
        node = self.parse_atom()
        while self.peek().kind == "PRIME":
            tok = self.next()
            node = Adj(tok.line, tok.col, node)
        return node

    def parse_atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "NUMBER":
            return self.parse_rational()
        if tok.kind == "LPAREN":
            self.next()
            node = self.parse_expr()
            self.expect("RPAREN", "')'")
            return node
        if tok.kind == "IDENT":
            if tok.text == "i":
                self.next()
                return Imag(tok.line, tok.col)
            if tok.text == "S":
                return self.parse_generator()
            if tok.text == "apply":
                self.next()
                self.expect("LPAREN", "'('")
                map_node = self.parse_map()
                self.expect("COMMA", "','")
                arg = self.parse_expr()
                self.expect("RPAREN", "')'")
                return Apply(tok.line, tok.col, map_node, arg)
            if tok.text == "phi":
                self.next()
                self.expect("LPAREN", "'('")
                arg = self.parse_expr()
                self.expect("RPAREN", "')'")
                return PhiCall(tok.line, tok.col, arg)
            if tok.text == "inner":
                self.next()
                self.expect("LPAREN", "'('")
                left = self.parse_expr()
                self.expect("COMMA", "','")
                right = self.parse_expr()
                self.expect("RPAREN", "')'")
                return InnerCall(tok.line, tok.col, left, right)
            if tok.text in RESERVED:
                self.fail(f"{tok.text!r} is not valid here", tok)
            self.next()
            return Ref(tok.line, tok.col, tok.text)
        self.fail(f"expected an expression, got {tok.text or 'end of input'!r}", tok)

    def parse_rational(self) -> Num:
        tok = self.expect("NUMBER", "a number")
        value = Fraction(int(tok.text))
        if self.peek().kind == "SLASH":
            self.next()
            den_tok = self.expect("NUMBER", "a denominator")
            den = int(den_tok.text)
            if den == 0:
                raise ExprError("zero denominator", den_tok.line, den_tok.col)
            value = Fraction(int(tok.text), den)
        return Num(tok.line, tok.col, value)

    def parse_generator(self) -> Gen:
        tok = self.expect("IDENT", "'S'")
        self.expect("LBRACK", "'['")
        letters = [self.parse_letter()]
        while self.peek().kind == "COMMA":
            self.next()
            letters.append(self.parse_letter())
        self.expect("RBRACK", "']'")
        return Gen(tok.line, tok.col, tuple(letters))

    def parse_letter(self) -> int:
        tok = self.expect("NUMBER", "a generator index")
        value = int(tok.text)
        if not 1 <= value <= self.n:
            raise ExprError(
                f"unknown generator index {value} for rank {self.n}", tok.line, tok.col
            )
        return value

    # -- map sub-grammar ------------------------------------------------------

    def parse_map(self) -> Node:
        tok = self.peek()
        if tok.kind != "IDENT":
            self.fail("expected a map", tok)
        if tok.text in ("Phi", "Psi", "id"):
            self.next()
            return MapName(tok.line, tok.col, tok.text)
        if tok.text == "ad":
            self.next()
            self.expect("LPAREN", "'('")
            arg = self.parse_expr()
            self.expect("RPAREN", "')'")
            return AdMap(tok.line, tok.col, arg)
        if tok.text == "kraus":
            self.next()
            self.expect("LPAREN", "'('")
            pairs = [self.parse_kraus_pair()]
            while self.peek().kind == "COMMA":
                self.next()
                pairs.append(self.parse_kraus_pair())
            self.expect("RPAREN", "')'")
            return KrausMap(tok.line, tok.col, tuple(pairs))
        if tok.text == "hom":
            self.next()
            self.expect("LPAREN", "'('")
            images = [self.parse_expr()]
            while self.peek().kind == "COMMA":
                self.next()
                images.append(self.parse_expr())
            self.expect("RPAREN", "')'")
            return HomMap(tok.line, tok.col, tuple(images))
        if tok.text == "compose":
            self.next()
            self.expect("LPAREN", "'('")
            outer = self.parse_map()
            self.expect("COMMA", "','")
            inner = self.parse_map()
            self.expect("RPAREN", "')'")
            return ComposeMap(tok.line, tok.col, outer, inner)
        if tok.text == "sum":
            self.next()
            self.expect("LPAREN", "'('")
            parts = [self.parse_map()]
            while self.peek().kind == "COMMA":
                self.next()
                parts.append(self.parse_map())
            self.expect("RPAREN", "')'")
            return SumMap(tok.line, tok.col, tuple(parts))
        if tok.text == "qfree":
            self.next()
            self.expect("LPAREN", "'('")
            self.expect("LBRACK", "'['")
            rows = [self.parse_row()]
            while self.peek().kind == "COMMA":
                self.next()
                rows.append(self.parse_row())
            self.expect("RBRACK", "']'")
            self.expect("RPAREN", "')'")
            return QfreeMap(tok.line, tok.col, tuple(rows))
        self.fail(f"unknown map {tok.text!r}", tok)

    def parse_kraus_pair(self):
        self.expect("LPAREN", "'('")
        weight = self.parse_expr()
        self.expect("COMMA", "','")
        op = self.parse_expr()
        self.expect("RPAREN", "')'")
        return (weight, op)

    def parse_row(self) -> tuple:
        self.expect("LBRACK", "'['")
        entries = [self.parse_expr()]
        while self.peek().kind == "COMMA":
            self.next()
            entries.append(self.parse_expr())
        self.expect("RBRACK", "']'")
        return tuple(entries)


def parse(src: str, n: int) -> Node:
    """Parse one expression for rank ``n``; raises ExprError with position."""
    parser = _Parser(_lex(src), n)
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ExprError(f"unexpected {tok.text!r} after expression", tok.line, tok.col)
    return node


# -- evaluation -----------------------------------------------------------------


def _as_element(value, n: int) -> Element:
    if isinstance(value, Element):
        return value
    return Element.unit(n).scale(value)


def _as_scalar_value(value, node: Node) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    part = value.scalar_part()
    if part is None:
        raise ExprError("expected a scalar here", node.line, node.col)
    return part


def evaluate(node: Node, n: int, env: dict | None = None):
    """Evaluate to an Element, or to a scalar for phi/inner and pure-scalar
    arithmetic.  ``env`` supplies repl bindings."""
    env = env or {}

    def ev(nd):
        if isinstance(nd, Num):
            return as_scalar(nd.value)
        if isinstance(nd, Imag):
            return GaussianRational(Fraction(0), Fraction(1))
        if isinstance(nd, Gen):
            return Element.word(n, nd.letters)
        if isinstance(nd, Ref):
            if nd.name not in env:
                raise ExprError(f"unbound name {nd.name!r}", nd.line, nd.col)
            return env[nd.name]
        if isinstance(nd, Neg):
            value = ev(nd.arg)
            return -value if isinstance(value, GaussianRational) else value.scale(-1)
        if isinstance(nd, (Add, Sub)):
            left, right = ev(nd.left), ev(nd.right)
            if isinstance(left, GaussianRational) and isinstance(right, GaussianRational):
                return left + right if isinstance(nd, Add) else left - right
            left = _as_element(left, n)
            right = _as_element(right, n)
            return left + right if isinstance(nd, Add) else left - right
        if isinstance(nd, Mul):
            left, right = ev(nd.left), ev(nd.right)
            if isinstance(left, GaussianRational) and isinstance(right, GaussianRational):
                return left * right
            if isinstance(left, GaussianRational):
                return right.scale(left)
            if isinstance(right, GaussianRational):
                return left.scale(right)
            return left * right
        if isinstance(nd, Adj):
            value = ev(nd.arg)
            if isinstance(value, GaussianRational):
                return value.conjugate()
            return value.adjoint()
        if isinstance(nd, Apply):
            mp = ev_map(nd.map)
            return mp.apply(_as_element(ev(nd.arg), n))
        if isinstance(nd, PhiCall):
            return phi(_as_element(ev(nd.arg), n))
        if isinstance(nd, InnerCall):
            return inner(
                _as_element(ev(nd.left), n), _as_element(ev(nd.right), n)
            )
        raise ExprError("malformed expression", nd.line, nd.col)

    def ev_map(nd) -> MapExpr:
        try:
            if isinstance(nd, MapName):
                if nd.kind == "Phi":
                    return canonical_endomorphism(n)
                if nd.kind == "Psi":
                    return standard_left_inverse(n)
                return Identity(n)
            if isinstance(nd, AdMap):
                return ad(_as_element(ev(nd.arg), n))
            if isinstance(nd, KrausMap):
                pairs = []
                for weight_node, op_node in nd.pairs:
                    weight = _as_scalar_value(ev(weight_node), weight_node)
                    pairs.append((weight, _as_element(ev(op_node), n)))
                return WeightedKraus(tuple(pairs))
            if isinstance(nd, HomMap):
                return Homomorphism(
                    tuple(_as_element(ev(img), n) for img in nd.images)
                )
            if isinstance(nd, ComposeMap):
                return Compose(ev_map(nd.outer), ev_map(nd.inner))
            if isinstance(nd, SumMap):
                return MapSum(tuple(ev_map(p) for p in nd.parts))
            if isinstance(nd, QfreeMap):
                rows = [
                    [_as_scalar_value(ev(e), e) for e in row] for row in nd.rows
                ]
                return quasi_free(rows)
        except ExprError:
            raise
        except ValueError as exc:
            raise ExprError(str(exc), nd.line, nd.col) from exc
        raise ExprError("malformed map expression", nd.line, nd.col)

    return ev(node)
