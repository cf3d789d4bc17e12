# app/services/algebra/parser.py
"""Recursive descent parser for expressions in the generators.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*        "/" only by scalars
    unary  := "-" unary | factor
    factor := atom ("^" "-"? INT)?           |INT| <= MAX_EXPONENT
    atom   := "T" INT | "E" INT | "E{" INT ("," INT)+ "}" | INT | "u" | "(" expr ")"

Scalars are rational functions of u and stay scalars until they meet an
algebra element. Negative powers apply to scalars and to c * T_w.
"""
from dataclasses import dataclass
from typing import List, Union

from app.services.algebra.element import AlgebraElement
from app.services.algebra.generators import T_perm_inverse, e_set, gen
from app.services.combinatorics import SetPartition
from app.services.errors import EngineError, ExpressionSyntaxError, IndexRangeError
from app.services.exactmath import QU, RatFunc

MAX_EXPONENT = 64

Value = Union[RatFunc, AlgebraElement]


@dataclass(frozen=True)
class Token:
    kind: str  # INT, T, E, E{, u, op, eof
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], i))
            i = j
        elif ch == "E" and i + 1 < len(text) and text[i + 1] == "{":
            tokens.append(Token("E{", "E{", i))
            i += 2
        elif ch in "TEu":
            tokens.append(Token(ch, ch, i))
            i += 1
        elif ch in "+-*/^(),}":
            tokens.append(Token("op", ch, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(Token("eof", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str, n: int):
        self.tokens = tokenize(text)
        self.index = 0
        self.n = n

    # -------------------------------
    # TOKEN HELPERS
    # -------------------------------
    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.current
        self.index += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            raise ExpressionSyntaxError(f"expected {op!r}", self.current.position)
        return self.advance()

    def expect_int(self) -> int:
        if self.current.kind != "INT":
            raise ExpressionSyntaxError("expected an integer", self.current.position)
        return int(self.advance().text)

    # -------------------------------
    # GRAMMAR
    # -------------------------------
    def parse(self) -> Value:
        value = self.expr()
        if self.current.kind != "eof":
            raise ExpressionSyntaxError(f"unexpected {self.current.text!r}", self.current.position)
        return value

    def expr(self) -> Value:
        value = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = _add(value, rhs, self.n) if op == "+" else _add(value, _neg(rhs), self.n)
        return value

    def term(self) -> Value:
        value = self.unary()
        while self.at_op("*", "/"):
            tok = self.advance()
            rhs = self.unary()
            if tok.text == "*":
                value = _mul(value, rhs)
            else:
                if not isinstance(rhs, RatFunc):
                    raise ExpressionSyntaxError("can only divide by a scalar", tok.position)
                if not rhs:
                    raise ExpressionSyntaxError("division by zero", tok.position)
                value = value * rhs.inverse()
        return value

    def unary(self) -> Value:
        if self.at_op("-"):
            self.advance()
            return _neg(self.unary())
        return self.factor()

    def factor(self) -> Value:
        base = self.atom()
        if not self.at_op("^"):
            return base
        caret = self.advance()
        negative = False
        if self.at_op("-"):
            self.advance()
            negative = True
        k = self.expect_int()
        if k > MAX_EXPONENT:
            raise ExpressionSyntaxError(f"exponent {k} exceeds {MAX_EXPONENT}", caret.position)
        return _power(base, -k if negative else k, self.n, caret.position)

    def atom(self) -> Value:
        tok = self.current
        if tok.kind == "INT":
            self.advance()
            return RatFunc.constant(int(tok.text))
        if tok.kind == "u":
            self.advance()
            return RatFunc.u()
        if tok.kind in ("T", "E"):
            self.advance()
            i = self.expect_int()
            self._check_generator(i, tok.position)
            return gen(tok.kind, i, self.n, QU)
        if tok.kind == "E{":
            self.advance()
            points = [self.expect_int()]
            while self.at_op(","):
                self.advance()
                points.append(self.expect_int())
            self.expect_op("}")
            if len(points) < 2 or len(set(points)) != len(points):
                raise ExpressionSyntaxError("E{...} needs at least two distinct indices", tok.position)
            if any(not 1 <= p <= self.n for p in points):
                raise IndexRangeError(f"E{{{','.join(map(str, points))}}} out of range for n={self.n}")
            return e_set(SetPartition.from_blocks([points], self.n), QU)
        if self.at_op("("):
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        raise ExpressionSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.position)

    def _check_generator(self, i: int, position: int) -> None:
        if not 1 <= i <= self.n - 1:
            raise IndexRangeError(f"generator index {i} at position {position} out of range 1..{self.n - 1}")


# -------------------------------
# MIXED ARITHMETIC
# -------------------------------
def _as_element(v: Value, n: int) -> AlgebraElement:
    return v if isinstance(v, AlgebraElement) else AlgebraElement.scalar(v, n, QU)


def _add(a: Value, b: Value, n: int) -> Value:
    if isinstance(a, RatFunc) and isinstance(b, RatFunc):
        return a + b
    return _as_element(a, n) + _as_element(b, n)


def _neg(a: Value) -> Value:
    return -a


def _mul(a: Value, b: Value) -> Value:
    if isinstance(a, RatFunc) and isinstance(b, RatFunc):
        return a * b
    if isinstance(a, RatFunc):
        return b.scale(a)
    return a * b


def _power(base: Value, k: int, n: int, position: int) -> Value:
    if isinstance(base, RatFunc):
        if k < 0 and not base:
            raise ExpressionSyntaxError("negative power of zero", position)
        return base**k
    if k >= 0:
        acc = AlgebraElement.identity(n, QU)
        for _ in range(k):
            acc = acc * base
        return acc
    if len(base.terms) != 1:
        raise ExpressionSyntaxError("negative powers need a scalar or a single c*T_w", position)
    (key, c), = base.terms.items()
    if not key.partition.is_bottom():
        raise ExpressionSyntaxError("E_A is not invertible", position)
    inv = T_perm_inverse(key.perm, QU).scale(RatFunc.coerce(c).inverse())
    return _power(inv, -k, n, position)


def parse_word(text: str, n: int) -> AlgebraElement:
    if n < 1:
        raise EngineError("n must be at least 1")
    return _as_element(Parser(text, n).parse(), n)


def parse_scalar(text: str) -> RatFunc:
    value = Parser(text, 1).parse()
    if not isinstance(value, RatFunc):
        raise ExpressionSyntaxError("expected a rational function of u", 0)
    return value
