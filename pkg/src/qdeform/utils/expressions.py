"""
Recursive-descent parser for scalar, group and polynomial expressions.

Grammar (whitespace is ignored):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')' | 'serre' '(' NAME ',' NAME ',' ['-'] INT ')'

A NAME is a letter of the datum, a group generator, or the field symbol
(q, or z for cyclotomic fields where q is accepted as an alias).
"""

import re
from typing import List, Optional, Tuple, Union

from ..algebra.abgroup import GroupElement, GroupSpec
from ..algebra.braided import serre_element
from ..algebra.freealg import AlgebraError, NcPoly
from ..algebra.report import QDeformError
from ..algebra.scalars import Scalar, ScalarError, ScalarField
from ..algebra.yd import YDDatum

Value = Union[Scalar, NcPoly]

_TOKEN = re.compile(r"\d+|[A-Za-z_][A-Za-z0-9_]*|[-+*/^(),]")


class ExpressionError(QDeformError):
    """Parse or evaluation error with a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def tokenize(text: str, line: int = 1, column: int = 1) -> List[Tuple[str, int]]:
    """(token, column) pairs; column is 1-based and shifted by the given start column."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ExpressionError(f"unexpected character {text[pos]!r}", line, column + pos)
        tokens.append((match.group(), column + pos))
        pos = match.end()
    return tokens


class ExpressionParser:
    """Parses one expression; with a datum the result is an NcPoly, else a Scalar."""

    def __init__(self, text: str, scalars: ScalarField, datum: Optional[YDDatum] = None,
                 line: int = 1, column: int = 1):
        self.text = text
        self.field = scalars
        self.datum = datum
        self.line = line
        self.end_column = column + len(text)
        self.tokens = tokenize(text, line, column)
        self.pos = 0

    # token helpers
    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _column(self) -> int:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else self.end_column

    def _error(self, message: str, column: Optional[int] = None) -> ExpressionError:
        return ExpressionError(message, self.line, self._column() if column is None else column)

    def _take(self, expected: Optional[str] = None) -> str:
        token = self._peek()
        if token is None:
            raise self._error(f"expected {expected!r}" if expected else "unexpected end of expression")
        if expected is not None and token != expected:
            raise self._error(f"expected {expected!r}, found {token!r}")
        self.pos += 1
        return token

    def _signed_int(self) -> int:
        negative = False
        if self._peek() == "-":
            self._take()
            negative = True
        column = self._column()
        token = self._take()
        if not token.isdigit():
            raise self._error(f"expected an integer, found {token!r}", column)
        return -int(token) if negative else int(token)

    # value helpers
    def _lift(self, value: Value) -> Value:
        if self.datum is not None and isinstance(value, Scalar):
            return NcPoly.constant(self.datum, value)
        return value

    def _scalar_of(self, value: Value) -> Optional[Scalar]:
        if isinstance(value, Scalar):
            return value
        return value.scalar_value()

    def parse(self) -> Value:
        if not self.tokens:
            raise self._error("empty expression")
        value = self._expr()
        if self._peek() is not None:
            raise self._error(f"unexpected {self._peek()!r}")
        return self._lift(value)

    def _expr(self) -> Value:
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._take()
            rhs = self._term()
            left, right = self._lift(value), self._lift(rhs)
            value = left + right if op == "+" else left - right
        return value

    def _term(self) -> Value:
        value = self._unary()
        while self._peek() in ("*", "/"):
            op = self._take()
            column = self._column()
            rhs = self._unary()
            if op == "*":
                value = self._multiply(value, rhs)
                continue
            divisor = self._scalar_of(rhs)
            if divisor is None:
                raise self._error("division is only defined by scalars", column)
            if divisor.is_zero:
                raise self._error("division by zero", column)
            value = value * divisor.inverse() if isinstance(value, Scalar) else value.scale(divisor.inverse())
        return value

    def _multiply(self, a: Value, b: Value) -> Value:
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a * b
        if isinstance(a, Scalar):
            return b.scale(a)
        if isinstance(b, Scalar):
            return a.scale(b)
        return a * b

    def _unary(self) -> Value:
        if self._peek() == "-":
            self._take()
            return -self._unary()
        return self._power()

    def _power(self) -> Value:
        column = self._column()
        base = self._atom()
        if self._peek() != "^":
            return base
        self._take()
        exponent = self._signed_int()
        if isinstance(base, Scalar):
            if base.is_zero and exponent < 0:
                raise self._error("zero has no inverse", column)
            return base ** exponent
        if exponent >= 0:
            return base ** exponent
        scalar = base.scalar_value()
        if scalar is not None:
            if scalar.is_zero:
                raise self._error("zero has no inverse", column)
            return scalar ** exponent
        if len(base.terms) == 1:
            ((word, g), c), = base.terms.items()
            if not word:
                return NcPoly.group_element(self.datum, self.datum.group.power(g, exponent)).scale(c ** exponent)
        raise self._error("negative powers are only defined for scalars and group elements", column)

    def _atom(self) -> Value:
        column = self._column()
        token = self._take()
        if token == "(":
            value = self._expr()
            self._take(")")
            return value
        if token.isdigit():
            return self.field(int(token))
        if token[0].isalpha() or token[0] == "_":
            if token == "serre" and self._peek() == "(":
                return self._serre(column)
            return self._name(token, column)
        raise self._error(f"unexpected {token!r}", column)

    def _serre(self, column: int) -> Value:
        if self.datum is None:
            raise self._error("serre(...) needs letters", column)
        self._take("(")
        first = self._take()
        self._take(",")
        second = self._take()
        self._take(",")
        a_ij = self._signed_int()
        self._take(")")
        try:
            return serre_element(self.datum, self.datum.index(first), self.datum.index(second), a_ij)
        except QDeformError as exc:
            raise ExpressionError(str(exc), self.line, column) from exc

    def _name(self, token: str, column: int) -> Value:
        datum = self.datum
        if datum is not None:
            if token in (x.name for x in datum.letters):
                return NcPoly.letter(datum, token)
            if token in datum.group.names:
                return NcPoly.group_element(datum, datum.group.generator(token))
        if token in self.field.symbols:
            return self.field.gen()
        raise self._error(f"unknown name {token!r}", column)


def parse_scalar(text: str, scalars: ScalarField, line: int = 1, column: int = 1) -> Scalar:
    try:
        return ExpressionParser(text, scalars, None, line, column).parse()
    except (ScalarError, AlgebraError) as exc:
        raise ExpressionError(str(exc), line, column) from exc


def parse_poly(text: str, datum: YDDatum, line: int = 1, column: int = 1) -> NcPoly:
    try:
        return ExpressionParser(text, datum.field, datum, line, column).parse()
    except (ScalarError, AlgebraError) as exc:
        raise ExpressionError(str(exc), line, column) from exc


def parse_group_element(text: str, group: GroupSpec, line: int = 1, column: int = 1) -> GroupElement:
    """A product of generator powers such as K1^2*K2^-1, or 1."""
    tokens = tokenize(text, line, column)
    if [t for t, _ in tokens] == ["1"]:
        return group.identity
    if not tokens:
        raise ExpressionError("empty group element", line, column)
    powers = {}
    pos = 0
    while True:
        token, col = tokens[pos]
        if token not in group.names:
            raise ExpressionError(f"unknown group generator {token!r}", line, col)
        pos += 1
        exponent = 1
        if pos < len(tokens) and tokens[pos][0] == "^":
            pos += 1
            sign = 1
            if pos < len(tokens) and tokens[pos][0] == "-":
                sign, pos = -1, pos + 1
            if pos >= len(tokens) or not tokens[pos][0].isdigit():
                col = tokens[pos][1] if pos < len(tokens) else column + len(text)
                raise ExpressionError("expected an integer exponent", line, col)
            exponent = sign * int(tokens[pos][0])
            pos += 1
        powers[token] = powers.get(token, 0) + exponent
        if pos == len(tokens):
            break
        if tokens[pos][0] != "*":
            raise ExpressionError(f"expected '*', found {tokens[pos][0]!r}", line, tokens[pos][1])
        pos += 1
        if pos == len(tokens):
            raise ExpressionError("expression ends after '*'", line, column + len(text))
    return group.from_powers(powers)
