"""
Exact coefficient fields for qdeform.

Three kinds of field are supported, each backed by a sympy domain so that the
same values can be handed to sympy's sparse linear algebra:

- ``rational``: the rationals, sympy ``QQ``.
- ``rational-function``: Q(q), sympy's fraction field over ZZ[q]. Values are
  kept as coprime integer polynomials with a positive leading coefficient in
  the denominator.
- ``cyclotomic``: Q(zeta_N), polynomials in ``z`` reduced modulo the N-th
  cyclotomic polynomial (sympy ``FiniteExtension``).
"""

from functools import lru_cache
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Poly, Symbol, cyclotomic_poly, integer_nthroot
from sympy.polys.agca.extensions import FiniteExtension
from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import field as rational_function_field_of
from sympy.polys.matrices import DomainMatrix

from .report import QDeformError


class ScalarError(QDeformError):
    """Base class for coefficient arithmetic errors."""
    pass


class FieldMismatchError(ScalarError):
    """Raised when two scalars from different fields are combined."""
    pass


class ScalarZeroDivisionError(ScalarError, ZeroDivisionError):
    """Raised on inversion of zero or a vanishing q-integer denominator."""
    pass


class PoleError(ScalarError):
    """Raised when a specialization hits a pole of the rational function."""
    pass


class SquareRootError(ScalarError):
    """Raised when a square root is not available in the field."""
    pass


RATIONAL = "rational"
RATIONAL_FUNCTION = "rational-function"
CYCLOTOMIC = "cyclotomic"


def _render_rational(value) -> str:
    num, den = int(QQ.numer(value)), int(QQ.denom(value))
    return str(num) if den == 1 else f"{num}/{den}"


def _render_terms(terms: Sequence[Tuple[int, Any]], symbol: str) -> str:
    """Render (exponent, rational coefficient) pairs, exponents descending."""
    if not terms:
        return "0"
    pieces: List[str] = []
    for exponent, coeff in sorted(terms, key=lambda t: -t[0]):
        sign = "-" if coeff < 0 else "+"
        magnitude = -coeff if coeff < 0 else coeff
        mag_text = _render_rational(magnitude)
        if exponent == 0:
            body = mag_text
        else:
            power = symbol if exponent == 1 else f"{symbol}^{exponent}"
            body = power if mag_text == "1" else f"{mag_text}*{power}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


class ScalarField:
    """A coefficient field. Instances are cached per parameter set."""

    kind: str = ""
    symbols: Tuple[str, ...] = ()

    def __init__(self):
        self.domain = None

    # raw-value hooks, overridden per kind
    def convert(self, value) -> Any:
        raise NotImplementedError

    def normalize(self, raw) -> Any:
        return raw

    def invert(self, raw) -> Any:
        if not raw:
            raise ScalarZeroDivisionError(f"cannot invert zero in {self}")
        return self.normalize(self.domain.one / raw)

    def render_raw(self, raw) -> str:
        raise NotImplementedError

    def generator_raw(self) -> Any:
        raise ScalarError(f"{self} has no generator")

    def sqrt_raw(self, raw) -> Any:
        raise SquareRootError(f"no square root of {self.render_raw(raw)} in {self}")

    # public helpers
    def __call__(self, value: Union["Scalar", int, Any]) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatchError(f"scalar from {value.field} used in {self}")
            return value
        return Scalar(self, self.convert(value))

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, self.domain.zero)

    @property
    def one(self) -> "Scalar":
        return Scalar(self, self.domain.one)

    def gen(self) -> "Scalar":
        """The distinguished generator (q, or zeta in the cyclotomic case)."""
        return Scalar(self, self.generator_raw())

    def fraction(self, numerator: int, denominator: int = 1) -> "Scalar":
        if denominator == 0:
            raise ScalarZeroDivisionError("zero denominator")
        return self(numerator) / self(denominator)

    def nullspace(self, rows: Sequence[Sequence["Scalar"]], ncols: int) -> List[List["Scalar"]]:
        """Basis of the right kernel of the matrix with the given rows."""
        entries = {}
        for i, row in enumerate(rows):
            nonzero = {j: s.raw for j, s in enumerate(row) if s.raw}
            if nonzero:
                entries[len(entries)] = nonzero
        if not entries:
            basis = []
            for j in range(ncols):
                vector = [self.zero] * ncols
                vector[j] = self.one
                basis.append(vector)
            return basis
        matrix = DomainMatrix(entries, (len(entries), ncols), self.domain)
        reduced, pivots = matrix.rref(method="GJ")
        kernel = reduced.nullspace_from_rref(pivots)
        return [[Scalar(self, self.normalize(v)) for v in row] for row in kernel.to_list()]

    def __repr__(self):
        return f"ScalarField({self})"


class RationalField(ScalarField):
    kind = RATIONAL

    def __init__(self):
        super().__init__()
        self.domain = QQ

    def convert(self, value):
        return QQ.convert(value)

    def render_raw(self, raw) -> str:
        return _render_rational(raw)

    def sqrt_raw(self, raw):
        if raw < 0:
            raise SquareRootError(f"{_render_rational(raw)} has no rational square root")
        num, num_exact = integer_nthroot(int(QQ.numer(raw)), 2)
        den, den_exact = integer_nthroot(int(QQ.denom(raw)), 2)
        if not (num_exact and den_exact):
            raise SquareRootError(f"{_render_rational(raw)} is not a rational square")
        return QQ(num, den)

    def __str__(self):
        return "QQ"


class RationalFunctionField(ScalarField):
    kind = RATIONAL_FUNCTION

    def __init__(self, symbol: str = "q"):
        super().__init__()
        self.symbol = symbol
        self.symbols = (symbol,)
        self.field, self._gen = rational_function_field_of(symbol, ZZ)
        self.domain = self.field.to_domain()

    def convert(self, value):
        if isinstance(value, int):
            return self.field(value)
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return self.normalize(self.field(int(value.numerator)) / self.field(int(value.denominator)))
        return self.field(value)

    def normalize(self, raw):
        return self.field.new(raw.numer, raw.denom)

    def invert(self, raw):
        if not raw:
            raise ScalarZeroDivisionError(f"cannot invert zero in {self}")
        return self.field.new(raw.denom, raw.numer)

    def generator_raw(self):
        return self._gen

    def _monomial(self, poly) -> Optional[Tuple[int, int]]:
        terms = poly.terms()
        if len(terms) != 1:
            return None
        (exponents, coeff), = terms
        return exponents[0], int(coeff)

    def render_raw(self, raw) -> str:
        num_terms = [(e[0], QQ(int(c))) for e, c in raw.numer.terms()]
        den = self._monomial(raw.denom)
        if den is not None:
            shift, scale = den
            laurent = [(e - shift, c / QQ(scale)) for e, c in num_terms]
            return _render_terms(laurent, self.symbol)
        den_terms = [(e[0], QQ(int(c))) for e, c in raw.denom.terms()]
        return f"({_render_terms(num_terms, self.symbol)})/({_render_terms(den_terms, self.symbol)})"

    def sqrt_raw(self, raw):
        num = self._monomial(raw.numer)
        den = self._monomial(raw.denom)
        if num is None or den is None or (num[0] - den[0]) % 2:
            raise SquareRootError(f"{self.render_raw(raw)} is not a monomial square in {self}")
        root = RationalField().sqrt_raw(QQ(num[1], den[1]))
        exponent = (num[0] - den[0]) // 2
        power = self._gen ** exponent if exponent >= 0 else self.invert(self._gen ** -exponent)
        coeff = self.field(int(QQ.numer(root))) / self.field(int(QQ.denom(root)))
        return self.normalize(coeff * power)

    def __str__(self):
        return f"QQ({self.symbol})"


class CyclotomicField(ScalarField):
    """Q(zeta_N) as polynomials in z modulo the N-th cyclotomic polynomial."""

    kind = CYCLOTOMIC

    def __init__(self, order: int, symbol: str = "z"):
        super().__init__()
        if order < 1:
            raise ScalarError(f"cyclotomic order must be positive, got {order}")
        self.order = order
        self.symbol = symbol
        # q is accepted as an alias for the root of unity in expressions
        self.symbols = (symbol, "q")
        z = Symbol(symbol)
        self.modulus = Poly(cyclotomic_poly(order, z), z, domain=QQ)
        self.domain = FiniteExtension(self.modulus)

    def convert(self, value):
        if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, int):
            return self.domain.convert(QQ(int(value.numerator), int(value.denominator)))
        return self.domain.convert(value)

    def invert(self, raw):
        if not raw:
            raise ScalarZeroDivisionError(f"cannot invert zero in {self}")
        return raw.inverse()

    def generator_raw(self):
        return self.domain.generator

    def coefficients(self, raw) -> List[Any]:
        """Dense coefficient list, lowest degree first."""
        return list(reversed(raw.rep.to_list()))

    def render_raw(self, raw) -> str:
        terms = [(e, c) for e, c in enumerate(self.coefficients(raw)) if c]
        return _render_terms(terms, self.symbol)

    def sqrt_raw(self, raw):
        if not raw:
            return raw
        gen = self.domain.generator
        for m in range(self.order):
            candidate = gen ** m
            quotient = raw / (candidate * candidate)
            if quotient.is_ground:
                try:
                    root = RationalField().sqrt_raw(quotient.to_ground())
                except SquareRootError:
                    continue
                return self.domain.convert(root) * candidate
        raise SquareRootError(f"{self.render_raw(raw)} is not a square in {self}")

    def __str__(self):
        return f"QQ(zeta_{self.order})"


@lru_cache(maxsize=None)
def rational_field() -> RationalField:
    return RationalField()


@lru_cache(maxsize=None)
def rational_function_field(symbol: str = "q") -> RationalFunctionField:
    return RationalFunctionField(symbol)


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


class Scalar:
    """An exact field element. Immutable; compare and hash by canonical form."""

    __slots__ = ("field", "raw")

    def __init__(self, field: ScalarField, raw):
        self.field = field
        self.raw = raw

    def _coerce(self, other) -> Optional[Any]:
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other.raw
        if isinstance(other, int):
            return self.field.convert(other)
        return None

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.normalize(self.raw + raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.normalize(self.raw - raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.normalize(raw - self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.normalize(self.raw * raw))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, -self.raw)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.invert(self.raw))

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return self * Scalar(self.field, self.field.invert(raw))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, raw) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Scalar(self.field, self.field.domain.one)
        power = base
        n = abs(exponent)
        while n:
            if n & 1:
                result = result * power
            power = power * power
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.field.convert(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field.kind, self.raw))

    def __bool__(self):
        return bool(self.raw)

    @property
    def is_zero(self) -> bool:
        return not self.raw

    @property
    def is_one(self) -> bool:
        return self.raw == self.field.domain.one

    def normalize(self) -> "Scalar":
        return Scalar(self.field, self.field.normalize(self.raw))

    def sqrt(self) -> "Scalar":
        return Scalar(self.field, self.field.sqrt_raw(self.raw))

    def render(self) -> str:
        return self.field.render_raw(self.raw)

    def is_compound(self) -> bool:
        """True when the rendering needs parentheses inside a product."""
        text = self.render()
        return any(op in text[1:] for op in ("+", " - ", "/")) or text.startswith("(")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Scalar({self.render()!r} in {self.field})"


def field_ops(a: Scalar, b: Optional[Scalar], op: str) -> Scalar:
    """Dispatch helper over the four primitive field operations."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "invert":
        return a.inverse()
    if op == "normalize":
        return a.normalize()
    raise ScalarError(f"unknown field operation {op!r}")


def q_integer(m: int, v: Scalar) -> Scalar:
    """Balanced q-integer (v^m - v^-m)/(v - v^-1); equals m*v^(m-1) when v^2 = 1."""
    delta = v - v.inverse()
    if delta.is_zero:
        return v.field(m) * v ** (m - 1)
    return (v ** m - v ** (-m)) / delta


def gauss_binomial(n: int, k: int, v: Scalar) -> Scalar:
    """Balanced Gaussian binomial [n choose k]_v."""
    if not 0 <= k <= n:
        raise ScalarError(f"gauss_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if v.is_zero:
        raise ScalarZeroDivisionError("gauss_binomial needs an invertible parameter")
    k = min(k, n - k)
    numerator = v.field.one
    denominator = v.field.one
    for i in range(1, k + 1):
        numerator = numerator * q_integer(n - k + i, v)
        bracket = q_integer(i, v)
        if bracket.is_zero:
            raise ScalarZeroDivisionError(f"q-integer [{i}] vanishes at {v.render()}")
        denominator = denominator * bracket
    return numerator / denominator


def specialize(a: Scalar, order: int) -> Scalar:
    """Image of a rational function in q under q -> zeta_order."""
    if a.field.kind != RATIONAL_FUNCTION:
        raise FieldMismatchError(f"specialize expects a rational function, got {a.field}")
    target = cyclotomic_field(order)
    gen = target.domain.generator

    def evaluate(poly):
        acc = target.domain.zero
        for (exponent,), coeff in poly.terms():
            acc = acc + target.domain.convert(int(coeff)) * gen ** (exponent % order)
        return acc

    denominator = evaluate(a.raw.denom)
    if not denominator:
        raise PoleError(f"{a.render()} has a pole at zeta_{order}")
    return Scalar(target, evaluate(a.raw.numer) * denominator.inverse())


def product(values: Iterable[Scalar], field: ScalarField) -> Scalar:
    result = field.one
    for value in values:
        result = result * value
    return result
