"""
Noncommutative polynomials over a diagonal Yetter-Drinfeld datum.

An element of T(V) # k[Gamma] is a finite sum of monomials (word, g) with the
group element kept to the right of the word. Multiplication straightens a
group element past a word with the characters of its letters:

    (w, g) * (w', g') = prod_{y in w'} chi_y(g) * (w w', g g')
"""

from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Tuple

from .abgroup import GroupElement
from .report import QDeformError
from .scalars import Scalar, ScalarField
from .yd import YDDatum

Word = Tuple[int, ...]
Monomial = Tuple[Word, GroupElement]


class AlgebraError(QDeformError):
    """Base class for free algebra errors."""
    pass


class DatumMismatchError(AlgebraError):
    """Raised when elements over different data are combined."""
    pass


class Linear:
    """A finite linear combination of hashable basis keys with Scalar coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, scalars: ScalarField, terms: Optional[Dict[Hashable, Scalar]] = None):
        self.field = scalars
        self.terms: Dict[Hashable, Scalar] = {}
        if terms:
            for key, coeff in terms.items():
                if not coeff.is_zero:
                    self.terms[key] = coeff

    def _new(self, terms: Dict[Hashable, Scalar]):
        out = object.__new__(type(self))
        self._copy_context(out)
        out.terms = terms
        return out

    def _copy_context(self, out) -> None:
        out.field = self.field

    def _compatible(self, other) -> None:
        if type(other) is not type(self) or other.field is not self.field:
            raise DatumMismatchError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def add_term(self, key: Hashable, coeff: Scalar) -> None:
        """In-place accumulation; use only on freshly built values."""
        if coeff.is_zero:
            return
        current = self.terms.get(key)
        if current is None:
            self.terms[key] = coeff
        else:
            total = current + coeff
            if total.is_zero:
                del self.terms[key]
            else:
                self.terms[key] = total

    def __add__(self, other):
        self._compatible(other)
        out = self._new(dict(self.terms))
        for key, coeff in other.terms.items():
            out.add_term(key, coeff)
        return out

    def __sub__(self, other):
        self._compatible(other)
        out = self._new(dict(self.terms))
        for key, coeff in other.terms.items():
            out.add_term(key, -coeff)
        return out

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def scale(self, factor) -> "Linear":
        factor = self.field(factor)
        if factor.is_zero:
            return self._new({})
        return self._new({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.field is other.field and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self) -> Iterator[Tuple[Hashable, Scalar]]:
        return iter(self.terms.items())

    def coefficient(self, key: Hashable) -> Scalar:
        return self.terms.get(key, self.field.zero)


def deglex_key(datum: YDDatum, m: Monomial) -> Tuple:
    word, g = m
    return (len(word), tuple(datum.rank(x) for x in word), g)


def deglex_cmp(datum: YDDatum, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as a is deglex-smaller, equal or greater than b."""
    ka, kb = deglex_key(datum, a), deglex_key(datum, b)
    return (ka > kb) - (ka < kb)


def render_word(datum: YDDatum, word: Word) -> str:
    return "*".join(datum.name(x) for x in word)


def render_monomial(datum: YDDatum, m: Monomial) -> str:
    word, g = m
    parts = []
    if word:
        parts.append(render_word(datum, word))
    if not datum.group.is_identity(g):
        parts.append(datum.group.render(g))
    return "*".join(parts) if parts else "1"


def render_combination(pairs: Iterable[Tuple[str, Scalar]]) -> str:
    """Render (basis text, coefficient) pairs as a signed sum."""
    out: List[str] = []
    for basis, coeff in pairs:
        negative = False
        if coeff.is_compound():
            ctext = f"({coeff.render()})"
        else:
            ctext = coeff.render()
            if ctext.startswith("-"):
                negative, ctext = True, ctext[1:]
        if basis == "1":
            body = ctext
        elif ctext == "1":
            body = basis
        else:
            body = f"{ctext}*{basis}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out) if out else "0"


class NcPoly(Linear):
    """Element of T(V) # k[Gamma] or of a quotient, over a fixed datum."""

    __slots__ = ("datum",)

    def __init__(self, datum: YDDatum, terms: Optional[Dict[Monomial, Scalar]] = None):
        super().__init__(datum.field, terms)
        self.datum = datum

    def _copy_context(self, out) -> None:
        out.field = self.field
        out.datum = self.datum

    def _compatible(self, other) -> None:
        if not isinstance(other, NcPoly) or other.datum is not self.datum:
            raise DatumMismatchError("polynomials over different data")

    @classmethod
    def zero(cls, datum: YDDatum) -> "NcPoly":
        return cls(datum)

    @classmethod
    def constant(cls, datum: YDDatum, c=1) -> "NcPoly":
        return cls(datum, {((), datum.group.identity): datum.field(c)})

    @classmethod
    def monomial(cls, datum: YDDatum, word: Word = (), g: Optional[GroupElement] = None, c=1) -> "NcPoly":
        g = datum.group.identity if g is None else g
        return cls(datum, {(tuple(word), g): datum.field(c)})

    @classmethod
    def letter(cls, datum: YDDatum, name_or_index) -> "NcPoly":
        i = datum.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return cls.monomial(datum, (i,))

    @classmethod
    def group_element(cls, datum: YDDatum, g: GroupElement) -> "NcPoly":
        return cls.monomial(datum, (), g)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative powers of polynomials are not defined")
        result = NcPoly.constant(self.datum)
        for _ in range(n):
            result = result * self
        return result

    def monomials(self) -> List[Monomial]:
        """Monomials in deglex-descending order."""
        return sorted(self.terms, key=lambda m: deglex_key(self.datum, m), reverse=True)

    def leading(self) -> Tuple[Monomial, Scalar]:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        m = max(self.terms, key=lambda m: deglex_key(self.datum, m))
        return m, self.terms[m]

    @property
    def degree(self) -> int:
        return max((len(w) for w, _ in self.terms), default=-1)

    def homogeneous_part(self, n: int) -> "NcPoly":
        return self._new({m: c for m, c in self.terms.items() if len(m[0]) == n})

    def is_group_free(self) -> bool:
        return all(self.datum.group.is_identity(g) for _, g in self.terms)

    def scalar_value(self) -> Optional[Scalar]:
        """The coefficient if this is a multiple of 1, else None."""
        if not self.terms:
            return self.field.zero
        if len(self.terms) == 1:
            ((word, g), c), = self.terms.items()
            if not word and self.datum.group.is_identity(g):
                return c
        return None

    def map_terms(self, fn: Callable[[Monomial, Scalar], "NcPoly"]) -> "NcPoly":
        """Linear extension of fn over the terms (fn returns polynomials over any datum)."""
        out = None
        for m, c in self.terms.items():
            image = fn(m, c)
            out = image if out is None else out + image
        return out if out is not None else NcPoly(self.datum)

    def render(self) -> str:
        return render_combination((render_monomial(self.datum, m), self.terms[m]) for m in self.monomials())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"NcPoly({self.render()!r})"


def straighten_factor(datum: YDDatum, g: GroupElement, word: Word) -> Scalar:
    """prod_{y in word} chi_y(g): the scalar from moving g right past word."""
    factor = datum.field.one
    if datum.group.is_identity(g):
        return factor
    for y in word:
        factor = factor * datum.chi(y, g)
    return factor


def monomial_mul(datum: YDDatum, a: Monomial, b: Monomial) -> Tuple[Monomial, Scalar]:
    (w, g), (w2, g2) = a, b
    return (w + w2, datum.group.mul(g, g2)), straighten_factor(datum, g, w2)


def nc_mul(p: NcPoly, r: NcPoly) -> NcPoly:
    if p.datum is not r.datum:
        raise DatumMismatchError("cannot multiply polynomials over different data")
    datum = p.datum
    out = NcPoly(datum)
    for a, ca in p.terms.items():
        for b, cb in r.terms.items():
            m, factor = monomial_mul(datum, a, b)
            out.add_term(m, ca * cb * factor)
    return out


def words_of_length(datum: YDDatum, n: int, alphabet: Optional[List[int]] = None) -> List[Word]:
    letters = list(range(datum.size)) if alphabet is None else alphabet
    out: List[Word] = [()]
    for _ in range(n):
        out = [w + (x,) for w in out for x in letters]
    return out


def group_weight(datum: YDDatum, word: Word) -> GroupElement:
    """Coweight g_w = product of the g_i of the letters."""
    g = datum.group.identity
    for x in word:
        g = datum.group.mul(g, datum.g(x))
    return g


def multidegree(datum: YDDatum, word: Word) -> Tuple[int, ...]:
    counts = [0] * datum.size
    for x in word:
        counts[x] += 1
    return tuple(counts)


def transfer_poly(p: NcPoly, target: YDDatum,
                  group_map: Optional[Callable[[GroupElement], GroupElement]] = None) -> NcPoly:
    """
    Rewrite p over another datum, matching letters by name and group elements by group_map.

    Only letters occurring in p need a counterpart in the target.
    """
    source = p.datum
    letters = {x: target.index(source.name(x)) for word, _ in p.terms for x in word}
    if group_map is None:
        def group_map(g: GroupElement) -> GroupElement:
            return target.group.from_powers({name: e for name, e in zip(source.group.names, g) if e})
    out = NcPoly(target)
    for (word, g), c in p.terms.items():
        out.add_term((tuple(letters[x] for x in word), group_map(g)), target.field(c))
    return out
