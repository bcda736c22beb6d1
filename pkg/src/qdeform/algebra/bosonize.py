"""
Hopf structure of a bosonization R # k[Gamma] given by a presentation.

Coproducts are the multiplicative extension of

    Delta(x_i) = x_i (x) 1 + g_i (x) x_i,    Delta(g) = g (x) g,

with both legs reduced to normal form. The same splitting, with legs
reduced in two different presentations, gives the coactions of a comodule
algebra.
"""

from itertools import product as cartesian
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .abgroup import GroupElement
from .freealg import (Linear, Monomial, NcPoly, Word, deglex_key, monomial_mul, nc_mul, render_combination,
                      render_monomial)
from .groebner import Presentation, weight_defects, normal_words
from .report import CheckReport, QDeformError
from .scalars import Scalar
from .yd import YDDatum


class CoproductError(QDeformError):
    """Raised when the coproduct is not well defined on a presentation."""
    pass


class TensorElement(Linear):
    """Element of P_1 (x) ... (x) P_k, keys are tuples of monomials."""

    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[Presentation], terms: Optional[Dict[Tuple[Monomial, ...], Scalar]] = None):
        super().__init__(factors[0].datum.field, terms)
        self.factors = tuple(factors)

    def _copy_context(self, out) -> None:
        out.field = self.field
        out.factors = self.factors

    def _compatible(self, other) -> None:
        if not isinstance(other, TensorElement) or len(other.factors) != len(self.factors) or any(
                a is not b for a, b in zip(self.factors, other.factors)):
            raise CoproductError("tensor elements over different factors")

    @property
    def arity(self) -> int:
        return len(self.factors)

    @classmethod
    def from_polys(cls, factors: Sequence[Presentation], polys: Sequence[NcPoly], coeff=1) -> "TensorElement":
        out = cls(factors)
        coeff = factors[0].datum.field(coeff)
        for combo in cartesian(*(p.terms.items() for p in polys)):
            c = coeff
            for _, ci in combo:
                c = c * ci
            out.add_term(tuple(m for m, _ in combo), c)
        return out

    @classmethod
    def from_poly(cls, pres: Presentation, p: NcPoly) -> "TensorElement":
        return cls((pres,), {(m,): c for m, c in p.terms.items()})

    def replace_leg(self, k: int, fn: Callable[[Monomial], Iterable[Tuple[Tuple[Monomial, ...], Scalar]]],
                    factors: Sequence[Presentation]) -> "TensorElement":
        """Linear map applied to leg k; fn returns (sub-key, coefficient) pairs."""
        out = TensorElement(factors) if factors else None
        scalar = self.field.zero
        for key, c in self.terms.items():
            for sub, c2 in fn(key[k]):
                new_key = key[:k] + tuple(sub) + key[k + 1:]
                if out is None:
                    scalar = scalar + c * c2
                else:
                    out.add_term(new_key, c * c2)
        return out if out is not None else scalar

    def multiply(self, other: "TensorElement") -> "TensorElement":
        """Componentwise product, each leg reduced in its presentation."""
        self._compatible(other)
        out = TensorElement(self.factors)
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                legs = []
                for pres, a, b in zip(self.factors, ka, kb):
                    legs.append(pres.reduce(nc_mul(NcPoly(pres.datum, {a: pres.datum.field.one}),
                                                   NcPoly(pres.datum, {b: pres.datum.field.one}))))
                for combo in cartesian(*(leg.terms.items() for leg in legs)):
                    c = ca * cb
                    for _, ci in combo:
                        c = c * ci
                    out.add_term(tuple(m for m, _ in combo), c)
        return out

    def sorted_keys(self) -> List[Tuple[Monomial, ...]]:
        return sorted(self.terms, key=lambda key: tuple(
            deglex_key(pres.datum, m) for pres, m in zip(self.factors, key)), reverse=True)

    def render(self) -> str:
        pairs = []
        for key in self.sorted_keys():
            text = " (x) ".join(render_monomial(pres.datum, m) for pres, m in zip(self.factors, key))
            pairs.append((f"[{text}]" if len(key) > 1 else text, self.terms[key]))
        return render_combination(pairs)

    def __str__(self):
        return self.render()


def split_word(datum: YDDatum, word: Word) -> List[Tuple[Monomial, Word, Scalar]]:
    """
    Unreduced terms of Delta(word): ((w_S, prod_{j not in S} g_j), w_{S^c}, coeff).

    The coefficient collects chi_{w_i}(g_{w_j}) for j not in S, i in S, j < i.
    """
    n = len(word)
    group = datum.group
    out = []
    for mask in range(1 << n):
        left: List[int] = []
        right: List[int] = []
        g = group.identity
        coeff = datum.field.one
        pending: List[GroupElement] = []
        for pos, x in enumerate(word):
            if mask >> pos & 1:
                left.append(x)
                for h in pending:
                    coeff = coeff * datum.chi(x, h)
            else:
                right.append(x)
                pending.append(datum.g(x))
                g = group.mul(g, datum.g(x))
        out.append(((tuple(left), g), tuple(right), coeff))
    return out


class Coaction:
    """The splitting map p -> p_(1) (x) p_(2) with legs reduced in two presentations."""

    def __init__(self, source: Presentation, left: Presentation, right: Presentation):
        if not (source.datum is left.datum is right.datum):
            raise CoproductError("coaction legs must share the source datum")
        self.source = source
        self.left = left
        self.right = right
        self._memo: Dict[Word, List[Tuple[Tuple[Monomial, Monomial], Scalar]]] = {}

    def _word_terms(self, word: Word) -> List[Tuple[Tuple[Monomial, Monomial], Scalar]]:
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        acc = TensorElement((self.left, self.right))
        for left_m, right_w, coeff in split_word(self.source.datum, word):
            lpoly = self.left.reduce_monomial(left_m)
            rpoly = self.right.reduce_monomial((right_w, self.right.datum.group.identity))
            for lm, lc in lpoly.terms.items():
                for rm, rc in rpoly.terms.items():
                    acc.add_term((lm, rm), coeff * lc * rc)
        result = list(acc.terms.items())
        self._memo[word] = result
        return result

    def monomial_terms(self, m: Monomial) -> List[Tuple[Tuple[Monomial, Monomial], Scalar]]:
        word, g = m
        terms = self._word_terms(word)
        group = self.source.datum.group
        if group.is_identity(g):
            return terms
        return [(((lw, group.mul(lg, g)), (rw, group.mul(rg, g))), c) for ((lw, lg), (rw, rg)), c in terms]

    def __call__(self, p: NcPoly) -> TensorElement:
        out = TensorElement((self.left, self.right))
        for m, c in p.terms.items():
            for key, c2 in self.monomial_terms(m):
                out.add_term(key, c * c2)
        return out


class HopfPresentation:
    """A presentation together with its bosonization Hopf structure."""

    def __init__(self, pres: Presentation, strict: bool = True):
        self.pres = pres
        self.datum = pres.datum
        self.delta = Coaction(pres, pres, pres)
        self._antipode_memo: Dict[Word, NcPoly] = {}
        self._antipode_inv_memo: Dict[Word, NcPoly] = {}
        self.defects = self.well_definedness_defects()
        if strict and self.defects:
            raise CoproductError(
                f"coproduct is not well defined on {pres.name or 'presentation'}: " + "; ".join(self.defects))

    @property
    def name(self) -> str:
        return self.pres.name

    def well_definedness_defects(self) -> List[str]:
        defects = []
        for rule in self.pres.rules:
            residue = self.delta(rule.relation())
            if not residue.is_zero:
                defects.append(f"Delta({rule.render()}) leaves {residue.render()}")
        for rule, m in weight_defects(self.pres):
            defects.append(f"rule {rule.render()} has term {render_monomial(self.datum, m)} of a different weight")
        return defects

    # basis Hopf interface: used by the deformation and pairing code
    def coproduct_terms(self, m: Monomial) -> List[Tuple[Tuple[Monomial, Monomial], Scalar]]:
        return self.delta.monomial_terms(m)

    def counit_monomial(self, m: Monomial) -> Scalar:
        return self.datum.field.one if not m[0] else self.datum.field.zero

    def multiply(self, p: NcPoly, r: NcPoly) -> NcPoly:
        return self.pres.multiply(p, r)

    def multiply_terms(self, a: Monomial, b: Monomial) -> List[Tuple[Monomial, Scalar]]:
        m, factor = monomial_mul(self.datum, a, b)
        return [(m2, factor * c) for m2, c in self.pres.reduce_monomial(m).terms.items()]

    def unit(self) -> NcPoly:
        return NcPoly.constant(self.datum)

    @property
    def unit_key(self) -> Monomial:
        return ((), self.datum.group.identity)

    @property
    def field(self):
        return self.datum.field

    def degree(self, m: Monomial) -> int:
        return len(m[0])

    def render_key(self, m: Monomial) -> str:
        return render_monomial(self.datum, m)

    def basis(self, n_max: int, group_elements: Sequence[GroupElement] = ()) -> List[Monomial]:
        """Normal monomials of letter-degree <= n_max with the given group parts."""
        parts = list(group_elements) or [self.datum.group.identity]
        out = []
        for n in range(n_max + 1):
            for word in normal_words(self.pres, n):
                out.extend((word, g) for g in parts)
        return out

    def antipode_monomial(self, m: Monomial) -> NcPoly:
        return _anti_extend(self, m, self._antipode_memo, self._letter_antipode)

    def antipode_inverse_monomial(self, m: Monomial) -> NcPoly:
        return _anti_extend(self, m, self._antipode_inv_memo, self._letter_antipode_inverse)

    def _letter_antipode(self, x: int) -> NcPoly:
        g_inv = self.datum.group.inverse(self.datum.g(x))
        return nc_mul(NcPoly.group_element(self.datum, g_inv), NcPoly.letter(self.datum, x)).scale(-1)

    def _letter_antipode_inverse(self, x: int) -> NcPoly:
        g_inv = self.datum.group.inverse(self.datum.g(x))
        return NcPoly.monomial(self.datum, (x,), g_inv, -1)

    def __repr__(self):
        return f"HopfPresentation({self.pres!r})"


def _anti_extend(hp: HopfPresentation, m: Monomial, memo: Dict[Word, NcPoly],
                 letter_image: Callable[[int], NcPoly]) -> NcPoly:
    """Anti-multiplicative extension with g -> g^-1 on group parts."""
    word, g = m
    datum = hp.datum
    image = memo.get(word)
    if image is None:
        image = NcPoly.constant(datum)
        for x in reversed(word):
            image = hp.pres.reduce(nc_mul(image, letter_image(x)))
        memo[word] = image
    if datum.group.is_identity(g):
        return image
    return hp.pres.reduce(nc_mul(NcPoly.group_element(datum, datum.group.inverse(g)), image))


def coproduct(p: NcPoly, hp: HopfPresentation) -> TensorElement:
    return hp.delta(p)


def counit(p: NcPoly) -> Scalar:
    """Sum of the coefficients of group-only monomials."""
    total = p.field.zero
    for (word, _), c in p.terms.items():
        if not word:
            total = total + c
    return total


def _linear(p: NcPoly, fn: Callable[[Monomial], NcPoly]) -> NcPoly:
    out = NcPoly(p.datum)
    for m, c in p.terms.items():
        for m2, c2 in fn(m).terms.items():
            out.add_term(m2, c * c2)
    return out


def antipode(p: NcPoly, hp: HopfPresentation) -> NcPoly:
    return _linear(p, hp.antipode_monomial)


def antipode_inverse(p: NcPoly, hp: HopfPresentation) -> NcPoly:
    return _linear(p, hp.antipode_inverse_monomial)


def antipode_square(p: NcPoly, hp: HopfPresentation) -> NcPoly:
    return antipode(antipode(p, hp), hp)


def _delta_leg(hp: HopfPresentation):
    return lambda m: hp.coproduct_terms(m)


def _counit_leg(hp: HopfPresentation):
    return lambda m: [((), hp.counit_monomial(m))]


def _convolve_antipode(hp: HopfPresentation, t: TensorElement, side: str) -> NcPoly:
    out = NcPoly(hp.datum)
    one = hp.datum.field.one
    for (a, b), c in t.terms.items():
        if side == "left":
            left, right = hp.antipode_monomial(a), NcPoly(hp.datum, {b: one})
        else:
            left, right = NcPoly(hp.datum, {a: one}), hp.antipode_monomial(b)
        product = hp.multiply(left, right)
        for m, c2 in product.terms.items():
            out.add_term(m, c * c2)
    return out


def check_hopf_axioms(hp: HopfPresentation, D: int) -> CheckReport:
    """Hopf axioms on normal words of degree <= D and on the group generators."""
    datum = hp.datum
    pres = hp.pres
    report = CheckReport(f"hopf {hp.name or 'presentation'} up to degree {D}")
    group = datum.group
    subjects: List[Monomial] = []
    for g in group.generators():
        subjects.append(((), g))
    for n in range(D + 1):
        subjects.extend((w, group.identity) for w in normal_words(pres, n))
    pair2 = (pres, pres)
    pair3 = (pres, pres, pres)
    one = datum.field.one

    for m in subjects:
        label = render_monomial(datum, m)
        p = NcPoly(datum, {m: one})
        delta = TensorElement(pair2, dict(hp.coproduct_terms(m)))
        left = delta.replace_leg(0, _delta_leg(hp), pair3)
        right = delta.replace_leg(1, _delta_leg(hp), pair3)
        report.add("COASSOC", label, left == right, (left - right).render())

        expected = TensorElement.from_poly(pres, p)
        eps_left = delta.replace_leg(0, _counit_leg(hp), (pres,))
        eps_right = delta.replace_leg(1, _counit_leg(hp), (pres,))
        ok = eps_left == expected and eps_right == expected
        report.add("COUNIT", label, ok, f"{(eps_left - expected).render()} ; {(eps_right - expected).render()}")

        unit = NcPoly.constant(datum, hp.counit_monomial(m))
        s_left = _convolve_antipode(hp, delta, "left")
        report.add("ANTIPODE-L", label, s_left == unit, (s_left - unit).render())
        s_right = _convolve_antipode(hp, delta, "right")
        report.add("ANTIPODE-R", label, s_right == unit, (s_right - unit).render())

        round_trip = antipode(antipode_inverse(p, hp), hp)
        report.add("SINV", label, round_trip == p, (round_trip - p).render())

    for rule in pres.rules:
        residue = hp.delta(rule.relation())
        report.add("DELTA-MULT", f"rule {rule.render()}", residue.is_zero, residue.render())
    generators = [NcPoly.letter(datum, i) for i in range(datum.size)]
    generators += [NcPoly.group_element(datum, g) for g in group.generators()]
    for a in generators:
        for b in generators:
            lhs = hp.delta(hp.multiply(a, b))
            rhs = hp.delta(a).multiply(hp.delta(b))
            report.add("DELTA-MULT", f"{a.render()}*{b.render()}", lhs == rhs, (lhs - rhs).render())

    defects = weight_defects(pres)
    for rule, m in defects:
        report.add("WEIGHT", f"rule {rule.render()}", False,
                   f"term {render_monomial(datum, m)} changes the conjugation weight")
    if not defects:
        report.add("WEIGHT", "rules", True)

    for i in range(datum.size):
        x = NcPoly.letter(datum, i)
        s2 = antipode_square(x, hp)
        report.note("S2", datum.name(i), f"S^2({datum.name(i)}) = {s2.render()}")
        expected = x.scale(datum.q(i, i).inverse())
        report.add("S2", datum.name(i), s2 == expected, (s2 - expected).render())
    return report


class TensorProductHopf:
    """
    The tensor product Hopf algebra of two basis Hopf algebras.

    Basis keys are pairs (a, b) of basis keys of the factors; product and
    coproduct are componentwise.
    """

    def __init__(self, left, right):
        if left.field is not right.field:
            raise CoproductError("tensor factors over different fields")
        self.left = left
        self.right = right
        self.field = left.field

    @property
    def name(self) -> str:
        return f"{self.left.name} (x) {self.right.name}"

    @property
    def unit_key(self):
        return (self.left.unit_key, self.right.unit_key)

    def coproduct_terms(self, key):
        a, b = key
        out = []
        for (a1, a2), ca in self.left.coproduct_terms(a):
            for (b1, b2), cb in self.right.coproduct_terms(b):
                out.append((((a1, b1), (a2, b2)), ca * cb))
        return out

    def counit_monomial(self, key) -> Scalar:
        a, b = key
        return self.left.counit_monomial(a) * self.right.counit_monomial(b)

    def multiply_terms(self, k1, k2):
        out = []
        for a, ca in self.left.multiply_terms(k1[0], k2[0]):
            for b, cb in self.right.multiply_terms(k1[1], k2[1]):
                out.append(((a, b), ca * cb))
        return out

    def degree(self, key) -> int:
        return self.left.degree(key[0]) + self.right.degree(key[1])

    def render_key(self, key) -> str:
        return f"{self.left.render_key(key[0])} (x) {self.right.render_key(key[1])}"
