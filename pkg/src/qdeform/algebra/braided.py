"""
The braided coalgebra layer on T(V).

Letters are primitive, Delta(x) = x (x) 1 + 1 (x) x, and the coproduct is
extended multiplicatively into the braided tensor square where

    (a (x) b)(a' (x) b') = q(b, a') * (a a' (x) b b'),   q(u, v) = prod q_{u_k v_l}.
"""

from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from .freealg import (Linear, NcPoly, Word, deglex_key, group_weight, multidegree, nc_mul,
                      render_combination, render_word)
from .groebner import DegreeBoundError, Presentation, complete, interreduce, normal_words
from .report import CheckReport, QDeformError
from .scalars import Scalar, SquareRootError, gauss_binomial
from .yd import YDDatum


class BraidedError(QDeformError):
    """Base class for braided-layer errors."""
    pass


class InhomogeneousError(BraidedError):
    """Raised when an argument is not homogeneous for the needed grading."""
    pass


def word_braiding(datum: YDDatum, u: Word, v: Word) -> Scalar:
    """q(u, v) = prod over letters of u and v of q_{u_k v_l}."""
    c = datum.field.one
    for a in u:
        for b in v:
            c = c * datum.q(a, b)
    return c


class BraidedTensorElement(Linear):
    """Element of T(V) (x) T(V) with the braided product; keys are word pairs."""

    __slots__ = ("datum",)

    def __init__(self, datum: YDDatum, terms: Optional[Dict[Tuple[Word, Word], Scalar]] = None):
        super().__init__(datum.field, terms)
        self.datum = datum

    def _copy_context(self, out) -> None:
        out.field = self.field
        out.datum = self.datum

    def _compatible(self, other) -> None:
        if not isinstance(other, BraidedTensorElement) or other.datum is not self.datum:
            raise BraidedError("braided tensors over different data")

    @classmethod
    def pure(cls, datum: YDDatum, a: Word, b: Word, c=1) -> "BraidedTensorElement":
        return cls(datum, {(tuple(a), tuple(b)): datum.field(c)})

    @classmethod
    def one(cls, datum: YDDatum) -> "BraidedTensorElement":
        return cls.pure(datum, (), ())

    @classmethod
    def left(cls, p: NcPoly) -> "BraidedTensorElement":
        """p (x) 1"""
        return cls(p.datum, {(w, ()): c for (w, _), c in _group_free(p).terms.items()})

    @classmethod
    def right(cls, p: NcPoly) -> "BraidedTensorElement":
        """1 (x) p"""
        return cls(p.datum, {((), w): c for (w, _), c in _group_free(p).terms.items()})

    def __mul__(self, other):
        return braided_mul_t2(self, other)

    def reduced_in(self, pres: Presentation) -> "BraidedTensorElement":
        """Reduce both legs in a group-free presentation."""
        out = BraidedTensorElement(self.datum)
        for (a, b), c in self.terms.items():
            left = pres.reduce_monomial((a, self.datum.group.identity))
            right = pres.reduce_monomial((b, self.datum.group.identity))
            for (wa, ga), ca in left.terms.items():
                for (wb, gb), cb in right.terms.items():
                    if not (self.datum.group.is_identity(ga) and self.datum.group.is_identity(gb)):
                        raise InhomogeneousError(f"{pres.name or 'presentation'} is not group-free")
                    out.add_term((wa, wb), c * ca * cb)
        return out

    def render(self) -> str:
        keys = sorted(self.terms, key=lambda k: (deglex_key(self.datum, (k[0], ())),
                                                  deglex_key(self.datum, (k[1], ()))), reverse=True)
        return render_combination(
            (f"{render_word(self.datum, a) or '1'} (x) {render_word(self.datum, b) or '1'}", self.terms[(a, b)])
            for a, b in keys)

    def __str__(self):
        return self.render()


def _group_free(p: NcPoly) -> NcPoly:
    if not p.is_group_free():
        raise InhomogeneousError(f"{p.render()} has nontrivial group parts")
    return p


def braided_mul_t2(A: BraidedTensorElement, B: BraidedTensorElement) -> BraidedTensorElement:
    A._compatible(B)
    out = BraidedTensorElement(A.datum)
    for (a, b), ca in A.terms.items():
        for (a2, b2), cb in B.terms.items():
            out.add_term((a + a2, b + b2), ca * cb * word_braiding(A.datum, b, a2))
    return out


def word_coproduct(datum: YDDatum, word: Word) -> BraidedTensorElement:
    """Sum over splittings S: q-factor over pairs (i in S^c, j in S, i < j)."""
    out = BraidedTensorElement(datum)
    n = len(word)
    for mask in range(1 << n):
        coeff = datum.field.one
        right_letters: List[int] = []
        left: List[int] = []
        right: List[int] = []
        for pos, x in enumerate(word):
            if mask >> pos & 1:
                left.append(x)
                for y in right_letters:
                    coeff = coeff * datum.q(y, x)
            else:
                right.append(x)
                right_letters.append(x)
        out.add_term((tuple(left), tuple(right)), coeff)
    return out


def braided_coproduct(p: NcPoly) -> BraidedTensorElement:
    _group_free(p)
    out = BraidedTensorElement(p.datum)
    for (word, _), c in p.terms.items():
        for key, c2 in word_coproduct(p.datum, word).terms.items():
            out.add_term(key, c * c2)
    return out


def coweight(p: NcPoly):
    """The common group coweight of the terms of p; InhomogeneousError otherwise."""
    datum = p.datum
    weights = {datum.group.mul(group_weight(datum, w), g) for w, g in p.terms}
    if len(weights) != 1:
        raise InhomogeneousError(f"{p.render()} is not homogeneous for the coweight grading")
    return weights.pop()


def braided_commutator(v: NcPoly, w: NcPoly) -> NcPoly:
    """[v, w] = vw - chi_w(g_v) wv for coweight-homogeneous group-free v and w."""
    _group_free(v)
    _group_free(w)
    datum = v.datum
    g_v = coweight(v)
    words_w = {word for word, _ in w.terms}
    factors = set()
    for word in words_w:
        c = datum.field.one
        for y in word:
            c = c * datum.chi(y, g_v)
        factors.add(c)
    if len(factors) != 1:
        raise InhomogeneousError(f"{w.render()} is not homogeneous for the weight grading")
    coweight(w)
    return nc_mul(v, w) - nc_mul(w, v).scale(factors.pop())


def primitive_residue(p: NcPoly, pres: Optional[Presentation] = None) -> BraidedTensorElement:
    """Delta(p) - p (x) 1 - 1 (x) p, legs reduced in pres when given."""
    residue = braided_coproduct(p) - BraidedTensorElement.left(p) - BraidedTensorElement.right(p)
    return residue.reduced_in(pres) if pres is not None else residue


def is_primitive(p: NcPoly, pres: Optional[Presentation] = None) -> bool:
    return primitive_residue(p, pres).is_zero


def _leading_normalized(p: NcPoly) -> NcPoly:
    _, c = p.leading()
    return p.scale(c.inverse())


def find_primitives(pres: Presentation, ideal: Optional[Presentation], n: int) -> List[NcPoly]:
    """
    Basis of the degree-n primitives of pres that lie in the ideal of ``ideal``.

    Computed as a kernel on each multidegree block of normal words; each basis
    vector is scaled to leading coefficient 1.
    """
    bound = pres.confluence_checked_to
    if bound is None or n > bound:
        raise DegreeBoundError(f"degree {n} exceeds the validated confluence bound {bound}")
    if ideal is not None and (ideal.confluence_checked_to is None or n > ideal.confluence_checked_to):
        raise DegreeBoundError(f"degree {n} exceeds the validated bound of the target ideal")
    datum = pres.datum
    identity = datum.group.identity
    blocks: Dict[Tuple[int, ...], List[Word]] = defaultdict(list)
    for word in normal_words(pres, n):
        blocks[multidegree(datum, word)].append(word)
    basis: List[NcPoly] = []
    for block in sorted(blocks):
        words = blocks[block]
        rows: Dict[Tuple, List[Scalar]] = {}
        for col, word in enumerate(words):
            p = NcPoly.monomial(datum, word)
            images = [(("delta",) + key, c) for key, c in primitive_residue(p, pres).terms.items()]
            if ideal is not None:
                images += [(("ideal",) + m, c) for m, c in ideal.reduce(p).terms.items()]
            for key, c in images:
                row = rows.setdefault(key, [datum.field.zero] * len(words))
                row[col] = row[col] + c
        ordered = [rows[k] for k in sorted(rows, key=repr)]
        for vector in datum.field.nullspace(ordered, len(words)):
            element = NcPoly(datum, {(w, identity): c for w, c in zip(words, vector)})
            if not element.is_zero:
                basis.append(_leading_normalized(element))
    return basis


def serre_element(datum: YDDatum, i: int, j: int, a_ij: int) -> NcPoly:
    """
    The quantum Serre element (ad_c x_i)^(1 - a_ij)(x_j).

    Coefficients use the unbalanced binomial in q_ii, written as
    q_i^(k(m-k)) [m choose k]_{q_i} with q_i^2 = q_ii.
    """
    if i == j:
        raise BraidedError("serre_element needs two distinct letters")
    if datum.component_pos(i) != datum.component_pos(j):
        raise BraidedError(f"{datum.name(i)} and {datum.name(j)} lie in different components")
    if a_ij > 0:
        raise BraidedError(f"Cartan entry must be nonpositive, got {a_ij}")
    q_ii = datum.q(i, i)
    try:
        q_i = q_ii.sqrt()
    except SquareRootError as exc:
        raise BraidedError(f"q_{datum.name(i)}{datum.name(i)} = {q_ii.render()} has no square root") from exc
    q_ij = datum.q(i, j)
    m = 1 - a_ij
    out = NcPoly(datum)
    for k in range(m + 1):
        coeff = gauss_binomial(m, k, q_i) * q_i ** (k * (m - k)) * q_ij ** k * q_ii ** (k * (k - 1) // 2)
        if k % 2:
            coeff = -coeff
        out.add_term(((i,) * (m - k) + (j,) + (i,) * k, datum.group.identity), coeff)
    return out


def check_commutator_identity(datum: YDDatum) -> CheckReport:
    """Delta[v,w] - [v,w] (x) 1 - 1 (x) [v,w] = (1 - q_vw q_wv) v (x) w for all letter pairs."""
    report = CheckReport("braided commutator coproduct identity")
    for i in range(datum.size):
        for j in range(datum.size):
            v, w = NcPoly.letter(datum, i), NcPoly.letter(datum, j)
            bracket = braided_commutator(v, w)
            lhs = primitive_residue(bracket)
            factor = datum.field.one - datum.q(i, j) * datum.q(j, i)
            rhs = BraidedTensorElement.pure(datum, (i,), (j,), factor)
            label = f"{datum.name(i)},{datum.name(j)}"
            report.add("BRACKET", label, lhs == rhs, (lhs - rhs).render())
            cross = datum.component_pos(i) != datum.component_pos(j)
            report.add("C2-VANISH", label, factor.is_zero == cross,
                       f"1 - q_vw*q_wv = {factor.render()} for a {'cross' if cross else 'same'}-component pair")
    return report


def saturate(datum: YDDatum, target: Presentation, D: int) -> Presentation:
    """
    Degree-bounded chain I_1 <= I_2 <= ...: add the primitives of each degree
    lying in the target ideal, complete, and continue up to D.
    """
    current = complete(Presentation.free(datum, "saturation"), D)
    for n in range(1, D + 1):
        primitives = find_primitives(current, target, n)
        if not primitives:
            continue
        relations = [rule.relation() for rule in current.rules] + primitives
        current = complete(Presentation(datum, interreduce(datum, relations), None, "saturation"), D)
    return current
