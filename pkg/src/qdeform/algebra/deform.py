"""
Cocycle deformation of a bosonization by linking parameters.

From a datum and linking parameters lambda three presentations are built
over the same letters; they differ only in the inhomogeneous part of the
cross-component rules x_i x_j -> q_ij x_j x_i + (...):

    H        0
    H^lambda lambda_ij (g_i g_j - 1)
    A        -lambda_ij

A is a (H^lambda, H)-biGalois object. The section phi: H -> A sends a normal
monomial to the product of its component blocks in A, and

    sigma(a, b) = phi(a_1) phi(b_1) phi^-1(a_2 b_2)

is a 2-cocycle on H with H^sigma isomorphic to H^lambda along the analogous
section eta: H -> H^lambda.
"""

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .bosonize import Coaction, HopfPresentation, TensorElement, TensorProductHopf
from .freealg import Monomial, NcPoly, Word, deglex_key, render_monomial
from .groebner import (DegreeBoundError, Presentation, complete, interreduce, normal_words,
                       word_weight)
from .report import CheckReport, QDeformError
from .scalars import Scalar
from .yd import LinkingParameters, ValidationError, YDDatum, validate

H_NAME = "H"
HLAMBDA_NAME = "Hlambda"
A_NAME = "A"


class DeformationError(QDeformError):
    """Base class for deformation errors."""
    pass


class NonScalarResidueError(DeformationError):
    """Raised when a cocycle value is not a multiple of 1."""
    pass


def cross_pairs(datum: YDDatum) -> List[Tuple[int, int]]:
    """Letter pairs (i, j) with comp(i) > comp(j), in declaration order."""
    return [(i, j) for i in range(datum.size) for j in range(datum.size)
            if datum.component_pos(i) > datum.component_pos(j)]


def cross_relations(datum: YDDatum, links: LinkingParameters, kind: str) -> List[NcPoly]:
    """x_i x_j - q_ij x_j x_i - (inhomogeneous term of the given kind)."""
    relations = []
    for i, j in cross_pairs(datum):
        rel = NcPoly.monomial(datum, (i, j)) - NcPoly.monomial(datum, (j, i), None, datum.q(i, j))
        lam = links(i, j)
        if kind == HLAMBDA_NAME and not lam.is_zero:
            g = datum.group.mul(datum.g(i), datum.g(j))
            rel = rel - NcPoly.group_element(datum, g).scale(lam) + NcPoly.constant(datum, lam)
        elif kind == A_NAME and not lam.is_zero:
            rel = rel + NcPoly.constant(datum, lam)
        relations.append(rel)
    return relations


def build_presentation(datum: YDDatum, relations: Sequence[NcPoly], D: int, name: str) -> Presentation:
    rules = interreduce(datum, relations)
    return complete(Presentation(datum, rules, None, name), D)


@dataclass
class DeformedPresentation:
    datum: YDDatum
    links: LinkingParameters
    extra: Tuple[NcPoly, ...]
    D: int
    H: HopfPresentation
    Hlambda: HopfPresentation
    A: Presentation

    @cached_property
    def phi(self) -> "Section":
        return Section(self.H, self.A, "phi")

    @cached_property
    def eta(self) -> "Section":
        return Section(self.H, self.Hlambda.pres, "eta")

    @cached_property
    def right_coaction(self) -> Coaction:
        """A -> A (x) H"""
        return Coaction(self.A, self.A, self.H.pres)

    @cached_property
    def left_coaction(self) -> Coaction:
        """A -> H^lambda (x) A"""
        return Coaction(self.A, self.Hlambda.pres, self.A)

    def with_cleft_object(self, A: Presentation) -> "DeformedPresentation":
        return replace(self, A=A)


def _check_weight_homogeneous(datum: YDDatum, relation: NcPoly) -> None:
    weights = {word_weight(datum, w).values for w, _ in relation.terms}
    if len(weights) > 1:
        raise DeformationError(f"relation {relation.render()} is not homogeneous for the group action")


def build_deformation(datum: YDDatum, links: LinkingParameters, extra_relations: Sequence[NcPoly] = (),
                      D: int = 6) -> DeformedPresentation:
    report = validate(datum, links)
    if not report.passed:
        raise ValidationError(report)
    extra = tuple(extra_relations)
    for relation in extra:
        _check_weight_homogeneous(datum, relation)
    zero = LinkingParameters.zero(datum)
    H = build_presentation(datum, cross_relations(datum, zero, H_NAME) + list(extra), D, H_NAME)
    Hl = build_presentation(datum, cross_relations(datum, links, HLAMBDA_NAME) + list(extra), D, HLAMBDA_NAME)
    A = build_presentation(datum, cross_relations(datum, links, A_NAME) + list(extra), D, A_NAME)
    return DeformedPresentation(datum, links, extra, D, HopfPresentation(H), HopfPresentation(Hl), A)


class Section:
    """A unit-preserving map from H to a target sending a normal monomial to its block product."""

    def __init__(self, source: HopfPresentation, target: Presentation, name: str = "phi"):
        if source.datum is not target.datum:
            raise DeformationError("section source and target must share the datum")
        self.source = source
        self.target = target
        self.name = name
        self._image: Dict[Monomial, NcPoly] = {}
        self._inverse: Dict[Monomial, NcPoly] = {}

    def blocks(self, word: Word) -> List[Word]:
        datum = self.source.datum
        out: List[List[int]] = []
        for x in word:
            if out and datum.component_pos(out[-1][-1]) == datum.component_pos(x):
                out[-1].append(x)
            else:
                out.append([x])
        return [tuple(b) for b in out]

    def image_monomial(self, m: Monomial) -> NcPoly:
        cached = self._image.get(m)
        if cached is not None:
            return cached
        datum = self.source.datum
        word, g = m
        image = NcPoly.constant(datum)
        for block in self.blocks(word):
            image = self.target.multiply(image, NcPoly.monomial(datum, block))
        image = self.target.multiply(image, NcPoly.group_element(datum, g))
        self._image[m] = image
        return image

    def __call__(self, p: NcPoly) -> NcPoly:
        out = NcPoly(p.datum)
        for m, c in p.terms.items():
            for m2, c2 in self.image_monomial(m).terms.items():
                out.add_term(m2, c * c2)
        return out

    def convolution_inverse(self, m: Monomial) -> NcPoly:
        """psi(m) with sum psi(m_1) phi(m_2) = eps(m) 1."""
        cached = self._inverse.get(m)
        if cached is not None:
            return cached
        source, target = self.source, self.target
        bound = source.pres.confluence_checked_to
        if bound is not None and source.degree(m) > bound:
            raise DegreeBoundError(f"{render_monomial(source.datum, m)} exceeds the validated degree {bound}")
        datum = source.datum
        acc = NcPoly.constant(datum, source.counit_monomial(m))
        diagonal = NcPoly(datum)
        for (c1, c2), k in source.coproduct_terms(m):
            if c1 == m:
                diagonal = diagonal + self.image_monomial(c2).scale(k)
            else:
                if source.degree(c1) >= source.degree(m):
                    raise DeformationError(f"coproduct of {render_monomial(datum, m)} is not degree-triangular")
                acc = acc - target.multiply(self.convolution_inverse(c1), self.image_monomial(c2)).scale(k)
        if len(diagonal.terms) != 1:
            raise DeformationError(f"{self.name} is not convolution invertible at {render_monomial(datum, m)}")
        ((word, g), d), = diagonal.terms.items()
        if word:
            raise DeformationError(f"{self.name} is not convolution invertible at {render_monomial(datum, m)}")
        inverse = NcPoly.group_element(datum, datum.group.inverse(g)).scale(d.inverse())
        result = target.multiply(acc, inverse)
        self._inverse[m] = result
        return result

    def invert(self, x: NcPoly) -> NcPoly:
        """Preimage in H of a target element, by triangularity."""
        datum = self.source.datum
        out = NcPoly(datum)
        rest = x
        while not rest.is_zero:
            m, c = rest.leading()
            image = self.image_monomial(m)
            lead, lead_c = image.leading()
            if lead != m or not lead_c.is_one:
                raise DeformationError(f"{self.name} is not unitriangular at {render_monomial(datum, m)}")
            out.add_term(m, c)
            rest = rest - image.scale(c)
        return out


def functional_inverse(hopf, f: Callable[[Hashable], Scalar], key: Hashable,
                       memo: Dict[Hashable, Scalar]) -> Scalar:
    """f^-1(key) with sum f(c_1) f^-1(c_2) = eps(c), by degree recursion."""
    if key in memo:
        return memo[key]
    numerator = hopf.counit_monomial(key)
    denominator = hopf.field.zero
    for (c1, c2), k in hopf.coproduct_terms(key):
        if c2 == key:
            denominator = denominator + k * f(c1)
        else:
            if hopf.degree(c2) >= hopf.degree(key):
                raise DeformationError(f"coproduct of {hopf.render_key(key)} is not degree-triangular")
            value = f(c1)
            if not value.is_zero:
                numerator = numerator - k * value * functional_inverse(hopf, f, c2, memo)
    if denominator.is_zero:
        raise DeformationError(f"functional is not convolution invertible at {hopf.render_key(key)}")
    result = numerator / denominator
    memo[key] = result
    return result


def conv_inverse(phi, c: Hashable, hopf=None, memo: Optional[Dict] = None):
    """Convolution inverse of a section (target-valued) or of a functional on a basis Hopf algebra."""
    if isinstance(phi, Section):
        return phi.convolution_inverse(c)
    if hopf is None:
        raise DeformationError("a functional needs its Hopf algebra to be inverted")
    return functional_inverse(hopf, phi, c, {} if memo is None else memo)


EXTRACTED = "extracted"
PAIRING = "pairing"


class CocycleTable:
    """
    A lazily evaluated bilinear form on basis pairs, with its convolution inverse.

    ``hopf`` is any basis Hopf algebra (a HopfPresentation, or a
    TensorProductHopf for pairing-induced cocycles).
    """

    def __init__(self, hopf, evaluate: Callable[[Hashable, Hashable], Scalar], source: str,
                 degree_bound: Optional[int] = None):
        self.hopf = hopf
        self.source = source
        self.degree_bound = degree_bound
        self._evaluate = evaluate
        self._values: Dict[Tuple[Hashable, Hashable], Scalar] = {}
        self._pairs = TensorProductHopf(hopf, hopf)
        self._inverse: Dict[Hashable, Scalar] = {}

    def __call__(self, a: Hashable, b: Hashable) -> Scalar:
        key = (a, b)
        value = self._values.get(key)
        if value is None:
            if self.degree_bound is not None and self.hopf.degree(a) + self.hopf.degree(b) > self.degree_bound:
                raise DegreeBoundError(
                    f"sigma({self.hopf.render_key(a)} ; {self.hopf.render_key(b)}) exceeds degree {self.degree_bound}")
            value = self._evaluate(a, b)
            self._values[key] = value
        return value

    def inverse(self, a: Hashable, b: Hashable) -> Scalar:
        return functional_inverse(self._pairs, lambda key: self(*key), (a, b), self._inverse)

    def entries(self, basis: Sequence[Hashable], max_total: int) -> List[Tuple[Hashable, Hashable, Scalar]]:
        out = []
        for a in basis:
            for b in basis:
                if self.hopf.degree(a) + self.hopf.degree(b) <= max_total:
                    out.append((a, b, self(a, b)))
        return out

    def render_entries(self, basis: Sequence[Hashable], max_total: int) -> List[str]:
        return [f"sigma({self.hopf.render_key(a)} ; {self.hopf.render_key(b)}) = {v.render()}"
                for a, b, v in self.entries(basis, max_total)]


def basis_monomials(hp: HopfPresentation, n_max: int) -> List[Monomial]:
    """Normal monomials of degree <= n_max with group part 1 or a group generator, deglex order."""
    group = hp.datum.group
    parts = [group.identity] + group.generators()
    out = hp.basis(n_max, parts)
    return sorted(out, key=lambda m: deglex_key(hp.datum, m))


def extract_cocycle(dp: DeformedPresentation, D: int) -> CocycleTable:
    """
    sigma(a, b) = phi(a1) phi(b1) phi^-1(a2 b2), evaluated lazily.

    Values are only asked for on pairs of total degree <= D, whose products
    stay in degree <= D, so completion to D (not 2D) is enough. Pairs beyond
    the completion degree raise DegreeBoundError when evaluated.
    """
    if D > dp.D:
        raise DegreeBoundError(f"cocycle degree {D} exceeds the completion degree {dp.D}")
    H, A, phi = dp.H, dp.A, dp.phi

    def evaluate(a: Monomial, b: Monomial) -> Scalar:
        acc = NcPoly(dp.datum)
        for (a1, a2), ka in H.coproduct_terms(a):
            for (b1, b2), kb in H.coproduct_terms(b):
                left = A.multiply(phi.image_monomial(a1), phi.image_monomial(b1))
                for m, c in H.multiply_terms(a2, b2):
                    acc = acc + A.multiply(left, phi.convolution_inverse(m)).scale(ka * kb * c)
        value = acc.scalar_value()
        if value is None:
            raise NonScalarResidueError(
                f"sigma({render_monomial(dp.datum, a)} ; {render_monomial(dp.datum, b)}) = {acc.render()} "
                f"is not a scalar")
        return value

    return CocycleTable(H, evaluate, EXTRACTED, dp.D)


def iterated_coproduct(hopf, key) -> List[Tuple[Tuple[Hashable, Hashable, Hashable], Scalar]]:
    out = []
    for (k1, rest), c in hopf.coproduct_terms(key):
        for (k2, k3), c2 in hopf.coproduct_terms(rest):
            out.append(((k1, k2, k3), c * c2))
    return out


def deformed_product(p: Hashable, r: Hashable, sigma: CocycleTable, hp=None) -> Dict[Hashable, Scalar]:
    """
    p . r = sigma(p_1, r_1) p_2 r_2 sigma^-1(p_3, r_3), in the basis of hp.

    Returns an NcPoly when hp is a HopfPresentation, else a key -> Scalar dict.
    """
    hopf = hp if hp is not None else sigma.hopf
    acc: Dict[Hashable, Scalar] = {}
    left_terms = iterated_coproduct(hopf, p)
    right_terms = iterated_coproduct(hopf, r)
    for (p1, p2, p3), cp in left_terms:
        for (r1, r2, r3), cr in right_terms:
            front = sigma(p1, r1)
            if front.is_zero:
                continue
            back = sigma.inverse(p3, r3)
            if back.is_zero:
                continue
            factor = cp * cr * front * back
            for m, c in hopf.multiply_terms(p2, r2):
                total = acc.get(m, hopf.field.zero) + factor * c
                if total.is_zero:
                    acc.pop(m, None)
                else:
                    acc[m] = total
    if isinstance(hopf, HopfPresentation):
        return NcPoly(hopf.datum, acc)
    return acc


def crossed_product(p: Monomial, r: Monomial, sigma: CocycleTable, hp: HopfPresentation) -> NcPoly:
    """The one-sided twisted product sigma(p_1, r_1) p_2 r_2."""
    out = NcPoly(hp.datum)
    for (p1, p2), cp in hp.coproduct_terms(p):
        for (r1, r2), cr in hp.coproduct_terms(r):
            front = sigma(p1, r1)
            if front.is_zero:
                continue
            for m, c in hp.multiply_terms(p2, r2):
                out.add_term(m, cp * cr * front * c)
    return out


@dataclass
class DimsTable:
    rows: List[Tuple[int, int, int, bool]]
    group_order: Optional[int]

    @property
    def equal(self) -> bool:
        return all(row[3] for row in self.rows)

    @property
    def exhausted(self) -> bool:
        return bool(self.rows) and self.rows[-1][1] == 0 and self.rows[-1][2] == 0

    def totals(self) -> Tuple[int, int]:
        return sum(r[1] for r in self.rows), sum(r[2] for r in self.rows)

    def total_dimensions(self) -> Optional[Tuple[int, int]]:
        """Total dimensions when Gamma is finite and the counts have run out."""
        if self.group_order is None or not self.exhausted:
            return None
        h, hl = self.totals()
        return h * self.group_order, hl * self.group_order

    def lines(self) -> List[str]:
        out = [f"{n} {h} {hl} {'equal' if eq else 'differ'}" for n, h, hl, eq in self.rows]
        dims = self.total_dimensions()
        if dims is not None:
            out.append(f"total {dims[0]} {dims[1]}")
        return out


def graded_dims(dp: DeformedPresentation, n_max: int) -> DimsTable:
    rows = []
    for n in range(n_max + 1):
        h = len(normal_words(dp.H.pres, n))
        hl = len(normal_words(dp.Hlambda.pres, n))
        rows.append((n, h, hl, h == hl))
    group = dp.datum.group
    order = None
    if group.free_rank == 0:
        order = 1
        for n in group.torsion_orders:
            order *= n
    return DimsTable(rows, order)


def _subjects(presentation: Presentation, D: int) -> List[Monomial]:
    group = presentation.datum.group
    out = [((), g) for g in group.generators()]
    for n in range(D + 1):
        out.extend((w, group.identity) for w in normal_words(presentation, n))
    return out


def _leg_terms(coaction: Coaction):
    return lambda m: coaction.monomial_terms(m)


def comodule_check(dp: DeformedPresentation, D: int) -> CheckReport:
    """The coactions of A are well defined, coassociative, counital and commute."""
    report = CheckReport(f"comodule algebra A up to degree {D}")
    A, H, Hl = dp.A, dp.H.pres, dp.Hlambda.pres
    right, left = dp.right_coaction, dp.left_coaction
    delta_H, delta_Hl = dp.H.delta, dp.Hlambda.delta
    datum = dp.datum
    one = datum.field.one

    for rule in A.rules:
        residue = right(rule.relation())
        report.add("COACT-R", f"rule {rule.render()}", residue.is_zero, residue.render())
        residue = left(rule.relation())
        report.add("COACT-L", f"rule {rule.render()}", residue.is_zero, residue.render())

    for m in _subjects(A, D):
        label = render_monomial(datum, m)
        dr = TensorElement((A, H), dict(right.monomial_terms(m)))
        lhs = dr.replace_leg(0, _leg_terms(right), (A, H, H))
        rhs = dr.replace_leg(1, _leg_terms(delta_H), (A, H, H))
        report.add("COASSOC-R", label, lhs == rhs, (lhs - rhs).render())

        dl = TensorElement((Hl, A), dict(left.monomial_terms(m)))
        lhs = dl.replace_leg(0, _leg_terms(delta_Hl), (Hl, Hl, A))
        rhs = dl.replace_leg(1, _leg_terms(left), (Hl, Hl, A))
        report.add("COASSOC-L", label, lhs == rhs, (lhs - rhs).render())

        lhs = dr.replace_leg(0, _leg_terms(left), (Hl, A, H))
        rhs = dl.replace_leg(1, _leg_terms(right), (Hl, A, H))
        report.add("BICOMODULE", label, lhs == rhs, (lhs - rhs).render())

        expected = TensorElement((A,), {(m,): one})
        eps_r = dr.replace_leg(1, lambda x: [((), dp.H.counit_monomial(x))], (A,))
        eps_l = dl.replace_leg(0, lambda x: [((), dp.Hlambda.counit_monomial(x))], (A,))
        ok = eps_r == expected and eps_l == expected
        report.add("COUNIT", label, ok, f"{(eps_r - expected).render()} ; {(eps_l - expected).render()}")
    return report


def check_cocycle(sigma: CocycleTable, basis: Sequence[Hashable], max_total: int = 3) -> CheckReport:
    """Normalization, the 2-cocycle identity and the convolution inverse on basis elements."""
    hopf = sigma.hopf
    report = CheckReport(f"{sigma.source} cocycle up to total degree {max_total}")
    unit = hopf.unit_key
    for a in basis:
        if hopf.degree(a) > max_total:
            continue
        eps = hopf.counit_monomial(a)
        left, right = sigma(a, unit), sigma(unit, a)
        report.add("NORMAL", hopf.render_key(a), left == eps and right == eps,
                   f"sigma(h,1) = {left.render()}, sigma(1,h) = {right.render()}, eps = {eps.render()}")

    for a in basis:
        for b in basis:
            if hopf.degree(a) + hopf.degree(b) > max_total:
                continue
            total = hopf.field.zero
            for (a1, a2), ka in hopf.coproduct_terms(a):
                for (b1, b2), kb in hopf.coproduct_terms(b):
                    front = sigma(a1, b1)
                    if not front.is_zero:
                        total = total + ka * kb * front * sigma.inverse(a2, b2)
            expected = hopf.counit_monomial(a) * hopf.counit_monomial(b)
            report.add("CONV-INV", f"{hopf.render_key(a)} ; {hopf.render_key(b)}", total == expected,
                       f"{total.render()} != {expected.render()}")

            for c in basis:
                if hopf.degree(a) + hopf.degree(b) + hopf.degree(c) > max_total:
                    continue
                lhs = hopf.field.zero
                for (a1, a2), ka in hopf.coproduct_terms(a):
                    for (b1, b2), kb in hopf.coproduct_terms(b):
                        front = sigma(a1, b1)
                        if front.is_zero:
                            continue
                        for m, cm in hopf.multiply_terms(a2, b2):
                            lhs = lhs + ka * kb * cm * front * sigma(m, c)
                rhs = hopf.field.zero
                for (b1, b2), kb in hopf.coproduct_terms(b):
                    for (c1, c2), kc in hopf.coproduct_terms(c):
                        front = sigma(b1, c1)
                        if front.is_zero:
                            continue
                        for m, cm in hopf.multiply_terms(b2, c2):
                            rhs = rhs + kb * kc * cm * front * sigma(a, m)
                report.add("COCYCLE",
                           f"{hopf.render_key(a)} ; {hopf.render_key(b)} ; {hopf.render_key(c)}",
                           lhs == rhs, f"{lhs.render()} != {rhs.render()}")
    return report


def check_transport(dp: DeformedPresentation, sigma: CocycleTable, basis: Sequence[Monomial],
                    max_total: int = 2) -> CheckReport:
    """p ._sigma r = eta^-1(eta(p) eta(r)) on basis pairs."""
    report = CheckReport(f"deformed product against H^lambda up to total degree {max_total}")
    eta, Hl = dp.eta, dp.Hlambda.pres
    datum = dp.datum
    for a in basis:
        for b in basis:
            if len(a[0]) + len(b[0]) > max_total:
                continue
            twisted = deformed_product(a, b, sigma, dp.H)
            transported = eta.invert(Hl.multiply(eta.image_monomial(a), eta.image_monomial(b)))
            report.add("TRANSPORT", f"{render_monomial(datum, a)} ; {render_monomial(datum, b)}",
                       twisted == transported, (twisted - transported).render())
    return report


def check_crossed_product(dp: DeformedPresentation, sigma: CocycleTable, basis: Sequence[Monomial],
                          max_total: int = 2) -> CheckReport:
    """phi(p ._sigma r) = phi(p) phi(r) in A, for the one-sided twisted product."""
    report = CheckReport(f"crossed product against A up to total degree {max_total}")
    phi, A = dp.phi, dp.A
    for a in basis:
        for b in basis:
            if len(a[0]) + len(b[0]) > max_total:
                continue
            lhs = phi(crossed_product(a, b, sigma, dp.H))
            rhs = A.multiply(phi.image_monomial(a), phi.image_monomial(b))
            report.add("CROSSED", f"{render_monomial(dp.datum, a)} ; {render_monomial(dp.datum, b)}",
                       lhs == rhs, (lhs - rhs).render())
    return report


def check_colinear(dp: DeformedPresentation, D: int = 3) -> CheckReport:
    """(phi (x) id) Delta_H = delta_A phi on normal monomials."""
    report = CheckReport(f"right colinearity of phi up to degree {D}")
    A, H = dp.A, dp.H.pres
    phi, right = dp.phi, dp.right_coaction
    for m in _subjects(H, D):
        lhs = TensorElement((A, H))
        for (m1, m2), c in dp.H.coproduct_terms(m):
            for a, ca in phi.image_monomial(m1).terms.items():
                lhs.add_term((a, m2), c * ca)
        rhs = right(phi.image_monomial(m))
        report.add("COLINEAR", render_monomial(dp.datum, m), lhs == rhs, (lhs - rhs).render())
    return report


def check_filtration(dp: DeformedPresentation) -> CheckReport:
    """Dropping lower-degree terms of each H^lambda rule gives the H rule with the same lhs."""
    report = CheckReport("associated graded of H^lambda")
    H = dp.H.pres
    for rule in dp.Hlambda.pres.rules:
        top = rule.rhs.homogeneous_part(len(rule.lhs))
        graded = H.rule_for(rule.lhs)
        ok = graded is not None and graded.rhs == top
        residue = "no rule in H" if graded is None else (top - graded.rhs).render()
        report.add("GRADED", rule.render(), ok, residue)
    return report


def verify_cocycle(dp: DeformedPresentation, D: int = 3) -> Tuple[CocycleTable, CheckReport]:
    """Extract sigma and run every cocycle-level check."""
    sigma = extract_cocycle(dp, D)
    basis = basis_monomials(dp.H, D)
    report = CheckReport(f"cocycle deformation up to degree {D}")
    report.extend(check_cocycle(sigma, basis, D))
    report.extend(check_transport(dp, sigma, basis, min(D, 2)))
    report.extend(check_crossed_product(dp, sigma, basis, min(D, 2)))
    report.extend(check_colinear(dp, D))
    report.extend(check_filtration(dp))
    return sigma, report
