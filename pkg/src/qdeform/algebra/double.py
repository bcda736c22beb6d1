"""
Skew pairings and the generalized quantum double.

For a datum with two components the lower letters generate
H_- = R_- # k[Gamma'] and the upper letters H_+ = R_+ # k[Gamma], where
Gamma' is free abelian on one generator g_j' per lower letter. The pairing
tau: H_- x H_+ -> k is fixed on generators by

    tau(g_j', g) = chi_j(g),    tau(x_j, x_i) = -lambda_ij,

vanishes on mixed group/letter pairs, and is extended by

    tau(ab, x) = tau(a, x_1) tau(b, x_2),    tau(a, xy) = tau(a_1, y) tau(a_2, x).

The double (H_- (x) H_+)^sigma is presented over the letters of both
factors and Gamma' x Gamma with the cross rules

    x_i x_j -> q_ij x_j x_i + lambda_ij (g_j' g_i - 1),

and its quotient by g_j' = g_j is isomorphic to H^lambda.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .abgroup import Character, GroupElement, GroupSpec
from .bosonize import HopfPresentation, TensorProductHopf
from .deform import (PAIRING, CocycleTable, DeformedPresentation, basis_monomials, build_presentation,
                     check_cocycle, deformed_product, extract_cocycle, functional_inverse, iterated_coproduct)
from .freealg import (Monomial, NcPoly, deglex_key, nc_mul, render_combination, render_monomial,
                      straighten_factor, transfer_poly)
from .groebner import DegreeBoundError, normal_words
from .report import CheckReport, QDeformError
from .scalars import Scalar
from .yd import Letter, LinkingParameters, ValidationError, YDDatum, validate

PairKey = Tuple[Monomial, Monomial]

MINUS_NAME = "H-"
PLUS_NAME = "H+"
DOUBLE_NAME = "double"
QUOTIENT_NAME = "double/Q"


class PairingError(QDeformError):
    """Base class for skew pairing and double errors."""
    pass


class CentralityError(PairingError):
    """Raised when some g_j' g_j^-1 is not central in the double."""
    pass


def _free_generator_name(group: GroupSpec, g: GroupElement) -> Optional[str]:
    nonzero = [k for k, e in enumerate(g) if e]
    if len(nonzero) == 1 and nonzero[0] < group.free_rank and g[nonzero[0]] == 1:
        return group.names[nonzero[0]]
    return None


def _prime_group(datum: YDDatum, minus: Sequence[int], shared_group: bool) -> GroupSpec:
    if not shared_group:
        return GroupSpec(tuple(f"g_{datum.name(j)}" for j in minus))
    names = []
    for j in minus:
        name = _free_generator_name(datum.group, datum.g(j))
        if name is None:
            raise PairingError(
                f"shared group needs g_{datum.name(j)} = {datum.group.render(datum.g(j))} "
                f"to be a free generator")
        names.append(f"{name}_p")
    if len(set(names)) != len(names):
        raise PairingError("shared group needs distinct group elements on the lower letters")
    return GroupSpec(tuple(names))


class SkewPairing:
    """tau: H_- x H_+ -> k, extended from its generator table with memoization."""

    def __init__(self, datum: YDDatum, links: LinkingParameters, left: HopfPresentation,
                 right: HopfPresentation, degree_bound: int, shared_group: bool = False):
        if len(datum.components) != 2:
            raise PairingError(f"a skew pairing needs exactly two components, got {list(datum.components)}")
        self.datum = datum
        self.links = links
        self.left = left
        self.right = right
        self.degree_bound = degree_bound
        self.shared_group = shared_group
        self.minus_label, self.plus_label = datum.components
        self.minus = datum.letters_in(self.minus_label)
        self.plus = datum.letters_in(self.plus_label)
        self.gamma_prime = left.datum.group
        self.field = datum.field
        self._memo: Dict[PairKey, Scalar] = {}
        self._inverse_memo: Dict[PairKey, Scalar] = {}
        self.pairs = TensorProductHopf(left, right)

    @classmethod
    def build(cls, datum: YDDatum, links: LinkingParameters, extra_relations: Sequence[NcPoly] = (),
              D: int = 5, shared_group: bool = False) -> "SkewPairing":
        if len(datum.components) != 2:
            raise PairingError(f"a skew pairing needs exactly two components, got {list(datum.components)}")
        report = validate(datum, links)
        if not report.passed:
            raise ValidationError(report)
        minus_label, plus_label = datum.components
        minus, plus = datum.letters_in(minus_label), datum.letters_in(plus_label)
        if not minus or not plus:
            raise PairingError("both components need at least one letter")
        gamma_prime = _prime_group(datum, minus, shared_group)
        letters = []
        for k, j in enumerate(minus):
            values = tuple(datum.q(m, j) for m in minus)
            letters.append(Letter(datum.name(j), minus_label, gamma_prime.generator(k),
                                  Character(gamma_prime, values)))
        left_datum = YDDatum(datum.field, gamma_prime, [minus_label], letters)
        right_datum = datum.restrict([plus_label])
        left_rel, right_rel = _split_relations(datum, extra_relations, left_datum, right_datum)
        left = HopfPresentation(build_presentation(left_datum, left_rel, D, MINUS_NAME))
        right = HopfPresentation(build_presentation(right_datum, right_rel, D, PLUS_NAME))
        return cls(datum, links, left, right, D, shared_group)

    def group_value(self, h: GroupElement, g: GroupElement) -> Scalar:
        """tau(h', g) = prod_k chi_{j_k}(g)^{h'_k}."""
        value = self.field.one
        for k, e in enumerate(h):
            if e:
                value = value * self.datum.chi(self.minus[k], g) ** e
        return value

    def letter_value(self, j: int, i: int) -> Scalar:
        """tau(x_j, x_i) for letter j of H_- and letter i of H_+."""
        return -self.links(self.plus[i], self.minus[j])

    def _first_letter(self, j: int, x: Monomial) -> Scalar:
        # tau(x_j, -) is a skew derivation: nonzero only on single letters times a group element
        word, g = x
        if len(word) != 1:
            return self.field.zero
        return self.datum.chi(self.minus[j], g) * self.letter_value(j, word[0])

    def __call__(self, a: Monomial, x: Monomial) -> Scalar:
        key = (a, x)
        value = self._memo.get(key)
        if value is not None:
            return value
        if len(a[0]) + len(x[0]) > self.degree_bound:
            raise DegreeBoundError(
                f"tau({self.left.render_key(a)} ; {self.right.render_key(x)}) exceeds degree {self.degree_bound}")
        value = self._evaluate(a, x)
        self._memo[key] = value
        return value

    def _evaluate(self, a: Monomial, x: Monomial) -> Scalar:
        (word, h), (v, g) = a, x
        if not word:
            return self.group_value(h, g) if not v else self.field.zero
        rest = (word[1:], h)
        value = self.field.zero
        for (x1, x2), c in self.right.coproduct_terms(x):
            front = self._first_letter(word[0], x1)
            if not front.is_zero:
                value = value + c * front * self(rest, x2)
        return value

    def inverse(self, a: Monomial, x: Monomial) -> Scalar:
        """tau^-1(a, x) = tau(S(a), x)."""
        total = self.field.zero
        for m, c in self.left.antipode_monomial(a).terms.items():
            total = total + c * self(m, x)
        return total

    def inverse_right(self, a: Monomial, x: Monomial) -> Scalar:
        """tau(a, S^-1(x))."""
        total = self.field.zero
        for m, c in self.right.antipode_inverse_monomial(x).terms.items():
            total = total + c * self(a, m)
        return total

    def convolution_inverse(self, a: Monomial, x: Monomial) -> Scalar:
        return functional_inverse(self.pairs, lambda key: self(*key), (a, x), self._inverse_memo)

    def render_pair(self, a: Monomial, x: Monomial) -> str:
        return f"{self.left.render_key(a)} ; {self.right.render_key(x)}"


def _split_relations(datum: YDDatum, relations: Sequence[NcPoly], left: YDDatum,
                     right: YDDatum) -> Tuple[List[NcPoly], List[NcPoly]]:
    minus_rel, plus_rel = [], []
    identity = left.group.identity
    for p in relations:
        positions = {datum.component_pos(x) for word, _ in p.terms for x in word}
        if positions == {0}:
            if not p.is_group_free():
                raise PairingError(f"relation {p.render()} on lower letters must be group-free")
            minus_rel.append(transfer_poly(p, left, lambda g: identity))
        elif positions == {1}:
            plus_rel.append(transfer_poly(p, right))
        else:
            raise PairingError(f"relation {p.render()} does not live in a single component")
    return minus_rel, plus_rel


def eval_pairing(tau: SkewPairing, a: Monomial, x: Monomial) -> Scalar:
    return tau(a, x)


def pairing_basis(tau: SkewPairing, max_total: int) -> List[PairKey]:
    """Pairs (a, x) of basis monomials of H_- and H_+ with total degree <= max_total."""
    left = basis_monomials(tau.left, max_total)
    right = basis_monomials(tau.right, max_total)
    return [(a, x) for a in left for x in right if len(a[0]) + len(x[0]) <= max_total]


def cocycle_from_pairing(tau: SkewPairing) -> CocycleTable:
    """sigma(a (x) x, b (x) y) = eps(a) tau(b, x) eps(y) on H_- (x) H_+."""
    hopf = tau.pairs

    def evaluate(p: PairKey, r: PairKey) -> Scalar:
        (a, x), (b, y) = p, r
        if a[0] or y[0]:
            return tau.field.zero
        return tau(b, x)

    return CocycleTable(hopf, evaluate, PAIRING, tau.degree_bound)


def check_pairing(tau: SkewPairing, max_total: int = 3) -> CheckReport:
    """Unit and product laws of tau and both forms of its inverse on basis pairs."""
    report = CheckReport(f"skew pairing up to total degree {max_total}")
    left, right = tau.left, tau.right
    left_basis = basis_monomials(left, max_total)
    right_basis = basis_monomials(right, max_total)
    for x in right_basis:
        value, eps = tau(left.unit_key, x), right.counit_monomial(x)
        report.add("UNIT-L", right.render_key(x), value == eps, f"tau(1, x) = {value.render()}")
    for a in left_basis:
        value, eps = tau(a, right.unit_key), left.counit_monomial(a)
        report.add("UNIT-R", left.render_key(a), value == eps, f"tau(a, 1) = {value.render()}")

    for a in left_basis:
        for b in left_basis:
            for x in right_basis:
                if len(a[0]) + len(b[0]) + len(x[0]) > max_total:
                    continue
                lhs = tau.field.zero
                for m, c in left.multiply_terms(a, b):
                    lhs = lhs + c * tau(m, x)
                rhs = tau.field.zero
                for (x1, x2), c in right.coproduct_terms(x):
                    rhs = rhs + c * tau(a, x1) * tau(b, x2)
                report.add("MULT-L", f"{left.render_key(a)} * {left.render_key(b)} ; {right.render_key(x)}",
                           lhs == rhs, f"{lhs.render()} != {rhs.render()}")

    for a in left_basis:
        for x in right_basis:
            for y in right_basis:
                if len(a[0]) + len(x[0]) + len(y[0]) > max_total:
                    continue
                lhs = tau.field.zero
                for m, c in right.multiply_terms(x, y):
                    lhs = lhs + c * tau(a, m)
                rhs = tau.field.zero
                for (a1, a2), c in left.coproduct_terms(a):
                    rhs = rhs + c * tau(a1, y) * tau(a2, x)
                report.add("MULT-R", f"{left.render_key(a)} ; {right.render_key(x)} * {right.render_key(y)}",
                           lhs == rhs, f"{lhs.render()} != {rhs.render()}")

    for a in left_basis:
        for x in right_basis:
            if len(a[0]) + len(x[0]) > max_total:
                continue
            conv = tau.convolution_inverse(a, x)
            via_s, via_s_inv = tau.inverse(a, x), tau.inverse_right(a, x)
            report.add("INVERSE", tau.render_pair(a, x), conv == via_s == via_s_inv,
                       f"convolution {conv.render()}, tau(S(a), x) = {via_s.render()}, "
                       f"tau(a, S^-1(x)) = {via_s_inv.render()}")
    return report


def check_pairing_admissibility(tau: SkewPairing) -> CheckReport:
    """The linking conditions in diagonal form, for every nonzero lambda_ij."""
    report = CheckReport("linking admissibility")
    datum = tau.datum
    for i in tau.plus:
        for j in tau.minus:
            lam = tau.links(i, j)
            if lam.is_zero:
                continue
            label = f"lambda({datum.name(i)},{datum.name(j)})"
            for gen in datum.group.generators():
                lhs = datum.chi(i, gen) * lam
                rhs = datum.chi(j, datum.group.inverse(gen)) * lam
                report.add("ADMISSIBLE", f"{label} at {datum.group.render(gen)}", lhs == rhs,
                           f"{lhs.render()} != {rhs.render()}")
            for k in tau.minus:
                lhs = datum.chi(j, datum.g(k)) * lam
                rhs = datum.chi(k, datum.g(i)) * lam
                report.add("ADMISSIBLE", f"{label} at g_{datum.name(k)}", lhs == rhs,
                           f"{lhs.render()} != {rhs.render()}")
    if not report.entries:
        report.note("ADMISSIBLE", "links", "all linking parameters vanish")
    return report


@dataclass
class DoublePresentation:
    """The double over Gamma' x Gamma; letters keep their names and declaration order."""
    pairing: SkewPairing
    datum: YDDatum
    hopf: HopfPresentation
    D: int

    @property
    def pres(self):
        return self.hopf.pres

    @property
    def prime_rank(self) -> int:
        return self.pairing.gamma_prime.rank

    def embed_prime(self, h: GroupElement) -> GroupElement:
        return tuple(h) + (0,) * self.pairing.datum.group.rank

    def embed_group(self, g: GroupElement) -> GroupElement:
        return (0,) * self.prime_rank + tuple(g)

    def embed_minus(self, a: Monomial) -> Monomial:
        word, h = a
        return tuple(self.pairing.minus[x] for x in word), self.embed_prime(h)

    def embed_plus(self, x: Monomial) -> Monomial:
        word, g = x
        return tuple(self.pairing.plus[y] for y in word), self.embed_group(g)

    def factorize(self, p: NcPoly) -> Dict[PairKey, Scalar]:
        """Coordinates of a normal element in the basis a (x) x = a * x."""
        tau = self.pairing
        minus_pos = {j: k for k, j in enumerate(tau.minus)}
        plus_pos = {i: r for r, i in enumerate(tau.plus)}
        out: Dict[PairKey, Scalar] = {}
        r1 = self.prime_rank
        for (word, g), c in p.terms.items():
            split = 0
            while split < len(word) and word[split] in minus_pos:
                split += 1
            if any(y not in plus_pos for y in word[split:]):
                raise PairingError(f"{render_monomial(self.datum, (word, g))} is not in factorized order")
            h_part = g[:r1]
            a = (tuple(minus_pos[y] for y in word[:split]), h_part)
            x = (tuple(plus_pos[y] for y in word[split:]), g[r1:])
            factor = straighten_factor(self.datum, self.embed_prime(h_part), word[split:])
            key = (a, x)
            total = out.get(key, self.datum.field.zero) + c / factor
            if total.is_zero:
                out.pop(key, None)
            else:
                out[key] = total
        return out

    def render_factorized(self, terms: Dict[PairKey, Scalar]) -> str:
        tau = self.pairing
        keys = sorted(terms, key=lambda k: (deglex_key(tau.left.datum, k[0]), deglex_key(tau.right.datum, k[1])),
                      reverse=True)
        pairs = []
        for a, x in keys:
            if not a[0] and not x[0] and not any(a[1]) and not any(x[1]):
                text = "1"
            else:
                text = f"{tau.left.render_key(a)} (x) {tau.right.render_key(x)}"
            pairs.append((text, terms[(a, x)]))
        return render_combination(pairs)

    def product(self, x: Monomial, a: Monomial) -> Dict[PairKey, Scalar]:
        """x * a computed by rewriting in the double, for x in H_+ and a in H_-."""
        one = self.datum.field.one
        lhs = NcPoly(self.datum, {self.embed_plus(x): one})
        rhs = NcPoly(self.datum, {self.embed_minus(a): one})
        return self.factorize(self.pres.reduce(nc_mul(lhs, rhs)))

    def central_elements(self) -> List[Tuple[str, GroupElement]]:
        """g_j' g_j^-1 for each lower letter, as elements of Gamma' x Gamma."""
        tau = self.pairing
        group = self.datum.group
        out = []
        for k, j in enumerate(tau.minus):
            prime = self.embed_prime(tau.gamma_prime.generator(k))
            base = self.embed_group(tau.datum.group.inverse(tau.datum.g(j)))
            out.append((f"{tau.gamma_prime.names[k]}*g_{tau.datum.name(j)}^-1", group.mul(prime, base)))
        return out

    def prime_to_gamma(self, h: GroupElement) -> GroupElement:
        """Gamma' -> Gamma, g_j' -> g_j."""
        tau = self.pairing
        group = tau.datum.group
        out = group.identity
        for k, e in enumerate(h):
            if e:
                out = group.mul(out, group.power(tau.datum.g(tau.minus[k]), e))
        return out

    def quotient_group_map(self, g: GroupElement) -> GroupElement:
        r1 = self.prime_rank
        return self.pairing.datum.group.mul(self.prime_to_gamma(g[:r1]), tuple(g[r1:]))


def build_double(tau: SkewPairing, D: int) -> DoublePresentation:
    datum = tau.datum
    prime = tau.gamma_prime
    group = GroupSpec(prime.free_names + datum.group.free_names, datum.group.torsion)
    r1 = prime.rank
    letters = []
    for i, x in enumerate(datum.letters):
        g = prime.generator(tau.minus.index(i)) + (0,) * datum.group.rank if i in tau.minus else (0,) * r1 + x.g
        prime_values = tuple(datum.q(m, i) for m in tau.minus)
        letters.append(Letter(x.name, x.component, g, Character(group, prime_values + x.chi.values)))
    double = YDDatum(datum.field, group, datum.components, letters)

    relations = []
    for i in tau.plus:
        for k, j in enumerate(tau.minus):
            rel = NcPoly.monomial(double, (i, j)) - NcPoly.monomial(double, (j, i), None, double.q(i, j))
            lam = tau.links(i, j)
            if not lam.is_zero:
                g = group.mul(double.g(j), double.g(i))
                rel = rel - NcPoly.group_element(double, g).scale(lam) + NcPoly.constant(double, lam)
            relations.append(rel)
    identity = datum.group.rank * (0,)
    for rule in tau.left.pres.rules:
        relations.append(transfer_poly(rule.relation(), double, lambda h: tuple(h) + identity))
    for rule in tau.right.pres.rules:
        relations.append(transfer_poly(rule.relation(), double, lambda g: (0,) * r1 + tuple(g)))
    pres = build_presentation(double, relations, D, DOUBLE_NAME)
    return DoublePresentation(tau, double, HopfPresentation(pres), D)


def _generators(hp: HopfPresentation) -> List[Monomial]:
    identity = hp.datum.group.identity
    return [((i,), identity) for i in range(hp.datum.size)] + [((), g) for g in hp.datum.group.generators()]


def product_formula(tau: SkewPairing, x: Monomial, a: Monomial) -> Dict[PairKey, Scalar]:
    """x * a = tau(a_1, x_1) a_2 (x) x_2 tau(S(a_3), x_3)."""
    out: Dict[PairKey, Scalar] = {}
    right_terms = iterated_coproduct(tau.right, x)
    for (a1, a2, a3), ca in iterated_coproduct(tau.left, a):
        for (x1, x2, x3), cx in right_terms:
            front = tau(a1, x1)
            if front.is_zero:
                continue
            back = tau.inverse(a3, x3)
            if back.is_zero:
                continue
            key = (a2, x2)
            total = out.get(key, tau.field.zero) + ca * cx * front * back
            if total.is_zero:
                out.pop(key, None)
            else:
                out[key] = total
    return out


def generator_rule(tau: SkewPairing, x: Monomial, a: Monomial) -> Dict[PairKey, Scalar]:
    """The closed-form cross rule for an H_+ generator x times an H_- generator a."""
    datum = tau.datum
    left_unit, right_unit = tau.left.unit_key, tau.right.unit_key
    (v, g), (w, h) = x, a
    if v and w:
        i, j = tau.plus[v[0]], tau.minus[w[0]]
        out = {(a, x): datum.q(i, j)}
        lam = tau.links(i, j)
        if not lam.is_zero:
            out[(((), tau.gamma_prime.generator(w[0])), ((), datum.g(i)))] = lam
            out[(left_unit, right_unit)] = -lam
        return out
    if v:
        k = h.index(1)
        return {(a, x): datum.chi(tau.minus[k], datum.g(tau.plus[v[0]]))}
    if w:
        return {(a, x): datum.chi(tau.minus[w[0]], g)}
    return {(a, x): tau.field.one}


def check_double(dpres: DoublePresentation) -> CheckReport:
    """Generator products in the double against the closed-form rules and the pairing formula."""
    tau = dpres.pairing
    report = CheckReport("double product rules on generators")
    for x in _generators(tau.right):
        for a in _generators(tau.left):
            label = f"{tau.right.render_key(x)} * {tau.left.render_key(a)}"
            actual = dpres.product(x, a)
            expected = generator_rule(tau, x, a)
            report.add("RULE", label, actual == expected,
                       f"{dpres.render_factorized(actual)} != {dpres.render_factorized(expected)}")
            formula = product_formula(tau, x, a)
            report.add("PRODUCT", label, actual == formula,
                       f"{dpres.render_factorized(actual)} != {dpres.render_factorized(formula)}")
    return report


def generator_products(dpres: DoublePresentation) -> List[str]:
    """Rendered cross rules, one line per pair of generators."""
    tau = dpres.pairing
    return [f"{tau.right.render_key(x)} * {tau.left.render_key(a)} -> "
            f"{dpres.render_factorized(dpres.product(x, a))}"
            for x in _generators(tau.right) for a in _generators(tau.left)]


def centrality_report(dpres: DoublePresentation) -> CheckReport:
    """Each g_j' g_j^-1 commutes with every letter and is group-like."""
    report = CheckReport("central group-likes of the double")
    datum = dpres.datum
    one = datum.field.one
    for label, z in dpres.central_elements():
        for y in range(datum.size):
            value = datum.chi(y, z)
            report.add("CENTRAL", f"{label} vs {datum.name(y)}", value.is_one,
                       f"conjugation scales {datum.name(y)} by {value.render()}")
        m = ((), z)
        terms = dpres.hopf.coproduct_terms(m)
        report.add("GROUPLIKE", label, terms == [((m, m), one)],
                   "; ".join(f"{c.render()} [{render_monomial(datum, l)} (x) {render_monomial(datum, r)}]"
                             for (l, r), c in terms))
    return report


def quotient_central(dpres: DoublePresentation) -> HopfPresentation:
    """The double modulo g_j' = g_j, presented over Gamma."""
    report = centrality_report(dpres)
    if not report.passed:
        raise CentralityError(f"not central: {report.first_failure().line()}")
    tau = dpres.pairing
    base = tau.datum
    r1 = dpres.prime_rank
    letters = [Letter(x.name, x.component, dpres.quotient_group_map(x.g),
                      Character(base.group, x.chi.values[r1:]))
               for x in dpres.datum.letters]
    datum = YDDatum(base.field, base.group, base.components, letters)
    relations = [transfer_poly(rule.relation(), datum, dpres.quotient_group_map) for rule in dpres.pres.rules]
    return HopfPresentation(build_presentation(datum, relations, dpres.D, QUOTIENT_NAME))


def verify_double_iso(dpres: DoublePresentation, dp: DeformedPresentation, D: int) -> CheckReport:
    """Relation transport both ways between the quotient and H^lambda, and equal normal-word counts."""
    report = CheckReport(f"double quotient against H^lambda up to degree {D}")
    try:
        quotient = quotient_central(dpres)
    except CentralityError as exc:
        report.add("CENTRAL", "quotient", False, str(exc))
        return report
    Q, Hl = quotient.pres, dp.Hlambda.pres
    for rule in Hl.rules:
        residue = Q.reduce(transfer_poly(rule.relation(), Q.datum))
        report.add("REL-TRANSPORT", f"{Hl.name} {rule.render()}", residue.is_zero, residue.render())
    for rule in Q.rules:
        residue = Hl.reduce(transfer_poly(rule.relation(), Hl.datum))
        report.add("REL-TRANSPORT", f"{Q.name} {rule.render()}", residue.is_zero, residue.render())
    for n in range(D + 1):
        a, b = len(normal_words(Q, n)), len(normal_words(Hl, n))
        report.add("COUNT", f"degree {n}", a == b, f"{a} != {b}")
    return report


def _to_hlambda(dpres: DoublePresentation, dp: DeformedPresentation) -> Callable[[PairKey], NcPoly]:
    tau = dpres.pairing
    Hl = dp.Hlambda.pres
    one = tau.field.one

    def image(key: PairKey) -> NcPoly:
        a, x = key
        left = transfer_poly(NcPoly(tau.left.datum, {a: one}), Hl.datum, dpres.prime_to_gamma)
        right = transfer_poly(NcPoly(tau.right.datum, {x: one}), Hl.datum)
        return Hl.multiply(left, right)

    return image


def check_pairing_consistency(dpres: DoublePresentation, dp: DeformedPresentation) -> CheckReport:
    """
    On generator pairs of H_- (x) H_+, the pairing-deformed product pushed to
    H^lambda agrees with the product there and with the extracted deformation.
    """
    tau = dpres.pairing
    report = CheckReport("pairing cocycle against the extracted cocycle")
    sigma = cocycle_from_pairing(tau)
    extracted = extract_cocycle(dp, min(3, dp.D))
    image = _to_hlambda(dpres, dp)
    Hl, eta = dp.Hlambda.pres, dp.eta
    gens = [(a, tau.right.unit_key) for a in _generators(tau.left)]
    gens += [(tau.left.unit_key, x) for x in _generators(tau.right)]
    for u in gens:
        for v in gens:
            label = f"({tau.pairs.render_key(u)}) * ({tau.pairs.render_key(v)})"
            pushed = NcPoly(Hl.datum)
            for key, c in deformed_product(u, v, sigma).items():
                pushed = pushed + image(key).scale(c)
            expected = Hl.multiply(image(u), image(v))
            report.add("CONSISTENT", label, pushed == expected, (pushed - expected).render())
            via_extracted = NcPoly(Hl.datum)
            for m, c in eta.invert(image(u)).terms.items():
                for m2, c2 in eta.invert(image(v)).terms.items():
                    product = deformed_product(m, m2, extracted, dp.H)
                    via_extracted = via_extracted + eta(product).scale(c * c2)
            report.add("EXTRACTED", label, pushed == via_extracted, (pushed - via_extracted).render())
    return report


def verify_double(tau: SkewPairing, dpres: DoublePresentation, dp: DeformedPresentation,
                  max_total: int = 3) -> CheckReport:
    report = CheckReport(f"double up to total degree {max_total}")
    report.extend(check_pairing(tau, max_total))
    report.extend(check_pairing_admissibility(tau))
    report.extend(check_cocycle(cocycle_from_pairing(tau), pairing_basis(tau, max_total), max_total))
    report.extend(check_double(dpres))
    report.extend(centrality_report(dpres))
    report.extend(check_pairing_consistency(dpres, dp))
    report.extend(verify_double_iso(dpres, dp, min(dpres.D, dp.D)))
    return report
