"""
Degree-bounded noncommutative rewriting.

A presentation is a list of rules ``lhs -> rhs`` where lhs is a group-free
word and every rhs term is deglex-smaller than lhs. Normal forms are computed
by rewriting the leftmost occurrence of a left-hand side (the longest one at
that position) until no left-hand side occurs. Completion resolves overlap
ambiguities up to a degree bound and records that bound as the validated
confluence degree.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .abgroup import Character
from .freealg import (Monomial, NcPoly, Word, deglex_key, nc_mul,
                      render_word, straighten_factor)
from .report import CheckReport, QDeformError
from .yd import YDDatum


class RewriteError(QDeformError):
    """Base class for rewriting errors."""
    pass


class OrientationError(RewriteError):
    """Raised when a relation cannot be oriented as a word rule."""
    pass


class CompletionError(RewriteError):
    """Raised when completion meets a relation it cannot orient."""
    pass


class DegreeBoundError(RewriteError):
    """Raised when a degree exceeds the validated confluence bound."""
    pass


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NcPoly

    def relation(self) -> NcPoly:
        datum = self.rhs.datum
        return NcPoly.monomial(datum, self.lhs) - self.rhs

    def render(self) -> str:
        return f"{render_word(self.rhs.datum, self.lhs)} -> {self.rhs.render()}"


def orient(relation: NcPoly) -> RewriteRule:
    """Turn relation = 0 into lhs -> rhs with lhs its deglex-leading word."""
    if relation.is_zero:
        raise OrientationError("cannot orient the zero relation")
    datum = relation.datum
    (word, g), coeff = relation.leading()
    if not datum.group.is_identity(g):
        raise OrientationError(
            f"leading monomial {render_word(datum, word) or '1'}*{datum.group.render(g)} "
            f"carries a nontrivial group element")
    if not word:
        raise OrientationError(f"relation {relation.render()} would make a group-algebra element vanish")
    rest = relation - NcPoly.monomial(datum, word, None, coeff)
    for w, _ in rest.terms:
        if w == word:
            raise OrientationError(
                f"relation {relation.render()} has several group parts on its leading word")
    return RewriteRule(word, rest.scale(-coeff.inverse()))


def _contains(word: Word, sub: Word) -> bool:
    n = len(sub)
    return any(word[k:k + n] == sub for k in range(len(word) - n + 1))


class Presentation:
    """
    A quotient of T(V) # k[Gamma] given by rewrite rules.

    Instances are immutable; the normal-form memo is internal.
    """

    def __init__(self, datum: YDDatum, rules: Sequence[RewriteRule] = (),
                 confluence_checked_to: Optional[int] = None, name: str = ""):
        self.datum = datum
        self.rules: Tuple[RewriteRule, ...] = tuple(rules)
        self.confluence_checked_to = confluence_checked_to
        self.name = name
        self._by_lhs: Dict[Word, RewriteRule] = {}
        for rule in self.rules:
            if rule.lhs in self._by_lhs:
                raise RewriteError(f"duplicate rule for {render_word(datum, rule.lhs)}")
            if rule.rhs.datum is not datum:
                raise RewriteError("rule right-hand side over a different datum")
            self._by_lhs[rule.lhs] = rule
        self._lengths = sorted({len(lhs) for lhs in self._by_lhs}, reverse=True)
        self._memo: Dict[Word, NcPoly] = {}

    @classmethod
    def free(cls, datum: YDDatum, name: str = "T(V)") -> "Presentation":
        return cls(datum, (), None, name)

    def with_rules(self, rules: Sequence[RewriteRule], confluence_checked_to: Optional[int] = None,
                   name: Optional[str] = None) -> "Presentation":
        return Presentation(self.datum, rules, confluence_checked_to,
                            self.name if name is None else name)

    @property
    def max_rule_degree(self) -> int:
        return max((len(rule.lhs) for rule in self.rules), default=0)

    def rule_for(self, lhs: Word) -> Optional[RewriteRule]:
        return self._by_lhs.get(lhs)

    def find_occurrence(self, word: Word) -> Optional[Tuple[int, RewriteRule]]:
        """Leftmost position of a rule lhs in word, longest lhs at that position."""
        for pos in range(len(word)):
            for length in self._lengths:
                if pos + length <= len(word):
                    rule = self._by_lhs.get(word[pos:pos + length])
                    if rule is not None:
                        return pos, rule
        return None

    def is_normal(self, word: Word) -> bool:
        return self.find_occurrence(word) is None

    def _word_normal_form(self, word: Word) -> NcPoly:
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        datum = self.datum
        hit = self.find_occurrence(word)
        if hit is None:
            result = NcPoly.monomial(datum, word)
        else:
            pos, rule = hit
            prefix, suffix = word[:pos], word[pos + len(rule.lhs):]
            result = NcPoly(datum)
            for (w, g), c in rule.rhs.terms.items():
                # prefix * (w, g) * suffix = chi_suffix(g) * (prefix w suffix, g)
                factor = c * straighten_factor(datum, g, suffix)
                inner = self._word_normal_form(prefix + w + suffix)
                for (w2, g2), c2 in inner.terms.items():
                    result.add_term((w2, datum.group.mul(g2, g)), factor * c2)
        self._memo[word] = result
        return result

    def reduce_monomial(self, m: Monomial) -> NcPoly:
        """Normal form of a single monomial (word, g)."""
        word, g = m
        nf = self._word_normal_form(word)
        if self.datum.group.is_identity(g):
            return nf
        mul = self.datum.group.mul
        return NcPoly(self.datum, {(w2, mul(g2, g)): c2 for (w2, g2), c2 in nf.terms.items()})

    def reduce(self, p: NcPoly) -> NcPoly:
        if p.datum is not self.datum:
            raise RewriteError("cannot reduce a polynomial over a different datum")
        datum = self.datum
        out = NcPoly(datum)
        for (word, g), c in p.terms.items():
            for (w2, g2), c2 in self._word_normal_form(word).terms.items():
                out.add_term((w2, datum.group.mul(g2, g)), c * c2)
        return out

    def multiply(self, p: NcPoly, r: NcPoly) -> NcPoly:
        return self.reduce(nc_mul(p, r))

    def normal_words(self, n: int) -> List[Word]:
        return normal_words(self, n)

    def render_rules(self) -> List[str]:
        return [rule.render() for rule in self.rules]

    def __repr__(self):
        return f"Presentation({self.name!r}, {len(self.rules)} rules, D={self.confluence_checked_to})"


def reduce(p: NcPoly, pres: Presentation) -> NcPoly:
    return pres.reduce(p)


def _rule_sort_key(datum: YDDatum, rule: RewriteRule):
    return deglex_key(datum, (rule.lhs, datum.group.identity))


def interreduce(datum: YDDatum, relations: Iterable[NcPoly]) -> List[RewriteRule]:
    """
    Orient relations into a rule set with no lhs containing another lhs.

    A relation whose reduced leading monomial carries a group part raises
    OrientationError.
    """
    pending = deque(relations)
    current: List[RewriteRule] = []
    while pending:
        relation = pending.popleft()
        reduced = Presentation(datum, current).reduce(relation)
        if reduced.is_zero:
            continue
        rule = orient(reduced)
        keep = []
        for old in current:
            if _contains(old.lhs, rule.lhs):
                pending.append(old.relation())
            else:
                keep.append(old)
        current = keep + [rule]
    full = Presentation(datum, current)
    final = [RewriteRule(rule.lhs, full.reduce(rule.rhs)) for rule in current]
    return sorted(final, key=lambda rule: _rule_sort_key(datum, rule))


@dataclass(frozen=True)
class Overlap:
    first: Word
    second: Word
    shared: int

    @property
    def word(self) -> Word:
        return self.first + self.second[self.shared:]


def overlaps(pres: Presentation, max_length: int) -> List[Overlap]:
    """Suffix/prefix overlaps of rule pairs (self-overlaps included), by length then rule order."""
    found = []
    lhss = [rule.lhs for rule in pres.rules]
    for a in lhss:
        for b in lhss:
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k:] == b[:k] and len(a) + len(b) - k <= max_length:
                    if a == b and k == len(a):
                        continue
                    found.append(Overlap(a, b, k))
    found.sort(key=lambda o: len(o.word))
    return found


def resolve_overlap(pres: Presentation, overlap: Overlap) -> Tuple[NcPoly, NcPoly]:
    """Normal forms of the overlap word after applying the first, resp. second, rule."""
    datum = pres.datum
    first = pres.rule_for(overlap.first)
    second = pres.rule_for(overlap.second)
    head = overlap.first[:len(overlap.first) - overlap.shared]
    tail = overlap.second[overlap.shared:]
    left = nc_mul(first.rhs, NcPoly.monomial(datum, tail))
    right = nc_mul(NcPoly.monomial(datum, head), second.rhs)
    return pres.reduce(left), pres.reduce(right)


def complete(pres: Presentation, D: int) -> Presentation:
    """Resolve all overlaps of length <= D, adding rules until a full pass adds none."""
    if D < pres.max_rule_degree:
        raise DegreeBoundError(f"completion bound {D} is below the rule degree {pres.max_rule_degree}")
    datum = pres.datum
    rules = interreduce(datum, [rule.relation() for rule in pres.rules])
    current = Presentation(datum, rules, None, pres.name)
    while True:
        added = False
        queue = deque(overlaps(current, D))
        while queue:
            overlap = queue.popleft()
            if current.rule_for(overlap.first) is None or current.rule_for(overlap.second) is None:
                continue
            left, right = resolve_overlap(current, overlap)
            difference = current.reduce(left - right)
            if difference.is_zero:
                continue
            try:
                relations = [rule.relation() for rule in current.rules] + [difference]
                rules = interreduce(datum, relations)
            except OrientationError as exc:
                raise CompletionError(
                    f"overlap {render_word(datum, overlap.word)} produced an unorientable relation: {exc}"
                ) from exc
            current = Presentation(datum, rules, None, pres.name)
            added = True
        if not added:
            break
    return Presentation(datum, current.rules, D, pres.name)


def check_confluence(pres: Presentation, D: int) -> CheckReport:
    """Every overlap word of length <= D resolves to one normal form."""
    report = CheckReport(f"confluence {pres.name or 'presentation'} up to degree {D}")
    for overlap in overlaps(pres, D):
        left, right = resolve_overlap(pres, overlap)
        residue = left - right
        report.add("CONFLUENCE", render_word(pres.datum, overlap.word), residue.is_zero, residue.render())
    if not report.entries:
        report.note("CONFLUENCE", "-", "no overlaps")
    return report


def normal_words(pres: Presentation, n: int) -> List[Word]:
    """Degree-n words containing no rule lhs, in deglex order."""
    bound = pres.confluence_checked_to
    if bound is None or n > bound:
        raise DegreeBoundError(
            f"degree {n} exceeds the validated confluence bound {bound} of {pres.name or 'presentation'}")
    datum = pres.datum
    letters = sorted(range(datum.size), key=datum.rank)
    suffix_rules = set(pres._by_lhs)
    lengths = sorted({len(lhs) for lhs in suffix_rules})
    out: List[Word] = []

    def extend(word: Word) -> None:
        if len(word) == n:
            out.append(word)
            return
        for x in letters:
            candidate = word + (x,)
            if any(len(candidate) >= k and candidate[-k:] in suffix_rules for k in lengths):
                continue
            extend(candidate)

    extend(())
    return out


def word_weight(datum: YDDatum, word: Word) -> Character:
    chi = Character.trivial(datum.group, datum.field)
    for x in word:
        chi = chi * datum.letters[x].chi
    return chi


def weight_defects(pres: Presentation) -> List[Tuple[RewriteRule, Monomial]]:
    """Rules with an rhs term whose conjugation weight differs from the lhs weight."""
    datum = pres.datum
    defects = []
    for rule in pres.rules:
        target = word_weight(datum, rule.lhs)
        for m in rule.rhs.monomials():
            if word_weight(datum, m[0]).values != target.values:
                defects.append((rule, m))
    return defects
