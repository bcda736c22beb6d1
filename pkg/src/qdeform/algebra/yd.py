"""
Yetter-Drinfeld data of diagonal type.

A datum is a finite list of letters x_i, each carrying a component label,
a group element g_i and a character chi_i of the abelian group Gamma. The
braiding matrix is q_ij = chi_j(g_i). Linking parameters attach scalars to
cross-component letter pairs.
"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .abgroup import Character, GroupElement, GroupSpec, char_eval
from .report import QDeformError, ValidationReport
from .scalars import Scalar, ScalarField


class DatumError(QDeformError):
    """Base class for datum construction errors."""
    pass


class ValidationError(DatumError):
    """Raised by loaders when validate() fails; carries the report."""

    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


class Letter:
    """A letter x_i with component label, coweight g_i and weight chi_i."""

    __slots__ = ("name", "component", "g", "chi")

    def __init__(self, name: str, component: str, g: GroupElement, chi: Character):
        self.name = name
        self.component = component
        self.g = g
        self.chi = chi

    def __repr__(self):
        return f"Letter({self.name!r}, {self.component!r})"


class YDDatum:
    """Letters over a common group and field, with an ordered component list."""

    def __init__(self, scalars: ScalarField, group: GroupSpec,
                 components: Sequence[str], letters: Sequence[Letter]):
        self.field = scalars
        self.group = group
        self.components = tuple(components)
        self.letters = tuple(letters)
        names = [x.name for x in self.letters]
        if len(set(names)) != len(names):
            raise DatumError(f"duplicate letter names in {names}")
        clash = set(names) & set(group.names)
        if clash:
            raise DatumError(f"letter names clash with group generators: {sorted(clash)}")
        if len(set(self.components)) != len(self.components):
            raise DatumError(f"duplicate component labels in {self.components}")
        for x in self.letters:
            if x.component not in self.components:
                raise DatumError(f"letter {x.name} uses undeclared component {x.component!r}")
            if x.chi.group != group or len(x.g) != group.rank:
                raise DatumError(f"letter {x.name} is not defined over {group}")
            for value in x.chi.values:
                if value.field is not scalars:
                    raise DatumError(f"character of {x.name} has values outside {scalars}")
        self._index = {name: i for i, name in enumerate(names)}
        self._component_pos = tuple(self.components.index(x.component) for x in self.letters)
        # deglex rank of each letter: component position first, declaration index second
        order = sorted(range(len(self.letters)), key=lambda i: (self._component_pos[i], i))
        self._rank = tuple(order.index(i) for i in range(len(self.letters)))
        self._chi_cache: Dict[Tuple[int, GroupElement], Scalar] = {}
        self._q = [[self.chi(j, x.g) for j in range(len(self.letters))] for x in self.letters]

    @property
    def size(self) -> int:
        return len(self.letters)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DatumError(f"unknown letter {name!r}") from None

    def name(self, i: int) -> str:
        return self.letters[i].name

    def component_pos(self, i: int) -> int:
        return self._component_pos[i]

    def rank(self, i: int) -> int:
        return self._rank[i]

    def g(self, i: int) -> GroupElement:
        return self.letters[i].g

    def chi(self, i: int, g: GroupElement) -> Scalar:
        """chi_i(g), memoized."""
        key = (i, g)
        value = self._chi_cache.get(key)
        if value is None:
            value = char_eval(self.letters[i].chi, g, self.field)
            self._chi_cache[key] = value
        return value

    def q(self, i: int, j: int) -> Scalar:
        return self._q[i][j]

    def letters_in(self, component: str) -> List[int]:
        return [i for i, x in enumerate(self.letters) if x.component == component]

    def with_components(self, components: Sequence[str]) -> "YDDatum":
        if sorted(components) != sorted(self.components):
            raise DatumError(f"{list(components)} is not a permutation of {list(self.components)}")
        return YDDatum(self.field, self.group, components, self.letters)

    def restrict(self, component_labels: Iterable[str]) -> "YDDatum":
        """Sub-datum on the letters of the given components."""
        labels = [c for c in self.components if c in set(component_labels)]
        letters = [x for x in self.letters if x.component in labels]
        return YDDatum(self.field, self.group, labels, letters)

    def __repr__(self):
        return f"YDDatum({[x.name for x in self.letters]}, components={list(self.components)})"


def braiding_matrix(datum: YDDatum) -> List[List[Scalar]]:
    return [[datum.q(i, j) for j in range(datum.size)] for i in range(datum.size)]


class LinkingParameters:
    """
    Scalars lambda_ij on cross-component pairs, stored for comp(i) > comp(j).

    The opposite value is derived on demand as lambda_ji = -q_ji * lambda_ij.
    """

    def __init__(self, datum: YDDatum, values: Optional[Mapping[Tuple[int, int], Scalar]] = None):
        self.datum = datum
        self._values: Dict[Tuple[int, int], Scalar] = {}
        for (i, j), value in (values or {}).items():
            self.set(i, j, value)

    @classmethod
    def zero(cls, datum: YDDatum) -> "LinkingParameters":
        return cls(datum)

    def set(self, i: int, j: int, value: Scalar) -> None:
        value = self.datum.field(value)
        pi, pj = self.datum.component_pos(i), self.datum.component_pos(j)
        if pi < pj:
            # given lambda_ij for the lower letter i; store lambda_ji = -lambda_ij / q_ij
            i, j, value = j, i, -value / self.datum.q(i, j)
        if value.is_zero:
            self._values.pop((i, j), None)
        else:
            self._values[(i, j)] = value

    def __call__(self, i: int, j: int) -> Scalar:
        datum = self.datum
        if (i, j) in self._values:
            return self._values[(i, j)]
        if (j, i) in self._values and datum.component_pos(i) < datum.component_pos(j):
            return -datum.q(i, j) * self._values[(j, i)]
        return datum.field.zero

    def items(self) -> List[Tuple[Tuple[int, int], Scalar]]:
        return sorted(self._values.items())

    def is_zero(self) -> bool:
        return not self._values

    def scaled(self, factor) -> "LinkingParameters":
        return LinkingParameters(self.datum, {k: v * factor for k, v in self._values.items()})

    def rebase(self, datum: YDDatum) -> "LinkingParameters":
        """Same values by letter name over a datum with permuted components."""
        out = LinkingParameters(datum)
        for (i, j), value in self._values.items():
            out.set(datum.index(self.datum.name(i)), datum.index(self.datum.name(j)), value)
        return out

    def render(self) -> List[str]:
        return [f"lambda({self.datum.name(i)}, {self.datum.name(j)}) = {v.render()}"
                for (i, j), v in self.items()]


def validate(datum: YDDatum, links: Optional[LinkingParameters] = None) -> ValidationReport:
    """Cross-component symmetry and linking admissibility."""
    report = ValidationReport()
    n = datum.size
    for i in range(n):
        for j in range(i + 1, n):
            if datum.component_pos(i) == datum.component_pos(j):
                continue
            prod = datum.q(i, j) * datum.q(j, i)
            if not prod.is_one:
                report.fail("symmetry",
                            f"q({datum.name(i)},{datum.name(j)}) * q({datum.name(j)},{datum.name(i)}) = "
                            f"{prod.render()}, expected 1")
    if links is not None:
        for (i, j), value in links.items():
            if datum.component_pos(i) == datum.component_pos(j):
                report.fail("linking",
                            f"lambda({datum.name(i)},{datum.name(j)}) = {value.render()} links letters "
                            f"of the same component")
                continue
            weight = datum.letters[i].chi * datum.letters[j].chi
            if not weight.is_trivial():
                report.fail("linking",
                            f"lambda({datum.name(i)},{datum.name(j)}) = {value.render()} but "
                            f"chi_{datum.name(i)}*chi_{datum.name(j)} = {weight.render()} is not trivial "
                            f"(lambda_ij must vanish unless chi_i*chi_j = 1)")
    return report


class Bicharacter:
    """beta on Gamma x Gamma given on generator pairs."""

    def __init__(self, group: GroupSpec, table: Mapping[Tuple[int, int], Scalar], scalars: ScalarField):
        self.group = group
        self.field = scalars
        self.table = {(a, b): scalars(v) for (a, b), v in table.items()}
        self._check()

    def _check(self) -> None:
        free = self.group.free_rank
        for (a, b), value in self.table.items():
            if value.is_zero:
                raise DatumError(f"bicharacter value on ({a},{b}) must be invertible")
            for slot in (a, b):
                if slot >= free:
                    order = self.group.torsion[slot - free][1]
                    if value ** order != 1:
                        raise DatumError(
                            f"bicharacter value {value.render()} on ({a},{b}) is not multiplicative "
                            f"on a generator of order {order}")

    def __call__(self, g: GroupElement, h: GroupElement) -> Scalar:
        result = self.field.one
        for (a, b), value in self.table.items():
            e = g[a] * h[b]
            if e:
                result = result * value ** e
        return result


def twist_datum(datum: YDDatum, beta: Bicharacter) -> YDDatum:
    """Replace chi_i by chi_i^beta(h) = beta(h, g_i) beta(g_i, h)^-1 chi_i(h)."""
    if beta.group != datum.group:
        raise DatumError("bicharacter is defined on a different group")
    letters = []
    for i, x in enumerate(datum.letters):
        values = []
        for gen in datum.group.generators():
            values.append(beta(gen, x.g) / beta(x.g, gen) * datum.chi(i, gen))
        letters.append(Letter(x.name, x.component, x.g, Character(datum.group, tuple(values))))
    return YDDatum(datum.field, datum.group, datum.components, letters)
