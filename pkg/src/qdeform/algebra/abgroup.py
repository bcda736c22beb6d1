"""
Finitely generated abelian groups, their elements and characters.

Group elements are plain exponent tuples (free coordinates first, then
torsion coordinates reduced modulo their order) so they can be hashed and
compared cheaply inside monomials.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .report import QDeformError
from .scalars import Scalar, ScalarField

GroupElement = Tuple[int, ...]


class GroupError(QDeformError):
    """Base class for group errors."""
    pass


class GroupMismatchError(GroupError):
    """Raised when elements of different groups are combined."""
    pass


class CharacterError(GroupError):
    """Raised when character values are inconsistent with the group."""
    pass


@dataclass(frozen=True)
class GroupSpec:
    """Z^free_rank x Z/n_1 x ... x Z/n_k with named generators."""
    free_names: Tuple[str, ...] = ()
    torsion: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        names = self.names
        if len(set(names)) != len(names):
            raise GroupError(f"duplicate generator names in {names}")
        for name, order in self.torsion:
            if order < 2:
                raise GroupError(f"torsion order of {name} must be >= 2, got {order}")

    @property
    def free_rank(self) -> int:
        return len(self.free_names)

    @property
    def torsion_orders(self) -> Tuple[int, ...]:
        return tuple(order for _, order in self.torsion)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.free_names + tuple(name for name, _ in self.torsion)

    @property
    def rank(self) -> int:
        return len(self.free_names) + len(self.torsion)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GroupError(f"unknown group generator {name!r}") from None

    def generator(self, name_or_index) -> GroupElement:
        i = self.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        exps = [0] * self.rank
        exps[i] = 1
        return self.element(exps)

    def generators(self) -> List[GroupElement]:
        return [self.generator(i) for i in range(self.rank)]

    def element(self, exponents: Sequence[int]) -> GroupElement:
        if len(exponents) != self.rank:
            raise GroupMismatchError(
                f"expected {self.rank} exponents for {self}, got {len(exponents)}")
        free = self.free_rank
        return tuple(int(e) if i < free else int(e) % self.torsion[i - free][1]
                     for i, e in enumerate(exponents))

    def from_powers(self, powers: Dict[str, int]) -> GroupElement:
        exps = [0] * self.rank
        for name, power in powers.items():
            exps[self.index(name)] += power
        return self.element(exps)

    def _check(self, a: GroupElement) -> None:
        if len(a) != self.rank:
            raise GroupMismatchError(f"{a} is not an element of {self}")

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a)
        self._check(b)
        return self.element([x + y for x, y in zip(a, b)])

    def inverse(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return self.element([-x for x in a])

    def power(self, a: GroupElement, n: int) -> GroupElement:
        return self.element([x * n for x in a])

    def is_identity(self, a: GroupElement) -> bool:
        return not any(a)

    def render(self, a: GroupElement) -> str:
        parts = []
        for name, e in zip(self.names, a):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def elements_up_to(self, bound: int) -> List[GroupElement]:
        """All elements with free exponents in [-bound, bound] and every torsion residue."""
        ranges = [range(-bound, bound + 1)] * self.free_rank + [range(n) for n in self.torsion_orders]
        out: List[GroupElement] = [()]
        for r in ranges:
            out = [prefix + (e,) for prefix in out for e in r]
        return out

    def __str__(self):
        parts = list(self.free_names) + [f"{n}:{o}" for n, o in self.torsion]
        return f"Group({', '.join(parts)})"


def group_op(spec: GroupSpec, a: GroupElement, b: Optional[GroupElement], op: str) -> GroupElement:
    if op == "mul":
        return spec.mul(a, b)
    if op == "inverse":
        return spec.inverse(a)
    raise GroupError(f"unknown group operation {op!r}")


@dataclass(frozen=True)
class Character:
    """A character Gamma -> k^x, given by its values on the generators."""
    group: GroupSpec
    values: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.values) != self.group.rank:
            raise CharacterError(
                f"character needs {self.group.rank} values for {self.group}, got {len(self.values)}")
        free = self.group.free_rank
        for (name, order), value in zip(self.group.torsion, self.values[free:]):
            if value ** order != 1:
                raise CharacterError(
                    f"value {value.render()} on {name} is not a root of unity of order {order}")
        for name, value in zip(self.group.names, self.values):
            if value.is_zero:
                raise CharacterError(f"character value on {name} must be invertible")

    @classmethod
    def trivial(cls, group: GroupSpec, scalars: ScalarField) -> "Character":
        return cls(group, tuple(scalars.one for _ in range(group.rank)))

    @property
    def field(self) -> ScalarField:
        return self.values[0].field if self.values else None

    def __call__(self, g: GroupElement) -> Scalar:
        return char_eval(self, g)

    def __mul__(self, other: "Character") -> "Character":
        if other.group != self.group:
            raise GroupMismatchError("characters on different groups")
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def inverse(self) -> "Character":
        return Character(self.group, tuple(v.inverse() for v in self.values))

    def is_trivial(self) -> bool:
        return all(v.is_one for v in self.values)

    def render(self) -> str:
        return "[" + ", ".join(v.render() for v in self.values) + "]"


def char_eval(chi: Character, g: GroupElement, scalars: Optional[ScalarField] = None) -> Scalar:
    """Product over generators of value^exponent."""
    if len(g) != chi.group.rank:
        raise GroupMismatchError(f"{g} is not an element of {chi.group}")
    result = None
    for value, e in zip(chi.values, g):
        if e:
            term = value ** e
            result = term if result is None else result * term
    if result is None:
        if scalars is None and not chi.values:
            raise CharacterError("cannot evaluate a character on the trivial group without a field")
        return (scalars or chi.field).one
    return result
