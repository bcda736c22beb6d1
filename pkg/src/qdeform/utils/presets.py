"""
Built-in jobs.

    sl2, sl2-lambda        U_q(sl2) data on Gamma = Z<K>, lambda_ef = 1/(q - q^-1)
    sl3, sl3-lambda        U_q(sl3) data with quantum Serre relations in both halves
    sl3-plus               the positive half of sl3 only
    uq-sl2-N<N>            small quantum sl2 at a primitive N-th root of unity, N odd >= 5

A ``-zero`` suffix sets every linking parameter to 0.
"""

import re
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra.abgroup import Character, GroupSpec
from ..algebra.scalars import Scalar, ScalarField, rational_function_field, specialize
from ..algebra.yd import Letter, LinkingParameters, YDDatum
from .spec_loader import JobSpec, SpecParseError

MINUS = "minus"
PLUS = "plus"
SL3_CARTAN = ((2, -1), (-1, 2))
_ROOT_OF_UNITY = re.compile(r"^uq-sl2-N(\d+)(-lambda|-zero)?$")


def _linking_value(q: Scalar) -> Scalar:
    return (q - q.inverse()).inverse()


def _sl2_letters(scalars: ScalarField, q: Scalar, group: GroupSpec,
                 convert: Callable[[Scalar], Scalar]) -> List[Letter]:
    K = group.generator("K")
    return [
        Letter("f", MINUS, K, Character(group, (convert(q ** -2),))),
        Letter("e", PLUS, K, Character(group, (convert(q ** 2),))),
    ]


def sl2(with_lambda: bool = True, degree: int = 6) -> JobSpec:
    scalars = rational_function_field("q")
    q = scalars.gen()
    group = GroupSpec(("K",))
    datum = YDDatum(scalars, group, (MINUS, PLUS), _sl2_letters(scalars, q, group, lambda v: v))
    links = LinkingParameters(datum)
    if with_lambda:
        links.set(datum.index("e"), datum.index("f"), _linking_value(q))
    return JobSpec("sl2" if with_lambda else "sl2-zero", datum, links, (), degree)


def sl3(with_lambda: bool = True, degree: int = 6, cartan: Sequence[Sequence[int]] = SL3_CARTAN) -> JobSpec:
    scalars = rational_function_field("q")
    q = scalars.gen()
    group = GroupSpec(("K1", "K2"))
    rank = len(cartan)
    letters = []
    for j in range(rank):
        values = tuple(q ** -cartan[i][j] for i in range(rank))
        letters.append(Letter(f"f{j + 1}", MINUS, group.generator(j), Character(group, values)))
    for j in range(rank):
        values = tuple(q ** cartan[i][j] for i in range(rank))
        letters.append(Letter(f"e{j + 1}", PLUS, group.generator(j), Character(group, values)))
    datum = YDDatum(scalars, group, (MINUS, PLUS), letters)
    links = LinkingParameters(datum)
    if with_lambda:
        for j in range(rank):
            links.set(datum.index(f"e{j + 1}"), datum.index(f"f{j + 1}"), _linking_value(q))
    relations = _serre_relations("f", cartan) + _serre_relations("e", cartan)
    return JobSpec("sl3" if with_lambda else "sl3-zero", datum, links, tuple(relations), degree)


def sl3_plus(degree: int = 6, cartan: Sequence[Sequence[int]] = SL3_CARTAN) -> JobSpec:
    scalars = rational_function_field("q")
    q = scalars.gen()
    group = GroupSpec(("K1", "K2"))
    rank = len(cartan)
    letters = [Letter(f"e{j + 1}", PLUS, group.generator(j),
                      Character(group, tuple(q ** cartan[i][j] for i in range(rank))))
               for j in range(rank)]
    datum = YDDatum(scalars, group, (PLUS,), letters)
    return JobSpec("sl3-plus", datum, LinkingParameters(datum), tuple(_serre_relations("e", cartan)), degree)


def _serre_relations(prefix: str, cartan: Sequence[Sequence[int]]) -> List[str]:
    out = []
    for i in range(len(cartan)):
        for j in range(len(cartan)):
            if i != j:
                out.append(f"serre({prefix}{i + 1}, {prefix}{j + 1}, {cartan[i][j]})")
    return out


def uq_sl2_root_of_unity(order: int, with_lambda: bool = True, degree: Optional[int] = None) -> JobSpec:
    """Small quantum sl2 at q = zeta_order: Gamma = Z/order, e^order = f^order = 0."""
    if order < 5 or order % 2 == 0:
        raise SpecParseError(f"uq-sl2 presets need an odd order >= 5, got {order}")
    generic = rational_function_field("q")
    q = generic.gen()
    scalars = specialize(q, order).field
    group = GroupSpec((), (("K", order),))
    letters = _sl2_letters(scalars, q, group, lambda v: specialize(v, order))
    datum = YDDatum(scalars, group, (MINUS, PLUS), letters)
    links = LinkingParameters(datum)
    if with_lambda:
        links.set(datum.index("e"), datum.index("f"), specialize(_linking_value(q), order))
    name = f"uq-sl2-N{order}" + ("" if with_lambda else "-zero")
    return JobSpec(name, datum, links, (f"e^{order}", f"f^{order}"), 2 * order if degree is None else degree)


_PRESETS: Dict[str, Callable[[], JobSpec]] = {
    "sl2": lambda: sl2(True),
    "sl2-lambda": lambda: sl2(True),
    "sl2-zero": lambda: sl2(False),
    "sl3": lambda: sl3(True),
    "sl3-lambda": lambda: sl3(True),
    "sl3-zero": lambda: sl3(False),
    "sl3-plus": lambda: sl3_plus(),
}


def preset_names() -> Tuple[str, ...]:
    return tuple(_PRESETS) + ("uq-sl2-N5", "uq-sl2-N5-lambda", "uq-sl2-N5-zero")


def is_preset(name: str) -> bool:
    return name in _PRESETS or _ROOT_OF_UNITY.match(name) is not None


def get_preset(name: str) -> JobSpec:
    factory = _PRESETS.get(name)
    if factory is not None:
        return factory()
    match = _ROOT_OF_UNITY.match(name)
    if match is None:
        raise SpecParseError(f"unknown preset {name!r}; known: {', '.join(preset_names())}")
    return uq_sl2_root_of_unity(int(match.group(1)), match.group(2) != "-zero")
