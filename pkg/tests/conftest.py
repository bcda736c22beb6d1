"""
Pytest configuration and fixtures for qdeform tests
"""

import logging
import sys
from pathlib import Path

import pytest
from sympy.polys.matrices import DomainMatrix

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.qdeform.algebra.abgroup import Character, GroupSpec
from src.qdeform.algebra.freealg import NcPoly, multidegree, nc_mul, words_of_length
from src.qdeform.algebra.scalars import rational_function_field
from src.qdeform.algebra.yd import Letter, LinkingParameters, YDDatum
from src.qdeform.utils.presets import get_preset

EXAMPLES_DIR = ROOT / "docs" / "examples"


@pytest.fixture(scope="session")
def qfield():
    return rational_function_field("q")


@pytest.fixture(scope="session")
def q(qfield):
    return qfield.gen()


@pytest.fixture(scope="session")
def sl2_job():
    return get_preset("sl2")


@pytest.fixture(scope="session")
def sl2_zero_job():
    return get_preset("sl2-zero")


@pytest.fixture(scope="session")
def sl3_job():
    return get_preset("sl3")


@pytest.fixture(scope="session")
def sl3_plus_job():
    return get_preset("sl3-plus")


@pytest.fixture(scope="session")
def uq5_job():
    return get_preset("uq-sl2-N5")


@pytest.fixture(scope="session")
def sl2_dp(sl2_job):
    """The sl2 deformation completed to degree 6."""
    return sl2_job.deformation(6)


@pytest.fixture(scope="session")
def uq5_dp(uq5_job):
    return uq5_job.deformation(10)


@pytest.fixture(scope="session")
def sl2_linking_value(q):
    return (q - q.inverse()).inverse()


@pytest.fixture
def tampered_datum(qfield, q):
    """f and e on Z<K> x Z<L> whose characters do not multiply to the trivial one."""
    group = GroupSpec(("K", "L"))
    letters = [
        Letter("f", "minus", group.generator("L"), Character(group, (qfield.one, q ** -2))),
        Letter("e", "plus", group.generator("K"), Character(group, (q ** 2, qfield.one))),
    ]
    return YDDatum(qfield, group, ("minus", "plus"), letters)


@pytest.fixture
def tampered_links(tampered_datum):
    links = LinkingParameters(tampered_datum)
    links.set(tampered_datum.index("e"), tampered_datum.index("f"), 1)
    return links


@pytest.fixture(scope="session")
def quotient_dims():
    """
    Dense linear-algebra dimensions of T(V)/(relations) in degrees 0..n_max.

    dim T(V)(n) minus the rank of the span of m*r*m' over words m, m' and the
    given multihomogeneous, group-free relations r, computed block by block
    over letter multidegrees.
    """

    def dims(datum, relations, n_max):
        out = []
        for n in range(n_max + 1):
            columns = {}
            for word in words_of_length(datum, n):
                block = columns.setdefault(multidegree(datum, word), {})
                block[word] = len(block)
            rows = {key: [] for key in columns}
            for relation in relations:
                d = relation.degree
                for k in range(n - d + 1):
                    for left in words_of_length(datum, k):
                        for right in words_of_length(datum, n - d - k):
                            p = nc_mul(nc_mul(NcPoly.monomial(datum, left), relation), NcPoly.monomial(datum, right))
                            if p.is_zero:
                                continue
                            key = multidegree(datum, next(iter(p.terms))[0])
                            rows[key].append({columns[key][w]: c.raw for (w, _), c in p.terms.items()})
            total = 0
            for key, block in columns.items():
                rank = 0
                if rows[key]:
                    matrix = DomainMatrix(dict(enumerate(rows[key])), (len(rows[key]), len(block)),
                                          datum.field.domain)
                    rank = matrix.rank()
                total += len(block) - rank
            out.append(total)
        return out

    return dims


@pytest.fixture
def example_path():
    def resolve(name: str) -> Path:
        return EXAMPLES_DIR / name
    return resolve


@pytest.fixture
def logger():
    """A logger with the aiologger coroutine interface that records its messages."""

    class MockLogger:
        def __init__(self, name):
            self.name = name
            self.messages = []
            self._std_logger = logging.getLogger(name)
            self._std_logger.setLevel(logging.DEBUG)

        async def _log(self, level, msg, *args, **kwargs):
            self.messages.append((level, msg))
            self._std_logger.log(getattr(logging, level), msg, *args, **kwargs)

        async def info(self, msg, *args, **kwargs):
            await self._log("INFO", msg, *args, **kwargs)

        async def error(self, msg, *args, **kwargs):
            await self._log("ERROR", msg, *args, **kwargs)

        async def debug(self, msg, *args, **kwargs):
            await self._log("DEBUG", msg, *args, **kwargs)

        async def warning(self, msg, *args, **kwargs):
            await self._log("WARNING", msg, *args, **kwargs)

        async def shutdown(self):
            pass

    return MockLogger("qdeform-test")
