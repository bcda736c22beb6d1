"""
Job specifications: the sectioned config format and the JobSpec type.

A job file declares a field, a group, the component order, letters, linking
parameters and extra relations; see docs/CONFIG_FORMAT.md.
"""

import dataclasses
from dataclasses import dataclass, replace
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import aiofiles

from ..algebra.abgroup import Character, GroupSpec
from ..algebra.deform import DeformedPresentation, build_deformation
from ..algebra.double import SkewPairing
from ..algebra.freealg import NcPoly
from ..algebra.report import QDeformError
from ..algebra.scalars import ScalarField, cyclotomic_field, rational_field, rational_function_field
from ..algebra.yd import LinkingParameters, Letter, ValidationError, YDDatum, validate
from .expressions import ExpressionError, parse_group_element, parse_poly, parse_scalar

SECTIONS = ("field", "group", "components", "letter", "link", "relations", "job")
REPEATABLE = ("letter", "link")
MIN_DEGREE = 2


class SpecParseError(QDeformError):
    """Malformed job file, with a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


@dataclass
class JobSpec:
    """A validated datum with its linking parameters, relations and degree bound."""
    name: str
    datum: YDDatum
    links: LinkingParameters
    relations: Tuple[str, ...] = ()
    degree: int = 6
    shared_group: bool = False
    command: Optional[str] = None
    flags: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        if self.degree < MIN_DEGREE:
            raise SpecParseError(f"degree must be at least {MIN_DEGREE}, got {self.degree}")

    @property
    def field(self) -> ScalarField:
        return self.datum.field

    @property
    def components(self) -> Tuple[str, ...]:
        return self.datum.components

    @cached_property
    def extra(self) -> Tuple[NcPoly, ...]:
        """The relations parsed over the datum."""
        out = []
        for n, text in enumerate(self.relations, 1):
            try:
                out.append(parse_poly(text, self.datum, n))
            except ExpressionError as exc:
                raise SpecParseError(f"relation {text!r}: {exc.reason}", exc.line, exc.column) from exc
        return tuple(out)

    def deformation(self, D: Optional[int] = None) -> DeformedPresentation:
        return build_deformation(self.datum, self.links, self.extra, self.degree if D is None else D)

    def pairing(self, D: Optional[int] = None) -> SkewPairing:
        return SkewPairing.build(self.datum, self.links, self.extra, self.degree if D is None else D,
                                 self.shared_group)

    def with_degree(self, D: int) -> "JobSpec":
        return replace(self, degree=D, flags=dict(self.flags))


def reorder_components(job: JobSpec, order: Sequence[str]) -> JobSpec:
    """The same job with the component order permuted; links are re-expressed by letter name."""
    datum = job.datum.with_components(order)
    return replace(job, datum=datum, links=job.links.rebase(datum), flags=dict(job.flags))


def _split_top_level(text: str) -> List[Tuple[str, int]]:
    """Comma-separated parts outside parentheses, with their 0-based offsets."""
    parts, depth, start = [], 0, 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:pos], start))
            start = pos + 1
    parts.append((text[start:], start))
    out = []
    for part, offset in parts:
        stripped = part.strip()
        out.append((stripped, offset + len(part) - len(part.lstrip())))
    return out


@dataclass
class _Entry:
    key: str
    value: str
    line: int
    column: int


@dataclass
class _Section:
    name: str
    line: int
    entries: List[_Entry] = dataclasses.field(default_factory=list)
    lines: List[_Entry] = dataclasses.field(default_factory=list)

    def get(self, key: str) -> Optional[_Entry]:
        for entry in self.entries:
            if entry.key == key:
                return entry
        return None

    def require(self, key: str) -> _Entry:
        entry = self.get(key)
        if entry is None:
            raise SpecParseError(f"[{self.name}] needs '{key}'", self.line, 1)
        return entry


def _strip_comment(raw: str) -> str:
    pos = raw.find("#")
    return raw if pos < 0 else raw[:pos]


def _tokenize_sections(text: str) -> List[_Section]:
    sections: List[_Section] = []
    current: Optional[_Section] = None
    for number, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        if body.startswith("["):
            if not body.endswith("]"):
                raise SpecParseError("unterminated section header", number, indent + 1)
            name = body[1:-1].strip()
            if name not in SECTIONS:
                raise SpecParseError(f"unknown section [{name}]", number, indent + 2)
            if name not in REPEATABLE and any(s.name == name for s in sections):
                raise SpecParseError(f"section [{name}] declared twice", number, indent + 1)
            current = _Section(name, number)
            sections.append(current)
            continue
        if current is None:
            raise SpecParseError("content before the first section", number, indent + 1)
        if current.name == "relations":
            current.lines.append(_Entry("", body, number, indent + 1))
            continue
        eq = line.find("=")
        if eq < 0:
            raise SpecParseError("expected 'key = value'", number, indent + 1)
        key = line[:eq].strip()
        if not key:
            raise SpecParseError("missing key before '='", number, eq + 1)
        value_raw = line[eq + 1:]
        value = value_raw.strip()
        column = eq + 2 + len(value_raw) - len(value_raw.lstrip())
        if not value:
            raise SpecParseError(f"missing value for '{key}'", number, eq + 2)
        if current.get(key) is not None:
            raise SpecParseError(f"duplicate key '{key}'", number, indent + 1)
        current.entries.append(_Entry(key, value, number, column))
    return sections


def _parse_field(section: Optional[_Section]) -> ScalarField:
    if section is None:
        return rational_function_field("q")
    kind = section.require("kind")
    if kind.value == "rational":
        return rational_field()
    if kind.value == "rational-function":
        symbol = section.get("symbol")
        return rational_function_field(symbol.value if symbol else "q")
    if kind.value == "cyclotomic":
        order = section.require("order")
        if not order.value.isdigit() or int(order.value) < 2:
            raise SpecParseError(f"cyclotomic order must be an integer >= 2, got {order.value!r}",
                                 order.line, order.column)
        return cyclotomic_field(int(order.value))
    raise SpecParseError(f"unknown field kind {kind.value!r}", kind.line, kind.column)


def _parse_group(section: Optional[_Section]) -> GroupSpec:
    if section is None:
        raise SpecParseError("missing [group] section", 1, 1)
    free: List[str] = []
    torsion: List[Tuple[str, int]] = []
    entry = section.get("free")
    if entry is not None:
        free = [name for name, _ in _split_top_level(entry.value) if name]
    entry = section.get("torsion")
    if entry is not None:
        for part, offset in _split_top_level(entry.value):
            name, sep, order = part.partition(":")
            if not sep or not order.strip().isdigit():
                raise SpecParseError(f"torsion generator must read name:order, got {part!r}",
                                     entry.line, entry.column + offset)
            torsion.append((name.strip(), int(order)))
    try:
        return GroupSpec(tuple(free), tuple(torsion))
    except QDeformError as exc:
        raise SpecParseError(str(exc), section.line, 1) from exc


def _scalar(entry: _Entry, scalars: ScalarField, text: Optional[str] = None, offset: int = 0):
    try:
        return parse_scalar(entry.value if text is None else text, scalars, entry.line, entry.column + offset)
    except ExpressionError as exc:
        raise SpecParseError(exc.reason, exc.line, exc.column) from exc


def _parse_letter(section: _Section, scalars: ScalarField, group: GroupSpec, components: Sequence[str]) -> Letter:
    name = section.require("name")
    component = section.require("component")
    if component.value not in components:
        raise SpecParseError(f"undeclared component {component.value!r}", component.line, component.column)
    g_entry = section.require("g")
    try:
        g = parse_group_element(g_entry.value, group, g_entry.line, g_entry.column)
    except ExpressionError as exc:
        raise SpecParseError(exc.reason, exc.line, exc.column) from exc
    chi_entry = section.require("chi")
    parts = _split_top_level(chi_entry.value)
    if len(parts) != group.rank:
        raise SpecParseError(f"chi needs {group.rank} values, got {len(parts)}", chi_entry.line, chi_entry.column)
    values = tuple(_scalar(chi_entry, scalars, text, offset) for text, offset in parts)
    try:
        return Letter(name.value, component.value, g, Character(group, values))
    except QDeformError as exc:
        raise SpecParseError(str(exc), chi_entry.line, chi_entry.column) from exc


def parse_spec(text: str, source: str = "<spec>", default_degree: int = 6) -> JobSpec:
    """Parse and validate a job file."""
    sections = _tokenize_sections(text)
    by_name: Dict[str, List[_Section]] = {}
    for section in sections:
        by_name.setdefault(section.name, []).append(section)

    def single(name: str) -> Optional[_Section]:
        found = by_name.get(name)
        return found[0] if found else None

    scalars = _parse_field(single("field"))
    group = _parse_group(single("group"))
    comp_section = single("components")
    if comp_section is None:
        raise SpecParseError("missing [components] section", 1, 1)
    order = comp_section.require("order")
    components = [name for name, _ in _split_top_level(order.value) if name]
    letters = [_parse_letter(s, scalars, group, components) for s in by_name.get("letter", [])]
    if not letters:
        raise SpecParseError("no [letter] sections", 1, 1)
    try:
        datum = YDDatum(scalars, group, components, letters)
    except QDeformError as exc:
        raise SpecParseError(str(exc), comp_section.line, 1) from exc

    links = LinkingParameters(datum)
    for section in by_name.get("link", []):
        ends = []
        for key in ("i", "j"):
            entry = section.require(key)
            try:
                ends.append(datum.index(entry.value))
            except QDeformError as exc:
                raise SpecParseError(str(exc), entry.line, entry.column) from exc
        value = section.require("value")
        i, j = ends
        if datum.component_pos(i) == datum.component_pos(j):
            raise SpecParseError(
                f"lambda({datum.name(i)},{datum.name(j)}) links letters of the same component",
                value.line, value.column)
        links.set(i, j, _scalar(value, scalars))
    report = validate(datum, links)
    if not report.passed:
        raise ValidationError(report)

    relations: List[str] = []
    relation_lines: List[_Entry] = []
    rel_section = single("relations")
    if rel_section is not None:
        relation_lines = rel_section.lines
        relations = [entry.value for entry in relation_lines]

    degree, shared = default_degree, False
    job_section = single("job")
    if job_section is not None:
        entry = job_section.get("degree")
        if entry is not None:
            if not entry.value.isdigit():
                raise SpecParseError(f"degree must be an integer, got {entry.value!r}", entry.line, entry.column)
            degree = int(entry.value)
            if degree < MIN_DEGREE:
                raise SpecParseError(f"degree must be at least {MIN_DEGREE}, got {degree}", entry.line, entry.column)
        entry = job_section.get("shared_group")
        if entry is not None:
            if entry.value not in ("true", "false"):
                raise SpecParseError(f"shared_group must be true or false, got {entry.value!r}",
                                     entry.line, entry.column)
            shared = entry.value == "true"

    job = JobSpec(Path(source).stem if source != "<spec>" else source, datum, links,
                  tuple(relations), degree, shared)
    for entry in relation_lines:
        try:
            parse_poly(entry.value, datum, entry.line, entry.column)
        except ExpressionError as exc:
            raise SpecParseError(exc.reason, exc.line, exc.column) from exc
    return job


def _resolve_preset(name: str) -> Optional[JobSpec]:
    from .presets import get_preset, is_preset
    return get_preset(name) if is_preset(name) else None


def load_spec(path_or_name: str, default_degree: int = 6) -> JobSpec:
    """A preset by name, or a job file by path."""
    preset = _resolve_preset(path_or_name)
    if preset is not None:
        return preset
    path = Path(path_or_name)
    if not path.is_file():
        raise SpecParseError(f"{path_or_name!r} is neither a preset nor a readable file", 1, 1)
    return parse_spec(path.read_text(encoding="utf-8"), str(path), default_degree)


async def load_spec_async(path_or_name: str, default_degree: int = 6) -> JobSpec:
    preset = _resolve_preset(path_or_name)
    if preset is not None:
        return preset
    path = Path(path_or_name)
    if not path.is_file():
        raise SpecParseError(f"{path_or_name!r} is neither a preset nor a readable file", 1, 1)
    async with aiofiles.open(path, "r", encoding="utf-8") as handle:
        text = await handle.read()
    return parse_spec(text, str(path), default_degree)
