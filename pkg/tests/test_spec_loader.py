"""
Tests for the job file format and loader
"""

import textwrap

import pytest

from src.qdeform.algebra.yd import ValidationError
from src.qdeform.utils.spec_loader import (JobSpec, SpecParseError, load_spec, load_spec_async, parse_spec,
                                           reorder_components)

HEADER = """\
[group]
free = K
[components]
order = minus, plus
"""

LETTERS = """\
[letter]
name = f
component = minus
g = K
chi = q^-2
[letter]
name = e
component = plus
g = K
chi = q^2
"""


def spec(*parts: str) -> str:
    return "".join(textwrap.dedent(part) for part in parts)


class TestParseSpec:

    def test_sl2_file(self, example_path, qfield, sl2_linking_value):
        job = load_spec(str(example_path("sl2.qd")))
        assert job.name == "sl2"
        assert job.field is qfield
        assert job.components == ("minus", "plus")
        assert [x.name for x in job.datum.letters] == ["f", "e"]
        assert job.degree == 6
        assert job.links(job.datum.index("e"), job.datum.index("f")) == sl2_linking_value

    def test_default_degree_applies_without_a_job_section(self):
        job = parse_spec(spec(HEADER, LETTERS), default_degree=4)
        assert job.degree == 4
        assert job.relations == ()
        assert job.shared_group is False

    def test_relations_are_parsed_over_the_datum(self, example_path):
        job = load_spec(str(example_path("uq-sl2-N5.qd")))
        assert job.relations == ("e^5", "f^5")
        assert len(job.extra) == 2
        assert job.datum.group.names == ("K",)

    def test_shared_group_flag(self):
        job = parse_spec(spec(HEADER, LETTERS, "[job]\nshared_group = true\n"))
        assert job.shared_group is True

    def test_comments_and_blank_lines(self):
        job = parse_spec(spec("# leading comment\n\n", HEADER, LETTERS, "[job]\ndegree = 3  # small\n"))
        assert job.degree == 3


class TestParseErrors:

    def test_unknown_group_generator(self):
        text = spec(HEADER, "[letter]\nname = f\ncomponent = minus\ng = K3\nchi = q^-2\n")
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(text)
        assert (excinfo.value.line, excinfo.value.column) == (8, 5)
        assert excinfo.value.reason == "unknown group generator 'K3'"

    def test_bad_chi_arity(self):
        text = spec(HEADER, "[letter]\nname = f\ncomponent = minus\ng = K\nchi = q^2, 1\n")
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(text)
        assert excinfo.value.reason == "chi needs 1 values, got 2"
        assert excinfo.value.line == 9

    def test_bad_scalar_column(self):
        text = spec(HEADER, "[letter]\nname = f\ncomponent = minus\ng = K\nchi = q^-2 + $\n")
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(text)
        assert (excinfo.value.line, excinfo.value.column) == (9, 14)

    def test_layout_errors(self):
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec("free = K\n")
        assert excinfo.value.reason == "content before the first section"
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec("[groups]\n")
        assert excinfo.value.reason == "unknown section [groups]"
        with pytest.raises(SpecParseError):
            parse_spec(spec(HEADER, "[group]\nfree = L\n"))
        with pytest.raises(SpecParseError):
            parse_spec(spec(HEADER, "[letter]\nname f\n"))

    def test_missing_sections(self):
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(spec(HEADER))
        assert excinfo.value.reason == "no [letter] sections"
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(spec("[components]\norder = minus, plus\n", LETTERS))
        assert excinfo.value.reason == "missing [group] section"

    def test_same_component_link(self):
        text = spec(HEADER, LETTERS, "[link]\ni = e\nj = e\nvalue = 1\n")
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(text)
        assert "same component" in excinfo.value.reason

    def test_degree_bounds(self):
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(spec(HEADER, LETTERS, "[job]\ndegree = 1\n"))
        assert excinfo.value.reason == "degree must be at least 2, got 1"
        with pytest.raises(SpecParseError):
            parse_spec(spec(HEADER, LETTERS, "[job]\ndegree = six\n"))

    def test_bad_relation(self):
        with pytest.raises(SpecParseError) as excinfo:
            parse_spec(spec(HEADER, LETTERS, "[relations]\ne*e*x\n"))
        assert excinfo.value.line == 16
        assert excinfo.value.column == 5

    def test_inadmissible_link_is_rejected(self, example_path):
        with pytest.raises(ValidationError) as excinfo:
            load_spec(str(example_path("bad-link.qd")))
        assert excinfo.value.report.kinds() == ["linking"]


class TestJobSpec:

    def test_degree_is_checked_on_construction(self, sl2_job):
        with pytest.raises(SpecParseError):
            JobSpec("tiny", sl2_job.datum, sl2_job.links, degree=1)

    def test_with_degree(self, sl2_job):
        job = sl2_job.with_degree(3)
        assert job.degree == 3
        assert job.datum is sl2_job.datum

    def test_reorder_components(self, sl2_job):
        job = reorder_components(sl2_job, ("plus", "minus"))
        assert job.components == ("plus", "minus")
        assert {x.name for x in job.datum.letters} == {"e", "f"}


class TestLoadSpec:

    def test_presets_resolve_by_name(self):
        assert load_spec("sl2").name == "sl2"

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecParseError):
            load_spec(str(tmp_path / "nothing.qd"))

    async def test_async_loader_reads_files(self, tmp_path):
        path = tmp_path / "plain.qd"
        path.write_text(spec(HEADER, LETTERS, "[job]\ndegree = 4\n"), encoding="utf-8")
        job = await load_spec_async(str(path))
        assert job.name == "plain"
        assert job.degree == 4

    async def test_async_loader_resolves_presets(self):
        job = await load_spec_async("sl3")
        assert job.components == ("minus", "plus")
