"""
Tests for diagonal Yetter-Drinfeld data, linking parameters and twisting
"""

import pytest

from src.qdeform.algebra.abgroup import Character, GroupSpec
from src.qdeform.algebra.yd import (Bicharacter, DatumError, Letter, LinkingParameters, ValidationError, YDDatum,
                                    braiding_matrix, twist_datum, validate)


class TestYDDatum:

    def test_braiding_of_sl2(self, sl2_job, q):
        datum = sl2_job.datum
        f, e = datum.index("f"), datum.index("e")
        assert datum.q(e, f) == q ** -2
        assert datum.q(f, e) == q ** 2
        assert datum.q(e, e) == q ** 2
        assert datum.q(f, f) == q ** -2
        assert braiding_matrix(datum) == [[q ** -2, q ** 2], [q ** -2, q ** 2]]

    def test_letter_ranks_follow_component_order(self, sl3_job):
        datum = sl3_job.datum
        ranks = [datum.rank(datum.index(name)) for name in ("f1", "f2", "e1", "e2")]
        assert ranks == [0, 1, 2, 3]
        assert datum.letters_in("plus") == [datum.index("e1"), datum.index("e2")]

    def test_with_components_reorders_ranks(self, sl2_job):
        datum = sl2_job.datum.with_components(("plus", "minus"))
        assert datum.rank(datum.index("e")) == 0
        assert datum.rank(datum.index("f")) == 1
        with pytest.raises(DatumError):
            sl2_job.datum.with_components(("plus", "other"))

    def test_restrict(self, sl3_job):
        upper = sl3_job.datum.restrict(["plus"])
        assert [x.name for x in upper.letters] == ["e1", "e2"]
        assert upper.components == ("plus",)

    def test_invalid_data(self, qfield, q):
        group = GroupSpec(("K",))
        chi = Character(group, (q,))
        with pytest.raises(DatumError):
            YDDatum(qfield, group, ("a",), [Letter("x", "a", (1,), chi), Letter("x", "a", (1,), chi)])
        with pytest.raises(DatumError):
            YDDatum(qfield, group, ("a",), [Letter("x", "b", (1,), chi)])
        with pytest.raises(DatumError):
            YDDatum(qfield, group, ("a",), [Letter("K", "a", (1,), chi)])
        with pytest.raises(DatumError):
            YDDatum(qfield, group, ("a", "a"), [Letter("x", "a", (1,), chi)])
        datum = YDDatum(qfield, group, ("a",), [Letter("x", "a", (1,), chi)])
        with pytest.raises(DatumError):
            datum.index("y")


class TestLinkingParameters:

    def test_opposite_value_is_derived(self, sl2_job, sl2_linking_value, q):
        datum, links = sl2_job.datum, sl2_job.links
        f, e = datum.index("f"), datum.index("e")
        assert links(e, f) == sl2_linking_value
        assert links(f, e) == -q ** 2 * sl2_linking_value
        assert links(e, e) == 0

    def test_setting_from_the_lower_letter(self, sl2_job, sl2_linking_value, q):
        datum = sl2_job.datum
        f, e = datum.index("f"), datum.index("e")
        links = LinkingParameters(datum)
        links.set(f, e, -q ** 2 * sl2_linking_value)
        assert links.items() == [((e, f), sl2_linking_value)]

    def test_zero_values_are_dropped(self, sl2_job):
        datum = sl2_job.datum
        links = LinkingParameters(datum)
        links.set(datum.index("e"), datum.index("f"), 0)
        assert links.is_zero()

    def test_scaled_and_render(self, sl2_job, q):
        datum = sl2_job.datum
        links = LinkingParameters(datum)
        links.set(datum.index("e"), datum.index("f"), 1)
        assert links.scaled(q).render() == ["lambda(e, f) = q"]

    def test_rebase_keeps_values_by_name(self, sl2_job, sl2_linking_value, q):
        datum = sl2_job.datum.with_components(("plus", "minus"))
        rebased = sl2_job.links.rebase(datum)
        f, e = datum.index("f"), datum.index("e")
        assert rebased(e, f) == sl2_linking_value
        assert rebased.items() == [((f, e), -q ** 2 * sl2_linking_value)]


class TestValidate:

    def test_presets_validate(self, sl2_job, sl3_job):
        assert validate(sl2_job.datum, sl2_job.links).passed
        assert validate(sl3_job.datum, sl3_job.links).passed

    def test_symmetry_failure(self, qfield, q):
        group = GroupSpec(("K",))
        K = group.generator("K")
        datum = YDDatum(qfield, group, ("minus", "plus"), [
            Letter("f", "minus", K, Character(group, (q ** -1,))),
            Letter("e", "plus", K, Character(group, (q ** 2,))),
        ])
        report = validate(datum)
        assert report.kinds() == ["symmetry"]
        assert "expected 1" in str(report)

    def test_linking_failure(self, tampered_datum, tampered_links):
        report = validate(tampered_datum, tampered_links)
        assert report.kinds() == ["linking"]
        assert validate(tampered_datum).passed

    def test_validation_error_carries_report(self, tampered_datum, tampered_links):
        error = ValidationError(validate(tampered_datum, tampered_links))
        assert error.report.kinds() == ["linking"]


class TestTwist:

    def test_twist_preserves_diagonal_and_symmetric_products(self, sl3_job, q):
        datum = sl3_job.datum
        beta = Bicharacter(datum.group, {(0, 1): q}, datum.field)
        twisted = twist_datum(datum, beta)
        for i in range(datum.size):
            assert twisted.q(i, i) == datum.q(i, i)
            for j in range(datum.size):
                assert twisted.q(i, j) * twisted.q(j, i) == datum.q(i, j) * datum.q(j, i)

    def test_twist_changes_off_diagonal_braiding(self, sl3_job, q):
        datum = sl3_job.datum
        beta = Bicharacter(datum.group, {(0, 1): q}, datum.field)
        twisted = twist_datum(datum, beta)
        e1, e2 = datum.index("e1"), datum.index("e2")
        assert twisted.q(e1, e2) != datum.q(e1, e2)

    def test_bicharacter_on_torsion_must_be_multiplicative(self, uq5_job, qfield):
        group = uq5_job.datum.group
        with pytest.raises(DatumError):
            Bicharacter(group, {(0, 0): uq5_job.field(2)}, uq5_job.field)
