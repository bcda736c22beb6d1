"""
Tests for the bosonization Hopf structure: coproduct, counit, antipode and the axiom checker
"""

import pytest

from src.qdeform.algebra.bosonize import (CoproductError, HopfPresentation, TensorElement, TensorProductHopf,
                                          antipode, antipode_inverse, antipode_square, check_hopf_axioms,
                                          coproduct, counit, split_word)
from src.qdeform.algebra.deform import HLAMBDA_NAME, build_presentation, cross_relations
from src.qdeform.algebra.freealg import NcPoly
from src.qdeform.utils.expressions import parse_poly


@pytest.fixture
def hl(sl2_dp):
    return sl2_dp.Hlambda


class TestCoproduct:

    def test_letters_are_skew_primitive(self, hl):
        datum = hl.datum
        pres = hl.pres
        e = NcPoly.letter(datum, "e")
        expected = TensorElement.from_polys((pres, pres), [e, NcPoly.constant(datum)])
        expected = expected + TensorElement.from_polys((pres, pres), [NcPoly.group_element(datum, (1,)), e])
        assert coproduct(e, hl) == expected

    def test_group_elements_are_group_like(self, hl):
        datum = hl.datum
        K2 = NcPoly.group_element(datum, (2,))
        assert coproduct(K2, hl) == TensorElement.from_polys((hl.pres, hl.pres), [K2, K2])

    def test_split_word_coefficients(self, sl2_job, q):
        datum = sl2_job.datum
        f, e = datum.index("f"), datum.index("e")
        terms = {(left, right): c for left, right, c in split_word(datum, (e, f))}
        # g_e (x) e moves past f: f K (x) e picks up chi_f(K)
        assert terms[(((f,), (1,)), (e,))] == q ** -2
        assert terms[(((e, f), (0,)), ())] == 1
        assert terms[(((), (2,)), (e, f))] == 1

    def test_coproduct_is_multiplicative_on_a_relation(self, hl):
        datum = hl.datum
        relation = parse_poly("e*f - q^-2*f*e - (K^2 - 1)/(q - q^-1)", datum)
        assert hl.pres.reduce(relation).is_zero
        assert coproduct(relation, hl).is_zero

    def test_render(self, sl2_dp):
        H = sl2_dp.H
        e = NcPoly.letter(H.datum, "e")
        assert coproduct(e, H).render() == "[e (x) 1] + [K (x) e]"


class TestCounitAndAntipode:

    def test_counit(self, hl):
        datum = hl.datum
        assert counit(NcPoly.letter(datum, "e")) == 0
        assert counit(parse_poly("K + 2 + e*f", datum)) == 3

    def test_antipode_on_generators(self, hl, q):
        datum = hl.datum
        assert antipode(NcPoly.letter(datum, "e"), hl) == parse_poly("-q^-2*e*K^-1", datum)
        assert antipode(NcPoly.group_element(datum, (1,)), hl) == NcPoly.group_element(datum, (-1,))

    def test_antipode_is_an_anti_homomorphism(self, hl):
        datum = hl.datum
        e, f = NcPoly.letter(datum, "e"), NcPoly.letter(datum, "f")
        lhs = antipode(hl.multiply(f, e), hl)
        rhs = hl.multiply(antipode(e, hl), antipode(f, hl))
        assert lhs == rhs

    def test_antipode_inverse_round_trip(self, hl):
        datum = hl.datum
        p = parse_poly("f*e*K + 3*f*f - e", datum)
        assert antipode(antipode_inverse(p, hl), hl) == p
        assert antipode_inverse(antipode(p, hl), hl) == p

    def test_antipode_square_scales_letters(self, hl, q):
        datum = hl.datum
        assert antipode_square(NcPoly.letter(datum, "e"), hl) == NcPoly.letter(datum, "e").scale(q ** -2)
        assert antipode_square(NcPoly.letter(datum, "f"), hl) == NcPoly.letter(datum, "f").scale(q ** 2)


class TestHopfAxioms:

    def test_sl2_axioms(self, sl2_dp):
        for hp in (sl2_dp.H, sl2_dp.Hlambda):
            report = check_hopf_axioms(hp, 4)
            assert report.passed, report.lines()
            axioms = set(report.summary())
            assert {"COASSOC", "COUNIT", "ANTIPODE-L", "ANTIPODE-R", "SINV", "DELTA-MULT", "WEIGHT",
                    "S2"} <= axioms

    def test_s2_notes_are_informational(self, sl2_dp):
        report = check_hopf_axioms(sl2_dp.H, 1)
        notes = [entry for entry in report.entries if entry.info]
        assert [entry.axiom for entry in notes] == ["S2", "S2"]
        assert any(line.startswith("S2 e INFO") for line in report.lines())

    def test_root_of_unity_axioms(self, uq5_dp):
        assert check_hopf_axioms(uq5_dp.Hlambda, 4).passed

    @pytest.mark.slow
    def test_sl3_axioms(self, sl3_job):
        dp = sl3_job.deformation(4)
        assert check_hopf_axioms(dp.Hlambda, 4).passed

    def test_tampered_linking_is_rejected(self, tampered_datum, tampered_links):
        relations = cross_relations(tampered_datum, tampered_links, HLAMBDA_NAME)
        pres = build_presentation(tampered_datum, relations, 4, "tampered")
        with pytest.raises(CoproductError):
            HopfPresentation(pres)
        hp = HopfPresentation(pres, strict=False)
        assert hp.defects
        report = check_hopf_axioms(hp, 2)
        assert not report.passed
        assert {entry.axiom for entry in report.failures()} == {"WEIGHT"}
        assert report.first_failure().residue


class TestTensorProductHopf:

    def test_componentwise_structure(self, sl2_dp):
        H = sl2_dp.H
        pair = TensorProductHopf(H, H)
        e = ((H.datum.index("e"),), (0,))
        key = (e, H.unit_key)
        assert pair.counit_monomial(key) == 0
        assert pair.counit_monomial(pair.unit_key) == 1
        assert pair.degree((e, e)) == 2
        assert len(pair.coproduct_terms(key)) == 2
        assert pair.render_key(key) == "e (x) 1"

    def test_fields_must_match(self, sl2_dp, uq5_dp):
        with pytest.raises(CoproductError):
            TensorProductHopf(sl2_dp.H, uq5_dp.H)
