"""
Tests for the braided tensor square, braided coproduct and primitive elements
"""

import pytest

from src.qdeform.algebra.braided import (BraidedError, BraidedTensorElement, braided_commutator,
                                         braided_coproduct, braided_mul_t2, check_commutator_identity,
                                         find_primitives, is_primitive, primitive_residue, saturate,
                                         serre_element)
from src.qdeform.algebra.freealg import NcPoly
from src.qdeform.algebra.groebner import DegreeBoundError, Presentation, complete, interreduce, normal_words
from src.qdeform.utils.expressions import parse_poly


@pytest.fixture(scope="module")
def upper(sl3_plus_job):
    return sl3_plus_job.datum


class TestBraidedTensorSquare:

    def test_braided_product_of_pure_tensors(self, sl2_job, q):
        datum = sl2_job.datum
        f, e = datum.index("f"), datum.index("e")
        a = BraidedTensorElement.pure(datum, (), (e,))
        b = BraidedTensorElement.pure(datum, (f,), ())
        # (1 (x) e)(f (x) 1) = q_ef f (x) e
        assert braided_mul_t2(a, b) == BraidedTensorElement.pure(datum, (f,), (e,), q ** -2)
        assert braided_mul_t2(b, a) == BraidedTensorElement.pure(datum, (f,), (e,))

    def test_unit(self, sl2_job):
        datum = sl2_job.datum
        x = BraidedTensorElement.pure(datum, (0,), (1,))
        one = BraidedTensorElement.one(datum)
        assert braided_mul_t2(one, x) == x
        assert braided_mul_t2(x, one) == x

    def test_letters_are_primitive(self, sl2_job):
        datum = sl2_job.datum
        e = NcPoly.letter(datum, "e")
        expected = BraidedTensorElement.left(e) + BraidedTensorElement.right(e)
        assert braided_coproduct(e) == expected
        assert is_primitive(e)

    def test_coproduct_of_a_square(self, sl2_job, q):
        datum = sl2_job.datum
        e = datum.index("e")
        delta = braided_coproduct(NcPoly.letter(datum, "e") ** 2)
        assert delta.coefficient(((e,), (e,))) == 1 + q ** 2
        assert delta.coefficient(((e, e), ())) == 1
        assert delta.coefficient(((), (e, e))) == 1


class TestCommutators:

    def test_commutator_identity_for_presets(self, sl2_job, sl3_job):
        assert check_commutator_identity(sl2_job.datum).passed
        assert check_commutator_identity(sl3_job.datum).passed

    def test_cross_component_commutators_are_primitive(self, sl2_job):
        datum = sl2_job.datum
        bracket = braided_commutator(NcPoly.letter(datum, "e"), NcPoly.letter(datum, "f"))
        assert bracket == parse_poly("e*f - q^-2*f*e", datum)
        assert is_primitive(bracket)

    def test_same_component_commutator_is_not_primitive(self, upper):
        bracket = braided_commutator(NcPoly.letter(upper, "e1"), NcPoly.letter(upper, "e2"))
        assert not is_primitive(bracket)
        assert not primitive_residue(bracket).is_zero


class TestSerreElements:

    def test_serre_element_coefficients(self, upper):
        u12 = serre_element(upper, upper.index("e1"), upper.index("e2"), -1)
        assert u12 == parse_poly("e1*e1*e2 - (q + q^-1)*e1*e2*e1 + e2*e1*e1", upper)

    def test_serre_elements_are_primitive(self, upper):
        for i, j in ((0, 1), (1, 0)):
            assert is_primitive(serre_element(upper, i, j, -1))

    def test_serre_element_arguments(self, upper, sl2_job):
        with pytest.raises(BraidedError):
            serre_element(upper, 0, 0, -1)
        with pytest.raises(BraidedError):
            serre_element(upper, 0, 1, 1)
        with pytest.raises(BraidedError):
            serre_element(sl2_job.datum, 0, 1, -1)

    def test_serre_in_expressions(self, upper):
        assert parse_poly("serre(e2, e1, -1)", upper) == serre_element(upper, 1, 0, -1)


class TestFindPrimitives:

    def test_no_degree_two_primitives_for_sl3(self, upper):
        free = complete(Presentation.free(upper), 2)
        assert find_primitives(free, None, 2) == []

    def test_degree_three_primitives_are_the_serre_elements(self, upper):
        free = complete(Presentation.free(upper), 3)
        found = find_primitives(free, None, 3)
        expected = {serre_element(upper, 0, 1, -1), serre_element(upper, 1, 0, -1)}
        assert len(found) == 2
        assert set(found) == expected

    def test_letters_are_degree_one_primitives(self, upper):
        free = complete(Presentation.free(upper), 1)
        # blocks come in multidegree order: (0, 1) before (1, 0)
        assert find_primitives(free, None, 1) == [NcPoly.letter(upper, "e2"), NcPoly.letter(upper, "e1")]

    def test_power_is_primitive_at_root_of_unity(self, uq5_job):
        datum = uq5_job.datum.restrict(["plus"])
        free = complete(Presentation.free(datum), 5)
        assert find_primitives(free, None, 5) == [NcPoly.monomial(datum, (0,) * 5)]
        assert find_primitives(free, None, 4) == []

    def test_degree_must_be_validated(self, upper):
        free = complete(Presentation.free(upper), 2)
        with pytest.raises(DegreeBoundError):
            find_primitives(free, None, 3)


class TestSaturation:

    @pytest.mark.slow
    def test_serre_target_is_recovered(self, sl3_plus_job):
        datum = sl3_plus_job.datum
        target = complete(Presentation(datum, interreduce(datum, sl3_plus_job.extra), None, "U+"), 4)
        saturated = saturate(datum, target, 4)
        assert [len(normal_words(saturated, n)) for n in range(5)] == [1, 2, 4, 6, 9]
        for rule in target.rules:
            assert saturated.reduce(rule.relation()).is_zero
