"""
Tests for the exact coefficient fields
"""

import pytest

from src.qdeform.algebra.scalars import (FieldMismatchError, PoleError, ScalarError, ScalarZeroDivisionError,
                                         SquareRootError, cyclotomic_field, field_ops, gauss_binomial, q_integer,
                                         rational_field, rational_function_field, specialize)


class TestRationalField:
    """Arithmetic over QQ"""

    def test_fraction_arithmetic(self):
        QQ = rational_field()
        half = QQ.fraction(1, 2)
        third = QQ.fraction(1, 3)
        assert half + third == QQ.fraction(5, 6)
        assert half * third == QQ.fraction(1, 6)
        assert (half - third).render() == "1/6"
        assert half.inverse() == 2

    def test_zero_division(self):
        QQ = rational_field()
        with pytest.raises(ScalarZeroDivisionError):
            QQ.zero.inverse()
        with pytest.raises(ScalarZeroDivisionError):
            QQ.fraction(1, 0)

    def test_square_roots(self):
        QQ = rational_field()
        assert QQ.fraction(9, 4).sqrt() == QQ.fraction(3, 2)
        with pytest.raises(SquareRootError):
            QQ(2).sqrt()
        with pytest.raises(SquareRootError):
            QQ(-1).sqrt()

    def test_field_ops_dispatch(self):
        QQ = rational_field()
        assert field_ops(QQ(2), QQ(3), "add") == 5
        assert field_ops(QQ(2), QQ(3), "mul") == 6
        assert field_ops(QQ(4), None, "invert") == QQ.fraction(1, 4)
        with pytest.raises(ScalarError):
            field_ops(QQ(1), None, "sqrt")


class TestRationalFunctionField:
    """Q(q) with canonical coprime representatives"""

    def test_fields_are_cached(self):
        assert rational_function_field("q") is rational_function_field("q")

    def test_canonical_form_cancels(self, qfield, q):
        lhs = (q ** 2 - 1) / (q - 1)
        assert lhs == q + 1
        assert hash(lhs) == hash(q + 1)

    def test_negative_powers(self, q):
        assert q ** -2 * q ** 2 == 1
        assert (q ** -2).render() == "q^-2"

    def test_render_polynomial(self, q):
        assert (q ** 2 + 1).render() == "q^2 + 1"
        assert (q ** 2 - 2 * q).render() == "q^2 - 2*q"

    def test_render_laurent_polynomial(self, q):
        assert (q - q.inverse()).render() == "q - q^-1"

    def test_mixing_fields_is_rejected(self, q):
        with pytest.raises(FieldMismatchError):
            q + rational_field().one

    def test_monomial_square_root(self, q, qfield):
        assert (q ** 2).sqrt() == q
        assert (q ** -4).sqrt() == q ** -2
        with pytest.raises(SquareRootError):
            (q ** 2 + 1).sqrt()
        with pytest.raises(SquareRootError):
            q.sqrt()


class TestQBinomials:
    """Balanced q-integers and Gaussian binomials"""

    def test_q_integer(self, q):
        assert q_integer(2, q) == q + q.inverse()
        assert q_integer(3, q) == q ** 2 + 1 + q ** -2

    def test_gauss_binomial_generic(self, q):
        expected = q ** 4 + q ** 2 + 2 + q ** -2 + q ** -4
        assert gauss_binomial(4, 2, q) == expected
        assert gauss_binomial(4, 0, q) == 1
        assert gauss_binomial(4, 4, q) == 1

    def test_gauss_binomial_symmetry(self, q):
        for n in range(1, 6):
            for k in range(n + 1):
                assert gauss_binomial(n, k, q) == gauss_binomial(n, n - k, q)

    def test_gauss_binomial_range(self, q):
        with pytest.raises(ScalarError):
            gauss_binomial(3, 4, q)

    def test_q_equal_one_limit(self):
        one = rational_field().one
        assert q_integer(4, one) == 4
        assert gauss_binomial(4, 2, one) == 6


class TestCyclotomicField:
    """Q(zeta_N) and specialization q -> zeta_N"""

    def test_generator_order(self):
        K = cyclotomic_field(5)
        z = K.gen()
        assert z ** 5 == 1
        assert z ** 4 == -(1 + z + z ** 2 + z ** 3)
        assert z.inverse() == z ** 4

    def test_specialize_laurent_monomials(self, q):
        z = cyclotomic_field(5).gen()
        assert specialize(q ** 2, 5) == z ** 2
        assert specialize(q ** -2, 5) == z ** 3

    def test_specialize_rejects_poles(self, q):
        with pytest.raises(PoleError):
            specialize((q ** 5 - 1).inverse(), 5)

    def test_binomials_vanish_at_root_of_unity(self):
        z = cyclotomic_field(5).gen()
        for k in range(1, 5):
            assert gauss_binomial(5, k, z).is_zero

    def test_q_integer_denominator_vanishes(self):
        z = cyclotomic_field(5).gen()
        with pytest.raises(ScalarZeroDivisionError):
            gauss_binomial(10, 5, z)

    def test_square_root_of_even_power(self):
        K = cyclotomic_field(5)
        z = K.gen()
        root = (z ** 4).sqrt()
        assert root * root == z ** 4
