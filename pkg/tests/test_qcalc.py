import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latcount import (
    QPolynomial,
    format_qpolynomial,
    gauss_binomial,
    gauss_binomial_at,
    q_factorial,
    q_integer,
)
from oracles import qbinomial_by_quotient


class TestQPolynomial:
    def test_trailing_zeros_are_stripped(self):
        assert QPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
        assert QPolynomial([0, 0]).coefficients == ()
        assert QPolynomial([]).is_zero()

    def test_degree(self):
        assert QPolynomial.zero().degree == -1
        assert QPolynomial.one().degree == 0
        assert QPolynomial([0, 0, 5]).degree == 2

    def test_arithmetic(self):
        a = QPolynomial([1, 2])
        b = QPolynomial([3, 0, 1])
        assert (a + b).coefficients == (4, 2, 1)
        assert (a - a).is_zero()
        assert (a * b).coefficients == (3, 6, 1, 2)
        assert (a * 0).is_zero()
        assert (3 * a).coefficients == (3, 6)

    def test_indexing_past_degree_gives_zero(self):
        p = QPolynomial([1, 2])
        assert p[0] == 1 and p[1] == 2 and p[5] == 0
        with pytest.raises(IndexError):
            p[-1]

    def test_shift(self):
        assert QPolynomial([1, 1]).shift(2).coefficients == (0, 0, 1, 1)
        assert QPolynomial.zero().shift(3).is_zero()

    def test_evaluate(self):
        p = QPolynomial([1, 2, 3])  # 1 + 2q + 3q^2
        assert p.evaluate(0) == 1
        assert p.evaluate(1) == 6
        assert p.evaluate(10) == 321
        assert QPolynomial.zero().evaluate(7) == 0

    def test_equality_and_hash(self):
        assert QPolynomial([1, 1]) == QPolynomial((1, 1, 0))
        assert hash(QPolynomial([1, 1])) == hash(QPolynomial((1, 1)))
        assert QPolynomial([1]) != QPolynomial([2])

    def test_formatting(self):
        assert str(QPolynomial.zero()) == "0"
        assert str(QPolynomial([5])) == "5"
        assert str(QPolynomial([1, 1, 2, 1, 1])) == "1 + q + 2*q^2 + q^3 + q^4"
        assert str(QPolynomial([0, 3, 0, 1])) == "3*q + q^3"
        assert format_qpolynomial(QPolynomial([1, -2])) == "1 - 2*q"

    def test_monomial(self):
        assert QPolynomial.monomial(3).coefficients == (0, 0, 0, 1)
        assert QPolynomial.monomial(0, 4).coefficients == (4,)
        with pytest.raises(ValueError):
            QPolynomial.monomial(-1)


class TestQInteger:
    def test_examples(self):
        assert q_integer(0).is_zero()
        assert q_integer(1) == QPolynomial([1])
        assert q_integer(4) == QPolynomial([1, 1, 1, 1])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            q_integer(-1)

    def test_factorial_definition(self):
        expected = QPolynomial.one()
        for j in range(9):
            assert q_factorial(j) == expected
            expected = expected * q_integer(j + 1)


class TestGaussBinomial:
    def test_edge_cases(self):
        for m in range(8):
            assert gauss_binomial(m, 0) == QPolynomial.one()
            assert gauss_binomial(m, m) == QPolynomial.one()
        assert gauss_binomial(3, 5).is_zero()

    def test_frozen_examples(self):
        assert gauss_binomial(2, 1) == QPolynomial([1, 1])
        # computed independently via the factorial-quotient oracle
        assert qbinomial_by_quotient(4, 2) == [1, 1, 2, 1, 1]
        assert gauss_binomial(4, 2) == QPolynomial([1, 1, 2, 1, 1])

    def test_matches_quotient_definition(self):
        for m in range(11):
            for k in range(m + 1):
                assert list(gauss_binomial(m, k).coefficients) == qbinomial_by_quotient(m, k)

    def test_symmetry(self):
        for m in range(13):
            for k in range(m + 1):
                assert gauss_binomial(m, k) == gauss_binomial(m, m - k)

    def test_factorial_consistency(self):
        for m in range(11):
            for k in range(m + 1):
                product = gauss_binomial(m, k) * q_factorial(m - k) * q_factorial(k)
                assert product == q_factorial(m)

    def test_degree_and_positivity(self):
        for m in range(13):
            for k in range(m + 1):
                poly = gauss_binomial(m, k)
                assert poly.degree == k * (m - k)
                assert all(c >= 0 for c in poly.coefficients)

    def test_rejects_negative_arguments(self):
        with pytest.raises(ValueError):
            gauss_binomial(-1, 0)
        with pytest.raises(ValueError):
            gauss_binomial(3, -2)


class TestGaussBinomialAt:
    def test_frozen_examples(self):
        assert gauss_binomial_at(4, 2, 1) == 6
        assert gauss_binomial_at(3, 1, 2) == 1 + 2 + 4 == 7
        assert gauss_binomial_at(4, 2, 2) == 35

    def test_q1_specialization_is_binomial(self):
        for m in range(13):
            for k in range(m + 1):
                assert gauss_binomial_at(m, k, 1) == math.comb(m, k)

    def test_evaluation_homomorphism(self):
        for q0 in (2, 3, 5):
            for m in range(11):
                for k in range(m + 1):
                    assert gauss_binomial(m, k).evaluate(q0) == gauss_binomial_at(m, k, q0)

    def test_vanishing_above_m(self):
        assert gauss_binomial_at(2, 5, 3) == 0

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            gauss_binomial_at(3, 1, 0)
        with pytest.raises(ValueError):
            gauss_binomial_at(-1, 0, 2)


@given(
    st.integers(min_value=0, max_value=14),
    st.integers(min_value=0, max_value=14),
    st.integers(min_value=1, max_value=7),
)
def test_symmetry_and_evaluation_property(m, k, q0):
    if k > m:
        assert gauss_binomial(m, k).is_zero()
        assert gauss_binomial_at(m, k, q0) == 0
    else:
        assert gauss_binomial(m, k) == gauss_binomial(m, m - k)
        assert gauss_binomial(m, k).evaluate(q0) == gauss_binomial_at(m, k, q0)
