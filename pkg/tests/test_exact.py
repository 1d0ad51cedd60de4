from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibersurf.exact import (
    IDENTITY,
    INFINITY,
    MAT_A,
    MAT_B,
    MAT_P,
    MAT_Q,
    ExtendedRational,
    GeneratorWord,
    SL2Matrix,
    exponent_sum,
    letter_exponent_sums,
    mat_mul,
    word_to_matrix,
)


class TestExtendedRational:
    def test_normalises_sign_and_gcd(self):
        x = ExtendedRational(6, -4)
        assert (x.numerator, x.denominator) == (-3, 2)

    def test_zero_and_infinity(self):
        assert ExtendedRational(0, 5) == ExtendedRational(0, 1)
        assert ExtendedRational(-7, 0) == INFINITY
        assert str(INFINITY) == "1/0"

    def test_zero_over_zero_rejected(self):
        with pytest.raises(ValueError):
            ExtendedRational(0, 0)

    def test_parse(self):
        assert ExtendedRational.parse("-12/19") == Fraction(-12, 19)
        assert ExtendedRational.parse("3") == 3
        with pytest.raises(ValueError):
            ExtendedRational.parse("3/x")

    def test_coerce(self):
        assert ExtendedRational.coerce((2, 4)) == ExtendedRational(1, 2)
        assert ExtendedRational.coerce(Fraction(7, 19)) == ExtendedRational(7, 19)


class TestMatrices:
    def test_bab_is_p(self):
        assert MAT_B @ MAT_A @ MAT_B == MAT_P == SL2Matrix(0, -1, 1, 0)

    def test_q_from_inverses(self):
        assert MAT_B.inverse() @ MAT_A.inverse() == MAT_Q == SL2Matrix(1, 1, -1, 0)

    def test_identity(self):
        assert mat_mul(IDENTITY, MAT_Q) == MAT_Q

    def test_determinant_enforced(self):
        with pytest.raises(ValueError):
            SL2Matrix(1, 2, 3, 4)

    def test_relations(self):
        assert MAT_P ** 2 == -IDENTITY
        assert MAT_P ** 4 == IDENTITY
        assert MAT_Q ** 3 == -IDENTITY
        assert MAT_P ** 2 == MAT_Q ** 3

    def test_conjugation_swaps_a_and_b(self):
        assert MAT_P @ MAT_A @ MAT_P.inverse() == MAT_B
        assert MAT_P @ MAT_B @ MAT_P.inverse() == MAT_A

    def test_big_integers(self):
        M = MAT_A ** (10 ** 30)
        assert M == SL2Matrix(1, -10 ** 30, 0, 1)


class TestWords:
    def test_word_to_matrix(self):
        assert word_to_matrix(GeneratorWord.parse("P^2")) == -IDENTITY
        assert word_to_matrix(GeneratorWord()) == IDENTITY
        assert word_to_matrix(GeneratorWord.parse("A^-1 B^-1")) == SL2Matrix(0, 1, -1, 1)

    def test_merging(self):
        w = GeneratorWord.parse("A^2 A^-2 B^3 B")
        assert w.terms == (("B", 4),)

    def test_no_mixing(self):
        with pytest.raises(ValueError):
            GeneratorWord.parse("A alpha")

    def test_exponent_sums(self):
        assert exponent_sum(GeneratorWord.parse("A^-1 B^-1")) == -2
        assert exponent_sum(GeneratorWord()) == 0
        exps = [3, -4, 2, 1]
        assert exponent_sum(GeneratorWord.alternating(exps, "B")) == sum(exps)

    def test_letter_sums(self):
        assert letter_exponent_sums(GeneratorWord.parse("phi^2 psi^3")) == (2, 3)
        assert letter_exponent_sums(GeneratorWord.parse("alpha^-1 beta^-1")) == (-2, -2)

    def test_letter_sums_reject_matrix_words(self):
        with pytest.raises(ValueError):
            letter_exponent_sums(GeneratorWord.parse("A B"))

    def test_to_framing(self):
        assert GeneratorWord.parse("P A^2 B^-1").to_framing() == GeneratorWord.parse("phi alpha^2 beta^-1")


matrix_words = st.lists(st.tuples(st.sampled_from("ABPQ"), st.integers(-6, 6)), max_size=8)
framing_words = st.lists(st.tuples(st.sampled_from(["alpha", "beta", "phi", "psi"]), st.integers(-6, 6)),
                         max_size=8)


@given(matrix_words)
def test_words_have_determinant_one(terms):
    M = word_to_matrix(GeneratorWord(terms))
    assert M.x * M.u - M.y * M.t == 1


@given(matrix_words, matrix_words)
def test_word_product_is_matrix_product(t1, t2):
    w1, w2 = GeneratorWord(t1), GeneratorWord(t2)
    assert word_to_matrix(w1 + w2) == word_to_matrix(w1) @ word_to_matrix(w2)
    assert word_to_matrix(w1.inverse()) == word_to_matrix(w1).inverse()


@given(framing_words, framing_words)
def test_letter_sums_additive_and_odd(t1, t2):
    w1, w2 = GeneratorWord(t1), GeneratorWord(t2)
    a, b = letter_exponent_sums(w1), letter_exponent_sums(w2)
    assert letter_exponent_sums(w1 + w2) == (a[0] + b[0], a[1] + b[1])
    assert letter_exponent_sums(w1.inverse()) == (-a[0], -a[1])


@given(st.lists(st.integers(-9, 9), max_size=10), st.sampled_from(["alpha", "beta"]))
def test_alpha_beta_words_have_equal_letter_sums(exps, first):
    w = GeneratorWord.alternating(exps, first)
    assert letter_exponent_sums(w) == (sum(exps), sum(exps)) == (exponent_sum(w), exponent_sum(w))
