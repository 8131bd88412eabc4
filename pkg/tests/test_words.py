import pytest
from hypothesis import given, settings, strategies as st

from errors import ArityMismatch, IndexOutOfRange, InputFormatError
from words import (EMPTY, commutator, conjugate, exponent_vector, format_word,
                   inverse, multiply, parse_word, power, reduce_word,
                   substitute, word_key)

letters = st.sampled_from([1, -1, 2, -2])
raw_words = st.lists(letters, max_size=12)


class TestReduce:
    def test_cancellation(self):
        assert reduce_word([1, -1]) == EMPTY

    def test_inner_cancellation(self):
        assert reduce_word([1, 2, -2, 1]) == (1, 1)

    def test_cascading_cancellation(self):
        assert reduce_word([-2, -1, 1, 2, 1]) == (1,)

    def test_letter_outside_rank(self):
        with pytest.raises(IndexOutOfRange):
            reduce_word([1, 3], n=2)

    def test_zero_letter(self):
        with pytest.raises(IndexOutOfRange):
            reduce_word([0])

    @given(raw_words)
    def test_idempotent(self, raw):
        once = reduce_word(raw)
        assert reduce_word(once) == once
        assert all(a != -b for a, b in zip(once, once[1:]))


class TestSubstitute:
    def test_direct_expansion(self):
        images = [parse_word("x"), parse_word("Yxy")]
        assert substitute((1, 2), images) == parse_word("xYxy")

    def test_reducible_word(self):
        assert substitute((1, -1), [parse_word("xy")]) == EMPTY

    def test_square_of_conjugate(self):
        assert substitute((1, 1), [parse_word("Yxy")]) == parse_word("Yx^2y")

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatch):
            substitute((1,), [(1,)], p=2)
        with pytest.raises(ArityMismatch):
            substitute((2,), [(1,)])

    @given(raw_words, raw_words)
    def test_homomorphism(self, u, v):
        images = [parse_word("xy"), parse_word("Yx")]
        left = substitute(reduce_word(u + v), images)
        right = multiply(substitute(reduce_word(u), images), substitute(reduce_word(v), images))
        assert left == right


class TestExponentVector:
    def test_conjugation(self):
        assert exponent_vector(parse_word("xyX"), 2) == [0, 1]

    def test_identity(self):
        assert exponent_vector(EMPTY, 2) == [0, 0]

    def test_powers(self):
        assert exponent_vector(parse_word("x^4y^2"), 2) == [4, 2]

    @given(raw_words, raw_words)
    def test_additive(self, u, v):
        total = exponent_vector(reduce_word(u + v), 2)
        parts = [a + b for a, b in zip(exponent_vector(u, 2), exponent_vector(v, 2))]
        assert total == parts


class TestText:
    def test_parse_and_format(self):
        assert parse_word("xyX") == (1, 2, -1)
        assert parse_word("x^4 y^-2") == (1, 1, 1, 1, -2, -2)
        assert parse_word("1") == EMPTY
        assert parse_word("") == EMPTY
        assert format_word((1, 2, -1)) == "xyX"
        assert format_word(EMPTY) == "1"

    def test_alphabet_order(self):
        assert parse_word("z") == (3,)
        assert parse_word("a") == (4,)

    def test_unknown_character(self):
        with pytest.raises(InputFormatError):
            parse_word("x+y")

    def test_rank_check(self):
        with pytest.raises(IndexOutOfRange):
            parse_word("z", n=2)

    @given(raw_words)
    def test_text_roundtrip(self, raw):
        w = reduce_word(raw)
        assert parse_word(format_word(w)) == w


class TestHelpers:
    def test_inverse_and_power(self):
        w = parse_word("xy")
        assert multiply(w, inverse(w)) == EMPTY
        assert power(w, -2) == parse_word("YXYX")
        assert power(w, 0) == EMPTY

    def test_conjugate_and_commutator(self):
        x, y = (1,), (2,)
        assert conjugate(x, y) == parse_word("Yxy")
        assert commutator(x, y) == parse_word("XYxy")

    def test_shortlex_key(self):
        words = [parse_word(t) for t in ["y", "X", "x", "xy", "1"]]
        assert [format_word(w) for w in sorted(words, key=word_key)] == ["1", "x", "X", "y", "xy"]

    @settings(max_examples=50)
    @given(raw_words)
    def test_inverse_involution(self, raw):
        w = reduce_word(raw)
        assert inverse(inverse(w)) == w
