import pytest
from hypothesis import given, settings, strategies as st

from config import STALLINGS_CONFIG
from errors import IndexCapExceeded
from stallings import (express, fold, multi_pullback, rewrite, schreier_basis,
                       spanning_basis)
from words import (exponent_vector, inverse, multiply, parse_word,
                   reduce_word, substitute)

raw_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8)


def gens(*texts):
    return [parse_word(t) for t in texts]


class TestFold:
    def test_full_free_group(self):
        A, data = fold(gens("x", "y"), 2)
        assert A.num_states == 1
        assert A.rank == 2
        assert data.rank == 2

    def test_square_and_letter(self):
        A, data = fold(gens("x^2", "y"), 2)
        assert A.num_states == 2
        assert A.rank == 2
        assert A.accepts(parse_word("x^2yx^2"))
        assert not A.accepts(parse_word("x"))

    def test_redundant_generator(self):
        A, data = fold(gens("x", "y", "xy"), 2)
        assert A.rank == 2
        assert data.num_generators == 3

    def test_conjugated_generator_gets_core(self):
        A, _ = fold(gens("Yxy"), 2)
        assert A.rank == 1
        assert A.accepts(parse_word("Yx^3y"))

    def test_trivial(self):
        A, data = fold([()], 2)
        assert A.num_states == 1 and A.rank == 0
        assert data.basis_words == ()

    def test_basis_words_accepted(self):
        A, data = fold(gens("xyX", "y^2", "xy^3"), 2)
        for u in data.basis_words:
            assert A.accepts(u)

    @settings(max_examples=50)
    @given(st.lists(raw_words, min_size=1, max_size=3))
    def test_generators_accepted_and_expressed(self, raws):
        words = [reduce_word(r) for r in raws]
        A, data = fold(words, 2)
        for w in words:
            assert A.accepts(w)
            expr = express(data, A, w)
            assert substitute(expr, words) == w

    @settings(max_examples=50)
    @given(st.lists(raw_words, min_size=1, max_size=3))
    def test_expressions_reproduce_basis(self, raws):
        words = [reduce_word(r) for r in raws]
        _, data = fold(words, 2)
        for u, expr in zip(data.basis_words, data.generator_expressions):
            assert substitute(expr, words) == u


class TestExpress:
    def test_example(self):
        words = gens("x^2", "y")
        A, data = fold(words, 2)
        assert express(data, A, parse_word("x^2yx^2")) == (1, 2, 1)

    def test_non_member(self):
        A, data = fold(gens("x^2", "y"), 2)
        assert express(data, A, parse_word("xy")) is None
        assert rewrite(data, A, parse_word("x")) is None

    def test_rewrite_abelianization(self):
        A, data = fold(gens("x", "y"), 2)
        expr = rewrite(data, A, parse_word("xyXy"))
        assert exponent_vector(expr, 2) == [0, 2]


class TestPullback:
    def test_trivial_intersection(self):
        A, _ = fold(gens("x^4", "y"), 2)
        B, _ = fold(gens("xy", "yx"), 2)
        P = multi_pullback([A, B])
        assert P.rank == 0

    def test_nontrivial_intersection(self):
        a, b, c, d = gens("x^4y^2", "xy", "yx^4y^2", "yx")
        A, _ = fold([a, b], 2)
        B, _ = fold([c, d], 2)
        P = multi_pullback([A, B])
        w = parse_word("Y^2X^3yx^4y^2")
        assert w == multiply(inverse(a), b, a) == multiply(inverse(c), d, c)
        assert P.accepts(w)

    def test_with_whole_group(self):
        A, _ = fold(gens("x^2", "yxY"), 2)
        F, _ = fold(gens("x", "y"), 2)
        P = multi_pullback([A, F])
        assert P.rank == A.rank
        assert spanning_basis(P).rank == A.rank

    @settings(max_examples=30)
    @given(raw_words)
    def test_membership_is_conjunction(self, raw):
        w = reduce_word(raw)
        A, _ = fold(gens("x^2", "y"), 2)
        B, _ = fold(gens("x", "y^2"), 2)
        P = multi_pullback([A, B])
        assert P.accepts(w) == (A.accepts(w) and B.accepts(w))


class TestSchreier:
    def test_even_second_coordinate(self):
        graph = schreier_basis(gens("x", "y"), lambda w: exponent_vector(w, 2)[1] % 2 == 0)
        assert graph.index == 2
        assert len(graph.basis) == 3

    def test_coset_key(self):
        graph = schreier_basis(gens("x", "y"), lambda w: True,
                               coset_key=lambda w: exponent_vector(w, 2)[0] % 3)
        assert graph.index == 3
        # Schreier: 1 + 3·(2 - 1)
        assert len(graph.basis) == 4

    def test_cap(self):
        with pytest.raises(IndexCapExceeded):
            schreier_basis(gens("x", "y"), lambda w: exponent_vector(w, 2)[1] == 0, cap=50)

    def test_default_cap_without_coset_key(self, monkeypatch):
        assert STALLINGS_CONFIG["scan_coset_cap"] < STALLINGS_CONFIG["coset_cap"]
        monkeypatch.setitem(STALLINGS_CONFIG, "scan_coset_cap", 30)
        with pytest.raises(IndexCapExceeded) as e:
            schreier_basis(gens("x", "y"), lambda w: exponent_vector(w, 2)[1] == 0)
        assert e.value.details["cap"] == 30

    def test_default_cap_with_coset_key(self, monkeypatch):
        monkeypatch.setitem(STALLINGS_CONFIG, "coset_cap", 40)
        with pytest.raises(IndexCapExceeded) as e:
            schreier_basis(gens("x", "y"), lambda w: exponent_vector(w, 2)[1] == 0,
                           coset_key=lambda w: exponent_vector(w, 2)[1])
        assert e.value.details["cap"] == 40
