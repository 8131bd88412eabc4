import pytest
from hypothesis import given, strategies as st

from configurations import (Configuration, cone, delta_sum, howson_violations,
                            is_howson, is_independent, is_one_monochromatic,
                            is_zero_monochromatic, join, mask_to_set,
                            obstruction_bound, restrict, set_to_mask,
                            subsets_shortlex)
from errors import BadIndex, EmptyVertex, KMismatch, KTooLarge


def conf(k, *sets):
    return Configuration.from_sets(k, sets)


def all_configurations(k):
    cells = (1 << k) - 1
    for bits in range(1 << cells):
        yield Configuration(k, frozenset(mask for mask in range(1, cells + 1) if bits >> (mask - 1) & 1))


configs3 = st.sets(st.integers(1, 7)).map(lambda s: Configuration(3, frozenset(s)))


class TestBasics:
    def test_masks(self):
        assert set_to_mask([1, 3], 3) == 0b101
        assert mask_to_set(0b101) == [1, 3]
        with pytest.raises(BadIndex):
            set_to_mask([4], 3)

    def test_shortlex(self):
        assert [mask_to_set(m) for m in subsets_shortlex(3)] == [
            [1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]]

    def test_sets_and_str(self):
        c = conf(2, [1, 2], [1])
        assert c.sets() == [[1], [1, 2]]
        assert str(c) == "c_{{1},{1,2}} (k=2)"
        assert str(conf(3, [1, 2, 3], [2], [1, 3])) == "c_{{2},{1,3},{1,2,3}} (k=3)"
        assert str(Configuration.zero(2)) == "c_{} (k=2)"
        assert c([1]) == 1 and c([2]) == 0

    def test_constructors(self):
        assert Configuration.zero(3).is_zero()
        assert Configuration.one(3).is_one()
        assert Configuration.almost_zero(3, [1, 3]).sets() == [[1, 3]]

    def test_invalid(self):
        with pytest.raises(EmptyVertex):
            conf(2, [])
        with pytest.raises(BadIndex):
            conf(2, [0])
        with pytest.raises(KTooLarge):
            Configuration.zero(17)
        with pytest.raises(BadIndex):
            Configuration(2, frozenset([8]))


class TestCalculus:
    def test_join(self):
        assert join(conf(2, [1], [1, 2]), conf(2, [1, 2])) == conf(2, [1], [1, 2])
        c = conf(3, [1, 2])
        assert join(c, Configuration.zero(3)) == c
        assert join(c, c) == c
        with pytest.raises(KMismatch):
            join(c, Configuration.zero(2))

    def test_delta_sum(self):
        result = delta_sum(conf(2, [1], [1, 2]), conf(2, [1, 2]), 1)
        assert result == conf(3, [1], [3], [1, 2], [1, 2, 3])

    def test_delta_sum_trivial(self):
        assert delta_sum(Configuration.zero(2), Configuration.zero(2), 0) == Configuration.zero(3)
        assert delta_sum(Configuration.one(2), Configuration.one(2), 1) == Configuration.one(3)

    @given(configs3, configs3, st.sampled_from([0, 1]))
    def test_delta_sum_restricts_back(self, c, d, delta):
        assert restrict(delta_sum(c, d, delta), 4) == c

    def test_restrict(self):
        assert restrict(Configuration.zero(3), 2) == Configuration.zero(2)
        assert restrict(conf(2, [1], [1, 2]), 2) == conf(1, [1])
        assert restrict(conf(2, [2]), 2) == Configuration.zero(1)
        # üst indeksler kayar
        assert restrict(conf(3, [1, 3], [3]), 2) == conf(2, [1, 2], [2])
        with pytest.raises(BadIndex):
            restrict(Configuration.zero(1), 1)

    def test_cone(self):
        assert cone(conf(3, [1], [2, 3]), [1]) == conf(3, [1])
        c = conf(3, [1], [2, 3])
        assert cone(c, [1, 2, 3]) == c
        assert cone(Configuration.zero(3), [2]) == Configuration.zero(3)
        with pytest.raises(EmptyVertex):
            cone(c, [])


class TestHowson:
    def test_examples(self):
        assert not is_howson(conf(2, [1, 2]))
        assert is_howson(Configuration.one(3))
        assert is_howson(Configuration.zero(3))
        assert is_howson(conf(2, [1], [1, 2]))

    def test_violations(self):
        assert howson_violations(conf(2, [1, 2])) == [([1], [2])]
        assert howson_violations(conf(2, [1], [1, 2])) == []

    @pytest.mark.parametrize("k", [2, 3])
    def test_exhaustive_closure(self, k):
        for c in all_configurations(k):
            assert is_howson(c) == (not howson_violations(c))

    def test_monochromatic(self):
        c = conf(2, [1])
        assert is_zero_monochromatic(c, 2)
        assert not is_zero_monochromatic(c, 1)
        assert is_one_monochromatic(Configuration.one(3), 2)
        assert not is_one_monochromatic(c, 1)
        assert is_one_monochromatic(conf(2, [2], [1, 2]), 2)
        with pytest.raises(BadIndex):
            is_zero_monochromatic(c, 3)


class TestObstruction:
    def test_independence(self):
        assert is_independent([[1], [2], [3]])
        assert is_independent([[1, 3], [2, 3]])
        assert not is_independent([[1], [1, 2]])
        assert not is_independent([[1], []])

    def test_almost_zero_full(self):
        obs = obstruction_bound(conf(3, [1, 2, 3]))
        assert obs.bound == 2
        assert obs.witness == ((1,), (2,), (3,))

    def test_pair(self):
        obs = obstruction_bound(conf(2, [1, 2]))
        assert obs.bound == 1
        assert obs.witness == ((1,), (2,))

    def test_zero(self):
        obs = obstruction_bound(Configuration.zero(3))
        assert obs.bound == 0 and obs.witness is None

    def test_howson_has_no_obstruction(self):
        assert obstruction_bound(Configuration.one(3)).bound == 0

    def test_witnesses_are_valid(self):
        for c in all_configurations(3):
            obs = obstruction_bound(c)
            m = sum(len(s) - 1 for s in c.sets())
            assert obs.bound <= m
            if obs.witness is None:
                continue
            family = [set(f) for f in obs.witness]
            assert len(family) == obs.bound + 1
            assert is_independent(family)
            union = set().union(*family)
            assert c(sorted(union)) == 1
            for j in range(len(family)):
                others = set().union(*(f for l, f in enumerate(family) if l != j))
                assert c(sorted(others)) == 0
