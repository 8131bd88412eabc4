import pytest

from configurations import Configuration, delta_sum, is_howson, join
from errors import AmbientMismatch, KMismatch, NotHowson
from ftfa import FtfaElement, same_subgroup, subgroup_basis
from realizer import (FiniteBasis, FiniteGens, NormalClosurePiece, Parametric,
                      extend_by_one, extend_by_zero, join_realizations,
                      normal_closure_spec, realize_free, realize_ftfa,
                      shift_word, truncate, u_letter)
from verifier import verify
from words import conjugate, inverse, multiply, parse_word


def conf(k, *sets):
    return Configuration.from_sets(k, sets)


def unit(m, *coords):
    """1 tabanlı koordinatların toplamı"""
    return tuple(sum(1 for c in coords if c == j + 1) for j in range(m))


def diff(m, a, b):
    return tuple(x - y for x, y in zip(unit(m, a), unit(m, b)))


def g(j, vector):
    return FtfaElement(u_letter(j), tuple(vector))


def t(vector):
    return FtfaElement((), tuple(vector))


FOUR_BLOCKS = conf(4, [1], [2, 3], [1, 3, 4], [2, 3, 4])


class TestLetters:
    def test_u_letter(self):
        assert u_letter(0) == parse_word("x")
        assert u_letter(1) == parse_word("Yxy")
        assert u_letter(-1) == parse_word("yxY")

    def test_shift(self):
        assert shift_word(u_letter(2), 3) == u_letter(5)
        assert shift_word(multiply(u_letter(0), u_letter(1)), 2) == multiply(u_letter(2), u_letter(3))


class TestParametric:
    def test_normal_closure_membership(self):
        x, y = parse_word("x"), parse_word("y")
        spec = normal_closure_spec(2, 1, (x, y), (1,))
        assert spec.member(FtfaElement(conjugate(y, parse_word("x^3")), (0,)))
        assert spec.member(FtfaElement(parse_word("xyX"), (0,)))
        assert not spec.member(FtfaElement(parse_word("x"), (0,)))
        assert not spec.member(FtfaElement(y, (1,)))

    def test_ambient(self):
        spec = normal_closure_spec(2, 1, (parse_word("x"), parse_word("y")), (1,))
        with pytest.raises(AmbientMismatch):
            spec.member(FtfaElement(parse_word("y"), (0, 0)))

    def test_mixed_pieces(self):
        finite = subgroup_basis(2, 1, [g(2, [0]), g(3, [1])])
        spec = Parametric(2, 1, (
            NormalClosurePiece((u_letter(0), u_letter(1)), (0,)),
            FiniteGens(finite),
        ))
        u0, u1, u3 = u_letter(0), u_letter(1), u_letter(3)
        word = multiply(conjugate(u0, inverse(u1)), u3)
        assert spec.member(FtfaElement(word, (1,)))
        assert not spec.member(FtfaElement(word, (0,)))
        assert spec.completion(u1) is None
        assert spec.completion(multiply(u0, u_letter(2), u1)) is None

    def test_truncate(self):
        spec = normal_closure_spec(2, 0, (parse_word("x"), parse_word("y")), (1,))
        B = truncate(spec, 2)
        assert B.rank == 5
        for gen in B.generators():
            assert spec.member(gen)

    def test_truncate_finite(self):
        B = subgroup_basis(2, 0, [FtfaElement(parse_word("x"), ())])
        assert truncate(FiniteBasis(B), 3) == B


class TestRealizeFtfa:
    def test_four_blocks_ambient(self):
        R = realize_ftfa(FOUR_BLOCKS)
        assert (R.n, R.m, R.k) == (2, 5, 4)
        assert isinstance(R.subgroups[0], Parametric)
        assert all(isinstance(s, FiniteBasis) for s in R.subgroups[1:])

    def test_four_blocks_finite_members(self):
        R = realize_ftfa(FOUR_BLOCKS)
        m = 5
        z = (0,) * m
        H2 = subgroup_basis(2, m, [g(0, z), g(1, z), g(4, z), g(5, z), t(unit(m, 5))])
        H3 = subgroup_basis(2, m, [g(0, z), g(1, unit(m, 1)), g(2, z), g(3, z), t(unit(m, 2)),
                                   g(4, z), g(5, z), t(unit(m, 4))])
        H4 = subgroup_basis(2, m, [g(2, z), g(3, unit(m, 2)), t(diff(m, 3, 2)),
                                   g(4, z), g(5, unit(m, 4)), t(diff(m, 5, 4))])
        assert same_subgroup(R.subgroups[1].basis, H2)
        assert same_subgroup(R.subgroups[2].basis, H3)
        assert same_subgroup(R.subgroups[3].basis, H4)

    def test_four_blocks_parametric(self):
        H1 = realize_ftfa(FOUR_BLOCKS).subgroups[0]
        m = 5
        z = (0,) * m
        assert H1.member(g(-2, z))
        assert H1.member(FtfaElement(conjugate(u_letter(-2), u_letter(-1)), z))
        assert not H1.member(g(-1, z))
        assert H1.member(g(2, z))
        assert H1.member(g(3, unit(m, 3)))
        assert not H1.member(g(2, unit(m, 1)))
        assert H1.member(FtfaElement(multiply(u_letter(-2), u_letter(2)), unit(m, 3)))
        assert not H1.member(g(0, z))

    def test_m_formula(self):
        for c in [FOUR_BLOCKS, conf(3, [1, 2, 3]), conf(3, [1, 2], [2, 3]), conf(2, [1])]:
            R = realize_ftfa(c)
            assert R.m == sum(len(s) - 1 for s in c.sets())

    def test_almost_zero_family(self):
        R = realize_ftfa(conf(3, [1, 2, 3]))
        assert R.m == 2
        z = (0, 0)
        expected = [
            subgroup_basis(2, 2, [g(0, z), g(1, z), t((0, 1))]),
            subgroup_basis(2, 2, [g(0, z), g(1, z), t((1, 0))]),
            subgroup_basis(2, 2, [g(0, z), g(1, (1, 0)), t((-1, 1))]),
        ]
        for spec, B in zip(R.subgroups, expected):
            assert same_subgroup(spec.basis, B)

    @pytest.mark.parametrize("k", [3, 4])
    def test_full_almost_zero_lattice_ranks(self, k):
        R = realize_ftfa(Configuration.almost_zero(k, range(1, k + 1)))
        for spec in R.subgroups:
            assert spec.basis.lattice.rank >= k - 2

    def test_zero(self):
        R = realize_ftfa(Configuration.zero(3))
        assert R.m == 0
        for spec in R.subgroups:
            assert spec.basis.rank == 0 and spec.basis.lattice.is_trivial

    def test_singletons_only(self):
        R = realize_ftfa(conf(2, [1], [2]))
        assert R.m == 0
        assert all(isinstance(s, Parametric) for s in R.subgroups)
        assert R.subgroups[0].pieces[0].factor != R.subgroups[1].pieces[0].factor

    def test_verify_supports_without_singletons(self):
        sets = [[1, 2], [1, 3], [2, 3], [1, 2, 3]]
        for bits in range(1 << len(sets)):
            c = conf(3, *[s for i, s in enumerate(sets) if bits >> i & 1])
            report = verify(c, realize_ftfa(c))
            assert report.passed, str(c)
            assert set(report.counts()) <= {"VerifiedFG", "VerifiedNonFG"}


class TestRealizeFree:
    def test_not_howson(self):
        with pytest.raises(NotHowson):
            realize_free(conf(2, [1, 2]))

    def test_zero(self):
        R = realize_free(Configuration.zero(2))
        assert R.m == 0
        assert all(isinstance(s, FiniteBasis) and s.basis.rank == 0 for s in R.subgroups)

    def test_singleton(self):
        R = realize_free(conf(2, [1]))
        H1, H2 = R.subgroups
        assert isinstance(H1, Parametric)
        assert isinstance(H2, FiniteBasis) and H2.basis.rank == 0

    def test_parametric_exactly_on_singletons(self):
        for c in [Configuration.one(3), conf(3, [1], [1, 2]), conf(3, [1], [2], [1, 2], [1, 3], [1, 2, 3]),
                  conf(3, [2], [1, 2], [2, 3], [1, 2, 3])]:
            assert is_howson(c)
            R = realize_free(c)
            for i, spec in enumerate(R.subgroups, start=1):
                assert isinstance(spec, Parametric) == (c([i]) == 1)

    def test_verify(self):
        c = conf(3, [1], [1, 2], [1, 3], [1, 2, 3])
        report = verify(c, realize_free(c))
        assert report.passed
        for indices in ([1], [1, 2], [1, 3], [1, 2, 3]):
            assert report.entry(indices).verdict == "WitnessedNonFG"
        assert report.entry([2, 3]).verdict == "VerifiedFG"


class TestRealizationAlgebra:
    def test_extend_by_zero(self):
        c = conf(2, [1, 2])
        R = extend_by_zero(realize_ftfa(c))
        assert R.k == 3
        assert verify(delta_sum(c, Configuration.zero(2), 0), R).passed

    def test_extend_by_one(self):
        c = conf(2, [1, 2])
        R = extend_by_one(realize_ftfa(c))
        target = delta_sum(c, Configuration.one(2), 1)
        assert R.k == 3
        assert isinstance(R.subgroups[2], Parametric)
        report = verify(target, R)
        assert report.passed
        assert report.entry([1, 2]).verdict == "VerifiedNonFG"
        assert report.entry([3]).verdict == "WitnessedNonFG"

    def test_join(self):
        c1 = Configuration.almost_zero(3, [1, 2])
        c2 = Configuration.almost_zero(3, [2, 3])
        R = join_realizations(realize_ftfa(c1), realize_ftfa(c2))
        assert R.m == 2
        assert R.letter_range == (0, 4)
        assert verify(join(c1, c2), R).passed

    def test_join_k_mismatch(self):
        with pytest.raises(KMismatch):
            join_realizations(realize_ftfa(Configuration.zero(2)), realize_ftfa(Configuration.zero(3)))
