"""Ortak test yardımcıları ve örnek alt gruplar"""

import pytest

from ftfa import FtfaElement, subgroup_basis
from words import parse_word


def elem(word, vector=()):
    return FtfaElement(parse_word(word), tuple(vector))


def sub(n, m, gens):
    """gens: [(kelime metni, vektör), ...]"""
    return subgroup_basis(n, m, [elem(w, v) for w, v in gens])


def unit(m, i):
    """1 tabanlı e_i"""
    return tuple(1 if j == i - 1 else 0 for j in range(m))


@pytest.fixture
def free_pair():
    """⟨x, y⟩ ve ⟨xt, y⟩, F_2 x Z içinde"""
    return sub(2, 1, [("x", [0]), ("y", [0])]), sub(2, 1, [("x", [1]), ("y", [0])])


@pytest.fixture
def factor_position_pair():
    """⟨x^4, y⟩ ve ⟨xy, yx⟩: serbest çarpan konumunda, kesişimleri aşikâr"""
    return sub(2, 0, [("x^4", []), ("y", [])]), sub(2, 0, [("xy", []), ("yx", [])])


def random_word(rng, n, max_len):
    out = []
    for _ in range(rng.randint(0, max_len)):
        letter = rng.choice([a for a in range(-n, n + 1) if a and (not out or a != -out[-1])])
        out.append(letter)
    return tuple(out)


def random_subgroup(rng, n=2, m=2, max_gens=3, max_len=3, max_entry=2):
    """Küçük rastgele sonlu üretilmiş alt grup"""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        vec = tuple(rng.randint(-max_entry, max_entry) for _ in range(m))
        gens.append(FtfaElement(random_word(rng, n, max_len), vec))
    return subgroup_basis(n, m, gens)


@pytest.fixture
def almost_zero_triple():
    """x, y üzerinde c_{{1,2,3}} ailesi, m=2"""
    return (
        sub(2, 2, [("x", [0, 0]), ("y", [0, 0]), ("1", [0, 1])]),
        sub(2, 2, [("x", [0, 0]), ("y", [0, 0]), ("1", [1, 0])]),
        sub(2, 2, [("x", [0, 0]), ("y", [1, 0]), ("1", [-1, 1])]),
    )
